"""Exact invariants of monomial ideals and the asymptotics of their powers.

The library computes, in exact arithmetic, the minimal graded Betti table
of A/I for a monomial ideal I, the derived shift bounds U(I) and L(I), the
Hilbert series with dimension, height and multiplicity, the Assh data with
localized lengths and multiplicities, reduction tests, and a sweep over
powers I^k that detects the linear growth of regularity and the exact
limit of e(A/I^k) / U(I^k).
"""

from .asymptotics import (
    INCONCLUSIVE,
    PASS,
    VIOLATION,
    Classification,
    EPolyCheck,
    LimitReport,
    LinearFit,
    PowerRecord,
    SweepResult,
    Verdict,
    classify,
    e_polynomial_check,
    fit_regularity,
    fit_strands,
    limit_ratio,
    power_sweep,
    verify_upper_bound,
)
from .decomposition import (
    AsshData,
    AsshEntry,
    VariablePrime,
    assh,
    assh_data,
    e_invariant,
    is_reduction,
    local_length,
    local_multiplicity,
    localize,
    minimal_primes,
    multiplicity_via_assh,
)
from .errors import (
    ArityMismatchError,
    ConsistencyError,
    DomainError,
    FitError,
    MultiboundError,
    ParseError,
    ResourceLimitError,
    StabilizationError,
    UsageError,
)
from .hilbert import (
    HilbertData,
    dimension,
    height,
    hilbert_data,
    multiplicity,
    series_coefficients,
    series_numerator,
    standard_monomial_count,
)
from .ideal_io import dump_ideal, ideal_to_dict, load_ideal, parse_ideal_text, serialize_ideal
from .monomial import Monomial, MonomialIdeal, Ring, minimalize
from .resolution import (
    DEFAULT_CAPS,
    BettiTable,
    ResourceCaps,
    betti_table,
    bounds,
    lcm_lattice,
    reduced_homology_dims,
    taylor_betti_table,
    upper_koszul_faces,
)

__version__ = "0.1.0"
