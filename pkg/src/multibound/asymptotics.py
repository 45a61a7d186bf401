"""Power sweeps: regularity growth, the e(A/I^k) <= U(I^k) check, limits.

For k large the regularity of I^k is exactly linear, reg(I^k) = q k + r,
and each strand reg_i(I^k) is linear with the same slope q.  The ratio
e(A/I^k) / U(I^k) then converges to E(I) / q^c where E(I) is the
normalized leading coefficient of k -> e(A/I^k) and c = height I.

q is always detected empirically from the computed tail, never inferred
from generator degrees, because linearity is only guaranteed eventually
and no effective bound is available.  "For k large" is operationalized as
"for every computed k at or past the fit's stabilization index k0"; a
failure below k0 is reported as information, not as a violation.

Per-k work items are independent; verdict assembly is a deterministic
reduction over them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import decomposition, hilbert
from .errors import ConsistencyError, DomainError, FitError, MultiboundError, \
    ResourceLimitError, StabilizationError
from .monomial import MonomialIdeal
from .resolution import DEFAULT_CAPS, ResourceCaps, betti_table, bounds

PASS = "PASS"
VIOLATION = "VIOLATION"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class PowerRecord:
    """Invariants of a single power I^k (heights taken from I itself)."""

    k: int
    reg: int
    reg_strands: tuple[int, ...]
    e: int
    U: Fraction
    L: Fraction
    ratio: Fraction


@dataclass(frozen=True)
class SweepResult:
    ideal: MonomialIdeal
    field_char: int
    K: int
    c: int
    records: tuple[PowerRecord, ...]
    truncated_at: int | None = None
    failure: str | None = None


@dataclass(frozen=True)
class LinearFit:
    """Exact-linear tail of an integer sequence indexed by k = 1, 2, ..."""

    q: int
    r: int
    k0: int
    validated: bool


@dataclass(frozen=True)
class Classification:
    radical_squarefree: bool
    monomial_different_degrees: bool
    zero_dim_different_degrees: bool
    complete_intersection: bool
    theorem_applies: bool
    strict_expected: bool


@dataclass(frozen=True)
class LimitReport:
    E: int
    q: int
    c: int
    limit: Fraction
    strict_expected: bool


@dataclass(frozen=True)
class EPolyCheck:
    ok: bool
    K: int
    c: int
    e_values: tuple[int, ...]
    diffs: tuple[int, ...]
    tail_constant: int | None
    expected: int
    tail_length: int


@dataclass(frozen=True)
class Verdict:
    ideal: MonomialIdeal
    field_char: int
    K: int
    status: str
    sweep: SweepResult
    classification: Classification
    fit: LinearFit | None = None
    strand_fits: tuple[LinearFit | None, ...] = ()
    limit: LimitReport | None = None
    annotations: tuple[str, ...] = ()


# -- sweep ---------------------------------------------------------------


def power_sweep(I: MonomialIdeal, K: int, field_char: int = 0,
                caps: ResourceCaps = DEFAULT_CAPS) -> SweepResult:
    """Records for I^k, k = 1..K, with c = height(I) held fixed.

    Resource errors do not destroy the work already done: the sweep comes
    back truncated, marked with the k it stopped at and the reason.
    """
    I._require_proper_nonzero("power_sweep")
    if K < 3:
        raise DomainError(f"power_sweep wants K >= 3, got {K}")
    c = hilbert.height(I)
    records: list[PowerRecord] = []
    Ik = I
    for k in range(1, K + 1):
        if k > 1:
            Ik = Ik.product(I)
        if hilbert.height(Ik) != c:
            raise ConsistencyError(
                f"height changed from {c} to {hilbert.height(Ik)} at k = {k}")
        try:
            table = betti_table(Ik, field_char=field_char, caps=caps)
        except ResourceLimitError as err:
            return SweepResult(I, field_char, K, c, tuple(records),
                               truncated_at=k, failure=str(err))
        U, L = bounds(table, c)
        e = hilbert.multiplicity(Ik)
        records.append(PowerRecord(
            k=k,
            reg=table.regularity(),
            reg_strands=tuple(table.reg_i(i) for i in range(c)),
            e=e,
            U=U,
            L=L,
            ratio=Fraction(e) / U,
        ))
    return SweepResult(I, field_char, K, c, tuple(records))


# -- fits ----------------------------------------------------------------


def fit_regularity(values, first_k: int = 1) -> LinearFit:
    """Longest exact-linear suffix of an integer sequence.

    Validation needs at least three points.  Anything shorter raises a
    FitError carrying the raw values so the caller can enlarge K.
    """
    vals = tuple(values)
    if len(vals) < 3:
        raise DomainError(f"need at least 3 values to fit, got {len(vals)}")
    diffs = [b - a for a, b in zip(vals, vals[1:])]
    i = len(diffs) - 1
    while i > 0 and diffs[i - 1] == diffs[-1]:
        i -= 1
    points = len(vals) - i
    if points < 3:
        raise FitError(
            f"no exact-linear suffix of length >= 3 in {vals}", values=vals)
    q = diffs[-1]
    if q <= 0:
        raise FitError(
            f"linear tail of {vals} has nonpositive slope {q}", values=vals)
    k0 = first_k + i
    return LinearFit(q=q, r=vals[i] - q * k0, k0=k0, validated=True)


def fit_strands(sweep: SweepResult) -> tuple[LinearFit | None, ...]:
    """Per-strand fits of reg_i(I^k); a strand that fails to fit is None.

    All strands that do validate must share the same slope q.
    """
    fits: list[LinearFit | None] = []
    for i in range(sweep.c):
        try:
            fits.append(fit_regularity([r.reg_strands[i] for r in sweep.records]))
        except FitError:
            fits.append(None)
    slopes = {f.q for f in fits if f is not None}
    if len(slopes) > 1:
        raise ConsistencyError(f"strand slopes disagree: {sorted(slopes)}")
    return tuple(fits)


# -- classification and limits --------------------------------------------


def classify(I: MonomialIdeal) -> Classification:
    """Which of the verified ideal classes I falls in.

    "Generators in different degrees" is read as "not equigenerated"; the
    stricter pairwise-distinct predicate stays available on the ideal for
    inspection but does not drive the flags.  Complete intersections of
    monomials are recognized by generator count equal to height.
    """
    I._require_proper_nonzero("classify")
    squarefree = I.is_squarefree()
    different = not I.is_equigenerated()
    zero_dim = I.is_zero_dimensional()
    ci = len(I.gens) == hilbert.height(I)
    flags = (squarefree, different, zero_dim and different)
    return Classification(
        radical_squarefree=squarefree,
        monomial_different_degrees=different,
        zero_dim_different_degrees=zero_dim and different,
        complete_intersection=ci,
        theorem_applies=any(flags),
        strict_expected=different or (zero_dim and different)
        or (squarefree and not ci),
    )


def limit_ratio(I: MonomialIdeal, fit: LinearFit) -> LimitReport:
    """Exact limit of e(A/I^k) / U(I^k), namely E(I) / q^c."""
    if not fit.validated:
        raise DomainError("limit_ratio needs a validated fit")
    E = decomposition.e_invariant(I)
    c = hilbert.height(I)
    return LimitReport(
        E=E, q=fit.q, c=c,
        limit=Fraction(E, fit.q**c),
        strict_expected=classify(I).strict_expected,
    )


# -- the verdict -----------------------------------------------------------


def verify_upper_bound(I: MonomialIdeal, K: int = 4, field_char: int = 0,
                       caps: ResourceCaps = DEFAULT_CAPS) -> Verdict:
    """Sweep I^k, fit the regularity, and adjudicate e <= U on the tail.

    PASS requires: e(A/I^k) <= U(I^k) for every computed k at or past the
    fit's k0, limit <= 1, and limit < 1 whenever the classification makes
    strictness expected.  Any failed check yields VIOLATION with the data
    attached.  Resource or fit failures yield INCONCLUSIVE, never a silent
    pass.
    """
    classification = classify(I)
    annotations: list[str] = []
    sweep = power_sweep(I, K, field_char=field_char, caps=caps)
    if sweep.truncated_at is not None:
        annotations.append(
            f"sweep truncated at k = {sweep.truncated_at}: {sweep.failure}")
        if len(sweep.records) < 3:
            return Verdict(I, field_char, K, INCONCLUSIVE, sweep,
                           classification, annotations=tuple(annotations))
    try:
        fit = fit_regularity([r.reg for r in sweep.records])
    except FitError as err:
        annotations.append(f"{err}; retry with K = {K + 2}")
        return Verdict(I, field_char, K, INCONCLUSIVE, sweep, classification,
                       annotations=tuple(annotations))
    strands = fit_strands(sweep)
    for i, f in enumerate(strands):
        if f is None:
            annotations.append(f"strand {i} did not validate at K = {K}")
    try:
        limit = limit_ratio(I, fit)
    except StabilizationError as err:
        annotations.append(str(err))
        return Verdict(I, field_char, K, INCONCLUSIVE, sweep, classification,
                       fit=fit, strand_fits=strands,
                       annotations=tuple(annotations))

    tail_violations = [r.k for r in sweep.records if r.k >= fit.k0 and r.e > r.U]
    head_failures = [r.k for r in sweep.records if r.k < fit.k0 and r.e > r.U]
    if head_failures:
        annotations.append(
            f"e > U below the stabilization index k0 = {fit.k0} at k = "
            f"{head_failures} (informational)")
    ok_tail = not tail_violations
    ok_limit = limit.limit <= 1
    ok_strict = (not limit.strict_expected) or limit.limit < 1
    if not ok_tail:
        annotations.append(f"e > U on the validated tail at k = {tail_violations}")
    if not ok_limit:
        annotations.append(f"limit {limit.limit} exceeds 1")
    if not ok_strict:
        annotations.append(
            f"limit {limit.limit} is not strictly below 1 although strictness "
            "is expected for this class")
    if limit.limit == 1:
        annotations.append("extremal: limit equals 1 exactly")
    status = PASS if (ok_tail and ok_limit and ok_strict) else VIOLATION
    return Verdict(I, field_char, K, status, sweep, classification,
                   fit=fit, strand_fits=strands, limit=limit,
                   annotations=tuple(annotations))


# -- polynomiality of k -> e(A/I^k) ----------------------------------------


def e_polynomial_check(I: MonomialIdeal, K: int | None = None) -> EPolyCheck:
    """Check that e(A/I^k) grows polynomially of degree c with top term E(I).

    The c-th finite differences must be constant on the tail and equal to
    E(I); the (c+1)-th differences must vanish there.  Returns ok = False
    with all the data attached when the tail is too short to judge.
    """
    I._require_proper_nonzero("e_polynomial_check")
    c = hilbert.height(I)
    if K is None:
        K = c + 4
    if K < c + 3:
        raise DomainError(f"e_polynomial_check wants K >= c + 3 = {c + 3}, got {K}")
    e_values = []
    Ik = I
    for k in range(1, K + 1):
        if k > 1:
            Ik = Ik.product(I)
        e_values.append(hilbert.multiplicity(Ik))
    seq = list(e_values)
    for _ in range(c):
        seq = [b - a for a, b in zip(seq, seq[1:])]
    tail = 1
    while tail < len(seq) and seq[-tail - 1] == seq[-1]:
        tail += 1
    expected = decomposition.e_invariant(I)
    ok = tail >= 2 and bool(seq) and seq[-1] == expected
    return EPolyCheck(
        ok=ok, K=K, c=c,
        e_values=tuple(e_values),
        diffs=tuple(seq),
        tail_constant=seq[-1] if seq else None,
        expected=expected,
        tail_length=tail,
    )
