"""Minimal primes, localized invariants and reduction testing.

For a monomial ideal every minimal prime is generated by a subset of the
variables, and such a subset is minimal over I exactly when it is an
inclusion-minimal transversal of the generator supports.  Localizing at a
variable prime sets the other variables to 1, which always leaves an ideal
primary to the maximal ideal of the smaller ring.

e(A/P) = 1 for every variable prime P throughout: A/P is itself a
polynomial ring on the complementary variables.

Lengths of artinian quotients are counted by direct enumeration inside the
box cut out by the minimal pure powers; this is deliberately a different
route from the Hilbert series machinery so the two can cross-check each
other through the associativity identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from . import vecops
from .errors import ConsistencyError, DomainError, StabilizationError
from .monomial import MonomialIdeal
from .vecops import Vec


@dataclass(frozen=True)
class VariablePrime:
    """Prime generated by the variables whose indices are in ``support``."""

    support: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.support:
            raise DomainError("a variable prime needs a nonempty support")

    @property
    def height(self) -> int:
        return len(self.support)

    def render(self, names: tuple[str, ...]) -> str:
        return "(" + ", ".join(names[i] for i in self.support) + ")"


@dataclass(frozen=True)
class AsshEntry:
    prime: VariablePrime
    local_length: int
    local_multiplicity: int


@dataclass(frozen=True)
class AsshData:
    entries: tuple[AsshEntry, ...]
    E: int


# -- minimal primes as minimal covers ----------------------------------


def _minimal_sets(sets: set[frozenset[int]]) -> set[frozenset[int]]:
    return {s for s in sets if not any(t < s for t in sets)}


def _min_covers(supports: frozenset[frozenset[int]],
                memo: dict) -> set[frozenset[int]]:
    """All inclusion-minimal transversals, branching on one uncovered edge."""
    if not supports:
        return {frozenset()}
    hit = memo.get(supports)
    if hit is not None:
        return hit
    edge = min(supports, key=lambda s: (len(s), sorted(s)))
    out: set[frozenset[int]] = set()
    for v in sorted(edge):
        rest = frozenset(s for s in supports if v not in s)
        for cover in _min_covers(rest, memo):
            out.add(cover | {v})
    out = _minimal_sets(out)
    memo[supports] = out
    return out


def minimal_primes(I: MonomialIdeal) -> tuple[VariablePrime, ...]:
    I._require_proper_nonzero("minimal_primes")
    supports = frozenset(frozenset(vecops.support(v)) for v in I.vectors)
    covers = _min_covers(supports, {})
    primes = [VariablePrime(tuple(sorted(c))) for c in covers]
    return tuple(sorted(primes, key=lambda P: (P.height, P.support)))


def assh(I: MonomialIdeal) -> tuple[VariablePrime, ...]:
    """Minimal primes of minimal height, i.e. those with dim A/P = dim A/I."""
    primes = minimal_primes(I)
    c = min(P.height for P in primes)
    return tuple(P for P in primes if P.height == c)


# -- localization -------------------------------------------------------


def localize(I: MonomialIdeal, P: VariablePrime) -> MonomialIdeal:
    """Image of I in the local ring at P, as an ideal of K[X_i : i in P].

    Variables outside P become units, so each generator keeps only its
    P-coordinates.  Only minimal primes are accepted: at an embedded or
    non-associated prime the result need not be artinian.
    """
    if P not in minimal_primes(I):
        raise DomainError(f"{P.support} is not a minimal prime of {I}")
    sub = I.ring.restrict(P.support)
    vecs = (tuple(v[i] for i in P.support) for v in I.vectors)
    loc = MonomialIdeal.from_vectors(sub, vecs)
    if not loc.is_zero_dimensional():
        raise ConsistencyError(
            f"localization at the minimal prime {P.support} is not artinian")
    return loc


def _artinian_length(gens: tuple[Vec, ...], nvars: int) -> int:
    """Number of standard monomials of an artinian monomial ideal.

    Enumerates the box below the minimal pure powers; membership spreads
    through the box by the one-step recurrence (v is in the ideal iff v is
    a generator or v minus some unit vector already is).
    """
    dims = [0] * nvars
    for v in gens:
        s = vecops.support(v)
        if len(s) == 1:
            i = s[0]
            dims[i] = v[i] if dims[i] == 0 else min(dims[i], v[i])
    if any(d == 0 for d in dims):
        raise ConsistencyError("no pure power for some variable; ideal not artinian")
    strides = [0] * nvars
    acc = 1
    for i in range(nvars - 1, -1, -1):
        strides[i] = acc
        acc *= dims[i]
    total = acc
    boxed = {v for v in gens if all(a < b for a, b in zip(v, dims))}
    member = bytearray(total)
    count = 0
    point = [0] * nvars
    for flat in range(total):
        hit = False
        for i in range(nvars):
            if point[i] and member[flat - strides[i]]:
                hit = True
                break
        if not hit and tuple(point) in boxed:
            hit = True
        if hit:
            member[flat] = 1
        else:
            count += 1
        for i in range(nvars - 1, -1, -1):
            point[i] += 1
            if point[i] < dims[i]:
                break
            point[i] = 0
    return count


def local_length(I: MonomialIdeal, P: VariablePrime) -> int:
    """Length of the localization at a minimal prime P."""
    loc = localize(I, P)
    return _artinian_length(loc.vectors, loc.ring.n)


def local_multiplicity(I: MonomialIdeal, P: VariablePrime, *,
                       window: int = 3, k_max: int | None = None) -> int:
    """Local multiplicity at P from stabilized finite differences.

    The lengths of the localized powers grow polynomially of degree
    c = height P, so the c-th finite differences become the constant
    c! times the leading coefficient, which is the local multiplicity.
    Stabilization is accepted once the last ``window`` values agree; if
    they do not by ``k_max`` (default c + 8) the raw sequence is attached
    to the error instead of guessing.
    """
    if P not in assh(I):
        raise DomainError(f"{P.support} is not in Assh of {I}")
    loc = localize(I, P)
    c = P.height
    if k_max is None:
        k_max = c + 8
    base = loc.vectors
    cur = base
    lengths = []
    for _ in range(k_max):
        lengths.append(_artinian_length(cur, loc.ring.n))
        cur = vecops.product(cur, base)
    seq = lengths
    for _ in range(c):
        seq = [b - a for a, b in zip(seq, seq[1:])]
    if len(seq) < window or len(set(seq[-window:])) != 1:
        raise StabilizationError(
            f"differences of order {c} not constant over the last {window} of "
            f"{k_max} powers at {P.support}", lengths=tuple(lengths))
    value = seq[-1]
    if value <= 0:
        raise ConsistencyError(f"nonpositive local multiplicity {value}")
    return value


# -- aggregated invariants ----------------------------------------------


def assh_data(I: MonomialIdeal) -> AsshData:
    entries = tuple(
        AsshEntry(P, local_length(I, P), local_multiplicity(I, P))
        for P in assh(I))
    return AsshData(entries=entries, E=sum(e.local_multiplicity for e in entries))


def e_invariant(I: MonomialIdeal) -> int:
    """Sum of the local multiplicities over Assh (each e(A/P) being 1).

    This is the normalized leading coefficient of k -> e(A/I^k).
    """
    return sum(local_multiplicity(I, P) for P in assh(I))


def multiplicity_via_assh(I: MonomialIdeal) -> int:
    """e(A/I) assembled from localized lengths over Assh.

    Independent of the Hilbert series route; the two must agree exactly.
    """
    return sum(local_length(I, P) for P in assh(I))


# -- reduction testing ---------------------------------------------------


def is_reduction(J: MonomialIdeal, I: MonomialIdeal,
                 m_max: int = 10) -> tuple[bool, int | None]:
    """Test whether J * I^m = I^(m+1) for some m <= m_max, J inside I.

    Returns (True, least witness m) on success and (False, None) after
    exhausting m_max.  The negative answer only means "not a reduction up
    to m_max": reduction numbers are unbounded a priori, so exhaustion is
    never a proof.
    """
    J._require_proper_nonzero("is_reduction")
    I._require_proper_nonzero("is_reduction")
    if J.ring.n != I.ring.n:
        raise DomainError("ideals live in different rings")
    if not all(I.contains(g) for g in J.gens):
        raise DomainError("J is not contained in I")
    if J == I:
        return True, 0
    Ipow = I
    for m in range(1, m_max + 1):
        Inext = Ipow.product(I)
        if J.product(Ipow) == Inext:
            return True, m
        Ipow = Inext
    return False, None
