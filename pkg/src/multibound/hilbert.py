"""Hilbert series of quotients by monomial ideals.

The series of A/I is represented by its integer numerator h(t), with
HS(t) = h(t) / (1 - t)^n.  From the numerator: the height c of I is the
multiplicity of the root t = 1, the dimension of A/I is n - c, and the
multiplicity e(A/I) is g(1) where h(t) = (1 - t)^c g(t).

The numerator comes from the short exact sequence obtained by peeling one
generator m off I = (J, m):

    h(A/I) = h(A/J) - t^(deg m) * h(A/(J : m))

Generators are peeled in an order that makes every colon branch drop the
pivot variable entirely (sort by the exponent of the most frequently
occurring variable and peel from the top), so recursion depth is bounded
by the number of variables.  Results are memoized on the canonical
generating set; the memo is only ever written with deterministic values,
so sharing it between threads is harmless.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from math import comb

from . import vecops
from .errors import ConsistencyError, DomainError
from .monomial import MonomialIdeal
from .vecops import Vec

Poly = tuple[int, ...]

_MEMO: dict[tuple[Vec, ...], Poly] = {}


def clear_cache() -> None:
    _MEMO.clear()


# -- integer polynomial helpers (dense coefficient tuples) ------------


def _trim(p: list[int]) -> Poly:
    i = len(p)
    while i > 1 and p[i - 1] == 0:
        i -= 1
    return tuple(p[:i])


def _mul(a: Poly, b: Poly) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _sub_shifted(a: Poly, b: Poly, shift: int) -> Poly:
    """a(t) - t^shift * b(t)."""
    out = list(a) + [0] * max(0, shift + len(b) - len(a))
    for j, y in enumerate(b):
        out[shift + j] -= y
    return _trim(out)


# -- numerator recursion ----------------------------------------------


def _components(gens: tuple[Vec, ...]) -> list[tuple[Vec, ...]]:
    """Split generators into groups with pairwise disjoint variable support."""
    n = len(gens[0])
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in gens:
        s = vecops.support(g)
        for j in s[1:]:
            parent[find(j)] = find(s[0])
    groups: dict[int, list[Vec]] = {}
    for g in gens:
        groups.setdefault(find(vecops.support(g)[0]), []).append(g)
    return [tuple(v) for v in groups.values()]


def _pivot_variable(gens: tuple[Vec, ...]) -> int:
    n = len(gens[0])
    counts = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    return max(range(n), key=lambda i: (counts[i], -i))


def _numerator(gens: tuple[Vec, ...]) -> Poly:
    """Numerator for a canonical minimal generating set."""
    if not gens:
        return (1,)
    if sum(gens[0]) == 0:
        return (0,)
    hit = _MEMO.get(gens)
    if hit is not None:
        return hit
    if len(gens) == 1:
        h = _sub_shifted((1,), (1,), sum(gens[0]))
        _MEMO[gens] = h
        return h

    comps = _components(gens)
    if len(comps) > 1:
        h = (1,)
        for comp in comps:
            h = _mul(h, _numerator(comp))
        _MEMO[gens] = h
        return h

    pivot = _pivot_variable(gens)
    order = sorted(gens, key=lambda g: (g[pivot], sum(g), g))
    h: Poly = (1,)
    prefix: list[Vec] = []
    for g in order:
        hc: Poly = (1,) if not prefix else _numerator(vecops.colon(prefix, g))
        h = _sub_shifted(h, hc, sum(g))
        prefix.append(g)
        _MEMO[tuple(sorted(prefix, key=vecops.sort_key))] = h
    return h


def _strip_unit_root(h: Poly) -> tuple[int, Poly]:
    """Write h(t) = (1 - t)^c g(t) with g(1) != 0; return (c, g)."""
    if h == (0,):
        raise DomainError("the zero numerator has no height")
    g = h
    c = 0
    while sum(g) == 0:
        g = _trim(list(accumulate(g))[:-1])
        c += 1
    return c, g


# -- public API --------------------------------------------------------


@dataclass(frozen=True)
class HilbertData:
    """Dimension, height, multiplicity and (when artinian) total length."""

    d: int
    c: int
    e: int
    length: int | None


def series_numerator(I: MonomialIdeal) -> Poly:
    """Numerator h(t) of the Hilbert series of A/I over (1 - t)^n.

    Defined for every ideal: h = 1 for the zero ideal, h = 0 for the unit
    ideal.  Independent of generator order because ideals are canonical.
    """
    return _numerator(I.vectors)


def hilbert_data(I: MonomialIdeal) -> HilbertData:
    if I.is_unit():
        raise DomainError("A/I vanishes for the unit ideal")
    I._require_proper_nonzero("hilbert_data")
    c, g = _strip_unit_root(series_numerator(I))
    e = sum(g)
    if e <= 0:
        raise ConsistencyError(f"computed multiplicity {e} <= 0 for {I}")
    d = I.ring.n - c
    return HilbertData(d=d, c=c, e=e, length=e if d == 0 else None)


def height(I: MonomialIdeal) -> int:
    if I.is_unit():
        raise DomainError("height is undefined for the unit ideal")
    c, _ = _strip_unit_root(series_numerator(I))
    return c


def dimension(I: MonomialIdeal) -> int:
    return I.ring.n - height(I)


def multiplicity(I: MonomialIdeal) -> int:
    I._require_proper_nonzero("multiplicity")
    return hilbert_data(I).e


def standard_monomial_count(I: MonomialIdeal, t: int) -> int:
    """Number of degree-t monomials outside I, by direct enumeration.

    This is the slow independent oracle for the Hilbert function; it never
    touches the numerator recursion.
    """
    if t < 0:
        raise DomainError("degree must be non-negative")
    gens = I.vectors
    return sum(1 for v in _compositions(t, I.ring.n) if not vecops.contains(gens, v))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def series_coefficients(I: MonomialIdeal, upto: int) -> tuple[int, ...]:
    """Hilbert function values of A/I for degrees 0..upto, from the numerator."""
    h = series_numerator(I)
    n = I.ring.n
    return tuple(
        sum(h[j] * comb(n - 1 + t - j, n - 1) for j in range(min(t, len(h) - 1) + 1))
        for t in range(upto + 1)
    )
