"""Brute-force oracles, written independently of the package internals.

Everything here favors the dumbest correct algorithm (full enumeration,
Fraction Gaussian elimination, subset sweeps) so the fast implementations
have something honest to be checked against.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product

from multibound.monomial import MonomialIdeal, Ring


def ideal(nvars: int, vectors) -> MonomialIdeal:
    return MonomialIdeal.from_vectors(Ring.default(nvars), vectors)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def brute_minimal(vectors) -> set:
    vecs = set(map(tuple, vectors))
    return {v for v in vecs if not any(w != v and _divides(w, v) for w in vecs)}


def brute_power(vectors, k: int) -> set:
    vecs = [tuple(v) for v in vectors]
    prods = set()
    for combo in combinations_with_replacement(vecs, k):
        prods.add(tuple(sum(es) for es in zip(*combo)))
    return brute_minimal(prods)


def brute_contains(vectors, v) -> bool:
    return any(_divides(g, v) for g in vectors)


def brute_lcm_lattice(vectors) -> set:
    vecs = [tuple(v) for v in vectors]
    out = set()
    for size in range(1, len(vecs) + 1):
        for combo in combinations(vecs, size):
            out.add(tuple(max(es) for es in zip(*combo)))
    return out


def brute_minimal_covers(supports, n: int) -> set:
    edges = [set(s) for s in supports]
    covers = set()
    for size in range(0, n + 1):
        for combo in combinations(range(n), size):
            s = set(combo)
            if all(s & e for e in edges):
                covers.add(frozenset(combo))
    return {c for c in covers if not any(d < c for d in covers)}


def compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def brute_standard_count(vectors, n: int, t: int) -> int:
    return sum(1 for v in compositions(t, n) if not brute_contains(vectors, v))


def brute_artinian_length(vectors, n: int) -> int:
    """Total standard monomials of an artinian ideal by raw box enumeration."""
    box = []
    for i in range(n):
        pures = [v[i] for v in vectors if sum(v) == v[i]]
        box.append(min(pures))
    return sum(1 for v in product(*(range(b) for b in box))
               if not brute_contains(vectors, v))


def fraction_rank(rows) -> int:
    """Gaussian elimination over Fraction; oracle for the integer routines."""
    m = [[Fraction(x) for x in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    for c in range(nc):
        piv = next((i for i in range(rank, nr) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(nr):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank
