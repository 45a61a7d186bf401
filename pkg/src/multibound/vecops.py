"""Low-level arithmetic on exponent vectors.

Monomials are plain tuples of non-negative ints and a generating set is a
tuple of such vectors.  Canonical form for a generating set: deduplicated,
divisibility-minimal, sorted by (total degree, lexicographic).  The typed
API in :mod:`multibound.monomial` wraps these; the hot loops elsewhere in
the package call them directly.

All functions are pure and all values immutable, so everything here is safe
to share between threads.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Vec = tuple[int, ...]


def degree(v: Vec) -> int:
    return sum(v)


def divides(a: Vec, b: Vec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def join(a: Vec, b: Vec) -> Vec:
    """Componentwise max, i.e. the exponent vector of lcm(x^a, x^b)."""
    return tuple(x if x >= y else y for x, y in zip(a, b))


def multiply(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def quotient(g: Vec, m: Vec) -> Vec:
    """Exponent vector of x^g : x^m, clamped at zero componentwise."""
    return tuple(x - y if x > y else 0 for x, y in zip(g, m))


def support(v: Vec) -> Vec:
    return tuple(i for i, x in enumerate(v) if x)


def squarefree_part(v: Vec) -> Vec:
    return tuple(1 if x else 0 for x in v)


def sort_key(v: Vec) -> tuple[int, Vec]:
    return (sum(v), v)


def minimalize(vecs: Iterable[Vec]) -> tuple[Vec, ...]:
    """Divisibility-minimal elements of ``vecs``, canonically ordered.

    Candidates are scanned in ascending degree, so each one only has to be
    tested against already-kept vectors of strictly smaller degree (equal
    degree distinct monomials never divide each other).
    """
    uniq = sorted(set(vecs), key=sort_key)
    if not uniq:
        return ()
    if sum(uniq[0]) == 0:
        # 1 divides everything: the unit ideal.
        return (uniq[0],)
    kept: list[Vec] = []
    kept_deg: list[int] = []
    for v in uniq:
        dv = sum(v)
        dominated = False
        for u, du in zip(kept, kept_deg):
            if du >= dv:
                break
            if divides(u, v):
                dominated = True
                break
        if not dominated:
            kept.append(v)
            kept_deg.append(dv)
    return tuple(kept)


def contains(gens: Sequence[Vec], v: Vec) -> bool:
    """Membership of x^v in the ideal generated by ``gens`` (canonical order)."""
    dv = sum(v)
    for g in gens:
        if sum(g) > dv:
            return False
        if divides(g, v):
            return True
    return False


def colon(gens: Sequence[Vec], m: Vec) -> tuple[Vec, ...]:
    return minimalize(quotient(g, m) for g in gens)


def product(a: Sequence[Vec], b: Sequence[Vec]) -> tuple[Vec, ...]:
    return minimalize(multiply(x, y) for x in a for y in b)


def power(gens: Sequence[Vec], k: int) -> tuple[Vec, ...]:
    """Canonical generators of the k-th power (k >= 1, gens canonical)."""
    out = tuple(gens)
    for _ in range(k - 1):
        out = product(out, gens)
    return out


def radical(gens: Sequence[Vec]) -> tuple[Vec, ...]:
    return minimalize(squarefree_part(g) for g in gens)
