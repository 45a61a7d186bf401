"""Deterministic random monomial ideals for tests and the bundled corpus.

Everything is driven by a caller-supplied random.Random so frozen seeds
reproduce byte-identical ideals.
"""

from __future__ import annotations

from random import Random

from .monomial import MonomialIdeal, Ring


def random_ideal(rng: Random, n: int, max_gens: int = 5, max_exp: int = 3,
                 squarefree: bool = False) -> MonomialIdeal:
    """A proper nonzero minimalized ideal with bounded exponents."""
    ring = Ring.default(n)
    while True:
        count = rng.randint(1, max_gens)
        vecs = []
        for _ in range(count):
            top = 1 if squarefree else max_exp
            v = tuple(rng.randint(0, top) for _ in range(n))
            if any(v):
                vecs.append(v)
        if not vecs:
            continue
        ideal = MonomialIdeal.from_vectors(ring, vecs)
        if not ideal.is_zero() and not ideal.is_unit():
            return ideal


def random_primary_pair(rng: Random, n: int = 3,
                        max_exp: int = 3) -> tuple[MonomialIdeal, MonomialIdeal]:
    """A pair J inside I, both primary to the maximal ideal.

    I carries a pure power of every variable plus a few extra monomials;
    J is built from (possibly raised) pure powers and products of the
    generators of I, so containment holds by construction.
    """
    ring = Ring.default(n)
    pure = [rng.randint(1, max_exp) for _ in range(n)]
    vecs = [tuple(pure[i] if j == i else 0 for j in range(n)) for i in range(n)]
    for _ in range(rng.randint(0, 2)):
        v = tuple(rng.randint(0, max_exp) for _ in range(n))
        if any(v):
            vecs.append(v)
    I = MonomialIdeal.from_vectors(ring, vecs)

    if rng.random() < 0.25:
        return I, I
    gens = I.vectors
    jvecs = []
    for i in range(n):
        bump = rng.choice((0, 0, 1))
        jvecs.append(tuple((pure[i] + bump) if j == i else 0 for j in range(n)))
    for _ in range(rng.randint(0, 2)):
        a = rng.choice(gens)
        b = rng.choice(gens)
        jvecs.append(tuple(x + y for x, y in zip(a, b)))
    J = MonomialIdeal.from_vectors(ring, jvecs)
    return J, I
