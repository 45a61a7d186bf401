"""Minimal primes, localized invariants, E, and reduction testing."""

from random import Random

import pytest

from multibound import hilbert
from multibound.decomposition import (
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
from multibound.errors import DomainError
from multibound.monomial import MonomialIdeal, Ring
from multibound.sampling import random_ideal, random_primary_pair

from .helpers import brute_minimal_covers, ideal

TRIANGLE = ideal(3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
CI23 = ideal(2, [(2, 0), (0, 3)])
M2 = ideal(2, [(2, 0), (1, 1), (0, 2)])
X2XY = ideal(2, [(2, 0), (1, 1)])


def test_minimal_primes_examples():
    assert [p.support for p in minimal_primes(TRIANGLE)] == [
        (0, 1), (0, 2), (1, 2)]
    assert [p.support for p in minimal_primes(X2XY)] == [(0,)]
    assert [p.support for p in minimal_primes(CI23)] == [(0, 1)]


def test_minimal_primes_against_subset_sweep():
    rng = Random(137)
    for _ in range(25):
        I = random_ideal(rng, n=4, max_gens=5)
        got = {frozenset(p.support) for p in minimal_primes(I)}
        supports = [set(i for i, e in enumerate(v) if e) for v in I.vectors]
        assert got == brute_minimal_covers(supports, 4)


def test_assh_keeps_only_minimal_height():
    I = ideal(3, [(1, 0, 1), (0, 1, 1)])  # (xz, yz)
    assert {p.support for p in minimal_primes(I)} == {(2,), (0, 1)}
    assert [p.support for p in assh(I)] == [(2,)]
    assert [p.support for p in assh(CI23)] == [(0, 1)]


def test_min_prime_height_agrees_with_hilbert_height():
    rng = Random(139)
    for _ in range(20):
        I = random_ideal(rng, n=3, max_gens=5)
        assert min(p.height for p in minimal_primes(I)) == hilbert.height(I)


def test_localize():
    loc = localize(TRIANGLE, VariablePrime((0, 1)))
    assert loc.vectors == ((0, 1), (1, 0))
    assert localize(X2XY, VariablePrime((0,))).vectors == ((1,),)
    assert localize(CI23, VariablePrime((0, 1))) == CI23
    with pytest.raises(DomainError):
        localize(TRIANGLE, VariablePrime((0,)))


def test_local_length_examples():
    assert local_length(TRIANGLE, VariablePrime((0, 1))) == 1
    assert local_length(X2XY, VariablePrime((0,))) == 1
    assert local_length(M2, VariablePrime((0, 1))) == 3


def test_local_multiplicity_examples():
    assert local_multiplicity(CI23, VariablePrime((0, 1))) == 6
    assert local_multiplicity(TRIANGLE, VariablePrime((0, 1))) == 1
    assert local_multiplicity(M2, VariablePrime((0, 1))) == 4


def test_local_multiplicity_prime_must_be_assh():
    I = ideal(3, [(1, 0, 1), (0, 1, 1)])
    with pytest.raises(DomainError):
        local_multiplicity(I, VariablePrime((0, 1)))


def test_e_invariant_examples():
    assert e_invariant(TRIANGLE) == 3
    assert e_invariant(M2) == 4
    assert e_invariant(CI23) == 6
    assert e_invariant(X2XY) == 1


def test_e_equals_multiplicity_for_squarefree():
    rng = Random(149)
    samples = [TRIANGLE, ideal(3, [(1, 0, 1), (0, 1, 1)])]
    samples += [random_ideal(rng, n=3, max_gens=4, squarefree=True)
                for _ in range(10)]
    for I in samples:
        assert e_invariant(I) == hilbert.multiplicity(I), I


def test_associativity_formula():
    rng = Random(151)
    samples = [TRIANGLE, CI23, M2, X2XY]
    samples += [random_ideal(rng, n=3, max_gens=5) for _ in range(20)]
    for I in samples:
        assert multiplicity_via_assh(I) == hilbert.multiplicity(I), I


def test_associativity_for_powers():
    rng = Random(157)
    for _ in range(6):
        I = random_ideal(rng, n=3, max_gens=4, max_exp=2)
        for k in (2, 3):
            Ik = I.power(k)
            assert multiplicity_via_assh(Ik) == hilbert.multiplicity(Ik)


def test_assh_data_cross_checks():
    data = assh_data(TRIANGLE)
    assert data.E == 3
    assert sum(e.local_length for e in data.entries) == 3
    assert {e.prime.support for e in data.entries} == {(0, 1), (0, 2), (1, 2)}


def test_e_invariant_scales_like_k_to_the_c():
    for I, c in ((TRIANGLE, 2), (M2, 2), (X2XY, 1)):
        E = e_invariant(I)
        for k in (2, 3):
            assert e_invariant(I.power(k)) == k**c * E


def test_is_reduction_examples():
    J = ideal(2, [(2, 0), (0, 2)])
    assert is_reduction(J, M2) == (True, 1)
    assert is_reduction(M2, M2) == (True, 0)
    x2 = ideal(2, [(2, 0)])
    maximal = MonomialIdeal.maximal(Ring.default(2))
    assert is_reduction(x2, maximal, m_max=6) == (False, None)
    with pytest.raises(DomainError):
        is_reduction(maximal, M2)  # (x, y) is not inside m^2


def test_reduction_preserves_e_invariant():
    pairs = [(ideal(2, [(2, 0), (0, 2)]), M2),
             (ideal(2, [(3, 0), (0, 3)]),
              MonomialIdeal.maximal(Ring.default(2)).power(3))]
    for J, I in pairs:
        ok, _ = is_reduction(J, I)
        assert ok
        assert e_invariant(J) == e_invariant(I)


def test_rees_biconditional_on_primary_pairs():
    rng = Random(163)
    full = VariablePrime((0, 1, 2))
    seen = 0
    while seen < 8:
        J, I = random_primary_pair(rng, n=3, max_exp=2)
        ok, _ = is_reduction(J, I, m_max=10)
        same_mult = (local_multiplicity(J, full) == local_multiplicity(I, full))
        assert ok == same_mult, (J, I)
        seen += 1
