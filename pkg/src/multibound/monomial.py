"""Monomials and monomial ideals in a standard-graded polynomial ring.

An ideal is stored by its unique minimal monomial generating set in
canonical order (ascending degree, then lexicographic on exponent
vectors), so structural equality of two canonical ideals coincides with
equality as ideals.  The zero ideal has an empty generating set; the unit
ideal is generated by the all-zero exponent vector.

Values are immutable after construction; all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import vecops
from .errors import ArityMismatchError, DomainError
from .vecops import Vec

_LETTERS = ("x", "y", "z", "w", "v", "u")


@dataclass(frozen=True)
class Ring:
    """Ambient polynomial ring: number of variables plus display names."""

    n: int
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError("ring needs at least one variable")
        if len(self.names) != self.n:
            raise ArityMismatchError(
                f"{self.n} variables but {len(self.names)} names")
        if len(set(self.names)) != self.n:
            raise DomainError("variable names must be pairwise distinct")

    @classmethod
    def default(cls, n: int) -> "Ring":
        if n <= len(_LETTERS):
            return cls(n, _LETTERS[:n])
        return cls(n, tuple(f"x{i + 1}" for i in range(n)))

    def restrict(self, indices: tuple[int, ...]) -> "Ring":
        """Subring on the given variable indices (used by localization)."""
        return Ring(len(indices), tuple(self.names[i] for i in indices))


@dataclass(frozen=True)
class Monomial:
    exponents: Vec

    def __post_init__(self) -> None:
        if any(e < 0 for e in self.exponents):
            raise DomainError(f"negative exponent in {self.exponents}")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def arity(self) -> int:
        return len(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        _check_arity(self.arity, other.arity)
        return vecops.divides(self.exponents, other.exponents)

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_arity(self.arity, other.arity)
        return Monomial(vecops.join(self.exponents, other.exponents))

    def times(self, other: "Monomial") -> "Monomial":
        _check_arity(self.arity, other.arity)
        return Monomial(vecops.multiply(self.exponents, other.exponents))

    def render(self, names: tuple[str, ...]) -> str:
        parts = []
        for name, e in zip(names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def _check_arity(a: int, b: int) -> None:
    if a != b:
        raise ArityMismatchError(f"mixed arities {a} and {b}")


@dataclass(frozen=True)
class MonomialIdeal:
    ring: Ring
    gens: tuple[Monomial, ...] = field(default=())

    def __post_init__(self) -> None:
        for g in self.gens:
            if g.arity != self.ring.n:
                raise ArityMismatchError(
                    f"generator {g.exponents} does not live in {self.ring.n} variables")

    # -- construction ------------------------------------------------

    @classmethod
    def from_vectors(cls, ring: Ring, vectors) -> "MonomialIdeal":
        vecs = tuple(tuple(v) for v in vectors)
        for v in vecs:
            if len(v) != ring.n:
                raise ArityMismatchError(
                    f"vector {v} does not live in {ring.n} variables")
            if any(e < 0 for e in v):
                raise DomainError(f"negative exponent in {v}")
        return cls(ring, tuple(Monomial(v) for v in vecops.minimalize(vecs)))

    @classmethod
    def zero(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring, (Monomial((0,) * ring.n),))

    @classmethod
    def maximal(cls, ring: Ring) -> "MonomialIdeal":
        """The irrelevant ideal generated by all the variables."""
        n = ring.n
        vecs = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
        return cls(ring, tuple(Monomial(v) for v in vecs))

    # -- basic state -------------------------------------------------

    @property
    def vectors(self) -> tuple[Vec, ...]:
        return tuple(g.exponents for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and self.gens[0].degree == 0

    def is_proper(self) -> bool:
        return not self.is_unit()

    def _require_proper_nonzero(self, what: str) -> None:
        if self.is_zero() or self.is_unit():
            raise DomainError(f"{what} is undefined for the zero or unit ideal")

    # -- ideal arithmetic --------------------------------------------

    def contains(self, m: Monomial) -> bool:
        _check_arity(m.arity, self.ring.n)
        return vecops.contains(self.vectors, m.exponents)

    def power(self, k: int) -> "MonomialIdeal":
        if k < 1:
            raise DomainError(f"power wants k >= 1, got {k}")
        self._require_proper_nonzero("power")
        return MonomialIdeal(
            self.ring, tuple(Monomial(v) for v in vecops.power(self.vectors, k)))

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_same_ring(other)
        return MonomialIdeal(
            self.ring,
            tuple(Monomial(v) for v in vecops.product(self.vectors, other.vectors)))

    def sum(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_same_ring(other)
        return MonomialIdeal.from_vectors(self.ring, self.vectors + other.vectors)

    def intersection(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_same_ring(other)
        vecs = (vecops.join(a, b) for a in self.vectors for b in other.vectors)
        return MonomialIdeal.from_vectors(self.ring, vecs)

    def colon(self, m: Monomial) -> "MonomialIdeal":
        _check_arity(m.arity, self.ring.n)
        return MonomialIdeal(
            self.ring,
            tuple(Monomial(v) for v in vecops.colon(self.vectors, m.exponents)))

    def radical(self) -> "MonomialIdeal":
        if self.is_unit():
            raise DomainError("radical is only computed for proper ideals")
        return MonomialIdeal(
            self.ring, tuple(Monomial(v) for v in vecops.radical(self.vectors)))

    __mul__ = product
    __add__ = sum
    __and__ = intersection

    def _check_same_ring(self, other: "MonomialIdeal") -> None:
        _check_arity(self.ring.n, other.ring.n)

    # -- class predicates --------------------------------------------

    def is_squarefree(self) -> bool:
        self._require_proper_nonzero("is_squarefree")
        return all(e <= 1 for g in self.gens for e in g.exponents)

    def is_zero_dimensional(self) -> bool:
        """True when every variable has a pure power among the generators."""
        self._require_proper_nonzero("is_zero_dimensional")
        pure = set()
        for g in self.gens:
            s = vecops.support(g.exponents)
            if len(s) == 1:
                pure.add(s[0])
        return len(pure) == self.ring.n

    def degree_profile(self) -> tuple[int, ...]:
        self._require_proper_nonzero("degree_profile")
        return tuple(sorted(g.degree for g in self.gens))

    def is_equigenerated(self) -> bool:
        self._require_proper_nonzero("is_equigenerated")
        profile = self.degree_profile()
        return profile[0] == profile[-1]

    def has_pairwise_distinct_degrees(self) -> bool:
        self._require_proper_nonzero("has_pairwise_distinct_degrees")
        profile = self.degree_profile()
        return len(set(profile)) == len(profile)

    # -- display -----------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(g.render(self.ring.names) for g in self.gens) + ")"


def minimalize(ring: Ring, monomials) -> MonomialIdeal:
    """Canonical ideal generated by the given monomials.

    Accepts Monomial instances or raw exponent tuples; an empty collection
    yields the zero ideal.
    """
    vecs = [m.exponents if isinstance(m, Monomial) else tuple(m) for m in monomials]
    return MonomialIdeal.from_vectors(ring, vecs)
