"""The bundled regression corpus.

Each entry freezes an ideal together with its expected class tags and,
where the values were derived independently (by hand from Koszul or
staircase resolutions, by localized length counting, or reproduced by the
brute-force oracles in the test suite), the expected exact invariants.
Verification recomputes everything through the full pipeline and demands
exact agreement, so the corpus doubles as the integration test of record.

The two ``random-*`` entries are produced by frozen seeds and carry class
tags only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .asymptotics import PASS, Verdict, classify, verify_upper_bound
from .monomial import MonomialIdeal, Ring
from .resolution import ResourceCaps
from .sampling import random_ideal


@dataclass(frozen=True)
class Expected:
    """Exact invariants an entry must reproduce: e, U, L at k = 1, then q, E, limit."""

    e: int
    U: Fraction
    L: Fraction
    q: int
    E: int
    limit: Fraction
    provenance: str


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    description: str
    vars: tuple[str, ...]
    gens: tuple[tuple[int, ...], ...]
    tags: tuple[str, ...]
    K: int = 4
    max_gens: int = 24
    expected: Expected | None = None

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_vectors(Ring(len(self.vars), self.vars), self.gens)

    def caps(self) -> ResourceCaps:
        return ResourceCaps(max_gens=self.max_gens)


def _maximal_power(n: int, q: int) -> tuple[tuple[int, ...], ...]:
    ring = Ring.default(n)
    return MonomialIdeal.maximal(ring).power(q).vectors


_SQUAREFREE_SEED = 25
_DIFFDEG_SEED = 9


def _random_squarefree() -> tuple[tuple[int, ...], ...]:
    return random_ideal(Random(_SQUAREFREE_SEED), n=4, max_gens=6, squarefree=True).vectors


def _random_diffdeg() -> tuple[tuple[int, ...], ...]:
    return random_ideal(Random(_DIFFDEG_SEED), n=3, max_gens=4, max_exp=3).vectors


def _fr(num: int, den: int = 1) -> Fraction:
    return Fraction(num, den)


_DERIVED = "derived: hand-checked resolutions and localized length counts"
_EXTREMAL = "derived: equality family, e(A/I^k) = U(I^k) for every k"


def entries() -> tuple[CorpusEntry, ...]:
    names4 = ("x", "y", "z", "w")
    out = [
        CorpusEntry(
            "koszul-2", "maximal ideal (x, y)", ("x", "y"),
            ((1, 0), (0, 1)),
            tags=("radical-squarefree", "complete-intersection", "cohen-macaulay",
                  "equality-family"),
            expected=Expected(1, _fr(1), _fr(1), 1, 1, _fr(1), _EXTREMAL)),
        CorpusEntry(
            "koszul-3", "maximal ideal (x, y, z)", ("x", "y", "z"),
            ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
            tags=("radical-squarefree", "complete-intersection", "cohen-macaulay",
                  "equality-family"),
            expected=Expected(1, _fr(1), _fr(1), 1, 1, _fr(1), _EXTREMAL)),
        CorpusEntry(
            "koszul-4", "maximal ideal (x, y, z, w)", names4,
            ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
            tags=("radical-squarefree", "complete-intersection", "cohen-macaulay",
                  "equality-family"),
            max_gens=64,
            expected=Expected(1, _fr(1), _fr(1), 1, 1, _fr(1), _EXTREMAL)),
        CorpusEntry(
            "ci-2-3", "complete intersection (x^2, y^3)", ("x", "y"),
            ((2, 0), (0, 3)),
            tags=("complete-intersection", "cohen-macaulay", "zero-dimensional",
                  "different-degrees"),
            expected=Expected(6, _fr(15, 2), _fr(5), 3, 6, _fr(2, 3), _DERIVED)),
        CorpusEntry(
            "ci-2-4", "complete intersection (x^2, y^4)", ("x", "y"),
            ((2, 0), (0, 4)),
            tags=("complete-intersection", "cohen-macaulay", "zero-dimensional",
                  "different-degrees"),
            expected=Expected(8, _fr(12), _fr(6), 4, 8, _fr(1, 2), _DERIVED)),
        CorpusEntry(
            "triangle", "edge ideal (xy, yz, xz) of the 3-cycle", ("x", "y", "z"),
            ((1, 1, 0), (0, 1, 1), (1, 0, 1)),
            tags=("radical-squarefree", "cohen-macaulay"),
            expected=Expected(3, _fr(3), _fr(3), 2, 3, _fr(3, 4), _DERIVED)),
        CorpusEntry(
            "square", "edge ideal (xy, yz, zw, wx) of the 4-cycle", names4,
            ((1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1)),
            tags=("radical-squarefree",),
            max_gens=64,
            expected=Expected(2, _fr(3), _fr(3), 2, 2, _fr(1, 2), _DERIVED)),
        CorpusEntry(
            "m2-n2", "(x, y)^2", ("x", "y"),
            _maximal_power(2, 2),
            tags=("equality-family", "zero-dimensional", "cohen-macaulay"),
            expected=Expected(3, _fr(3), _fr(3), 2, 4, _fr(1), _EXTREMAL)),
        CorpusEntry(
            "m3-n2", "(x, y)^3", ("x", "y"),
            _maximal_power(2, 3),
            tags=("equality-family", "zero-dimensional", "cohen-macaulay"),
            expected=Expected(6, _fr(6), _fr(6), 3, 9, _fr(1), _EXTREMAL)),
        CorpusEntry(
            "m2-n3", "(x, y, z)^2", ("x", "y", "z"),
            _maximal_power(3, 2),
            tags=("equality-family", "zero-dimensional", "cohen-macaulay"),
            max_gens=64,
            expected=Expected(4, _fr(4), _fr(4), 2, 8, _fr(1), _EXTREMAL)),
        CorpusEntry(
            "m3-n3", "(x, y, z)^3", ("x", "y", "z"),
            _maximal_power(3, 3),
            tags=("equality-family", "zero-dimensional", "cohen-macaulay"),
            max_gens=128,
            expected=Expected(10, _fr(10), _fr(10), 3, 27, _fr(1), _EXTREMAL)),
        CorpusEntry(
            "jx2y2", "(x^2, y^2), a reduction of (x, y)^2", ("x", "y"),
            ((2, 0), (0, 2)),
            tags=("complete-intersection", "cohen-macaulay", "zero-dimensional",
                  "equality-family"),
            expected=Expected(4, _fr(4), _fr(4), 2, 4, _fr(1), _EXTREMAL)),
        CorpusEntry(
            "x2-xy", "(x^2, xy): height one, not unmixed", ("x", "y"),
            ((2, 0), (1, 1)),
            tags=("unclassified",),
            expected=Expected(1, _fr(2), _fr(2), 2, 1, _fr(1, 2), _DERIVED)),
        CorpusEntry(
            "x2-xy-y2", "(x^2, xy, y^2): equigenerated, outside the proven classes",
            ("x", "y"),
            ((2, 0), (1, 1), (0, 2)),
            tags=("unclassified", "equality-family", "zero-dimensional",
                  "cohen-macaulay"),
            expected=Expected(3, _fr(3), _fr(3), 2, 4, _fr(1), _EXTREMAL)),
        CorpusEntry(
            "random-squarefree", f"frozen squarefree sample (seed {_SQUAREFREE_SEED})",
            names4, _random_squarefree(),
            tags=("radical-squarefree",),
            max_gens=64),
        CorpusEntry(
            "random-diffdeg", f"frozen non-equigenerated sample (seed {_DIFFDEG_SEED})",
            ("x", "y", "z"), _random_diffdeg(),
            tags=("different-degrees",),
            max_gens=64),
    ]
    return tuple(out)


def get(name: str) -> CorpusEntry:
    for entry in entries():
        if entry.name == name:
            return entry
    raise KeyError(f"no corpus entry named {name!r}")


@dataclass(frozen=True)
class EntryResult:
    entry: CorpusEntry
    verdict: Verdict
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.verdict.status == PASS and not self.mismatches


def verify_entry(entry: CorpusEntry, field_char: int = 0) -> EntryResult:
    ideal = entry.ideal()
    verdict = verify_upper_bound(ideal, K=entry.K, field_char=field_char,
                                 caps=entry.caps())
    mismatches: list[str] = []
    exp = entry.expected
    if exp is not None and verdict.status == PASS:
        first = verdict.sweep.records[0]
        checks = [
            ("e", exp.e, first.e),
            ("U", exp.U, first.U),
            ("L", exp.L, first.L),
            ("q", exp.q, verdict.fit.q),
            ("E", exp.E, verdict.limit.E),
            ("limit", exp.limit, verdict.limit.limit),
        ]
        for label, want, got in checks:
            if want != got:
                mismatches.append(f"{label}: expected {want}, got {got}")
    if "radical-squarefree" in entry.tags or "different-degrees" in entry.tags:
        cls = classify(ideal)
        if "radical-squarefree" in entry.tags and not cls.radical_squarefree:
            mismatches.append("tag radical-squarefree not reproduced")
        if "different-degrees" in entry.tags and not cls.monomial_different_degrees:
            mismatches.append("tag different-degrees not reproduced")
    return EntryResult(entry=entry, verdict=verdict, mismatches=tuple(mismatches))


def verify_all(field_char: int = 0) -> tuple[EntryResult, ...]:
    return tuple(verify_entry(entry, field_char) for entry in entries())
