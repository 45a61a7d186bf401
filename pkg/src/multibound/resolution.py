"""Minimal graded Betti numbers of A/I for a monomial ideal I.

Two independent routes are implemented.

The main route works multidegree by multidegree.  For an exponent vector b
let K(b) be the simplicial complex whose faces are the subsets s of the
variables with b - s >= 0 componentwise and x^(b - s) in I.  Then the
multigraded Betti number of the ideal I at b in homological position i is
the dimension of the reduced homology of K(b) in degree i - 1, and

    beta_{i+1, j}(A/I) = sum over b in the lcm lattice with |b| = j
                         of dim H~_{i-1}(K(b)),        beta_{0,0}(A/I) = 1.

Only joins of generator multidegrees can carry homology, so only the lcm
lattice is scanned; the lattice is produced by iterated pairwise joins,
never by enumerating all subsets.

Index conventions here are the classic silent-bug source, so the table
builder cross-checks that the strand i = 1 reproduces the generator
degrees and raises ConsistencyError otherwise; the test suite pins the
offset against Koszul complexes and against the second route.

The second route (the oracle) builds the full Taylor complex on the
generators, with one free summand for every subset of generators, and
minimalizes it: any differential entry that is a nonzero scalar between
summands of equal multidegree is cancelled by the standard Gaussian move
on complexes, which preserves homology.  When no such entry is left the
complex is minimal and the Betti numbers can be read off the surviving
summands.  This costs 2^r basis elements for r generators and is capped
accordingly; it exists to calibrate the homology route, so the two must
never share code paths.

Homology computations for distinct multidegrees are independent; the table
is their order-independent sum, so the module is safe to parallelize over.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial

from . import linalg, vecops
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .monomial import MonomialIdeal
from .vecops import Vec


@dataclass(frozen=True)
class ResourceCaps:
    """Hard limits for the lattice walk; exceeding one raises, never truncates."""

    max_gens: int = 24
    max_lattice: int = 200_000


DEFAULT_CAPS = ResourceCaps()


def _check_field_char(field_char: int) -> None:
    if field_char == 0:
        return
    if field_char < 2 or any(field_char % q == 0 for q in range(2, int(field_char**0.5) + 1)):
        raise DomainError(f"field characteristic must be 0 or prime, got {field_char}")


# -- lcm lattice -------------------------------------------------------


def lcm_lattice(I: MonomialIdeal, caps: ResourceCaps = DEFAULT_CAPS) -> tuple[Vec, ...]:
    """All joins of nonempty subsets of the generator multidegrees.

    Computed as the closure of the atoms under pairwise join with
    deduplication, so the cost is proportional to the lattice size times
    the number of atoms.
    """
    I._require_proper_nonzero("lcm_lattice")
    atoms = I.vectors
    if len(atoms) > caps.max_gens:
        raise ResourceLimitError(
            f"{len(atoms)} generators exceed the cap {caps.max_gens}",
            limit_name="max_gens", limit=caps.max_gens, observed=len(atoms))
    found = set(atoms)
    frontier = list(atoms)
    while frontier:
        fresh = []
        for b in frontier:
            for a in atoms:
                j = vecops.join(a, b)
                if j not in found:
                    found.add(j)
                    fresh.append(j)
                    if len(found) > caps.max_lattice:
                        raise ResourceLimitError(
                            f"lcm lattice exceeds the cap {caps.max_lattice}",
                            limit_name="max_lattice", limit=caps.max_lattice,
                            observed=len(found))
        frontier = fresh
    return tuple(sorted(found, key=vecops.sort_key))


# -- simplicial homology ----------------------------------------------


def upper_koszul_faces(I: MonomialIdeal, b: Vec) -> tuple[tuple[int, ...], ...]:
    """Faces of K(b): variable subsets s with x^(b - s) in I."""
    gens = I.vectors
    n = I.ring.n
    verts = tuple(i for i in range(n) if b[i])
    faces = []
    for size in range(len(verts) + 1):
        for sigma in combinations(verts, size):
            v = list(b)
            for i in sigma:
                v[i] -= 1
            if vecops.contains(gens, tuple(v)):
                faces.append(sigma)
    return tuple(faces)


def _homology_of_grouped(by_dim: dict[int, list[tuple[int, ...]]],
                         field_char: int) -> list[int]:
    """Reduced homology dims for faces grouped by dimension (closed complex).

    Returns [dim H~_{-1}, dim H~_0, ...] up to the top dimension present.
    """
    if not by_dim:
        return []
    top = max(by_dim)
    index: dict[int, dict[tuple[int, ...], int]] = {}
    for d in range(-1, top + 1):
        faces = sorted(by_dim.get(d, []))
        by_dim[d] = faces
        index[d] = {f: i for i, f in enumerate(faces)}

    ranks: dict[int, int] = {}
    for d in range(0, top + 1):
        rows = len(by_dim.get(d - 1, []))
        cols = len(by_dim.get(d, []))
        if rows == 0 or cols == 0:
            ranks[d] = 0
            continue
        mat = [[0] * cols for _ in range(rows)]
        for j, sigma in enumerate(by_dim[d]):
            for t in range(len(sigma)):
                tau = sigma[:t] + sigma[t + 1:]
                mat[index[d - 1][tau]][j] = -1 if t % 2 else 1
        ranks[d] = linalg.rank(mat, field_char)

    dims = []
    for d in range(-1, top + 1):
        dims.append(len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return dims


def reduced_homology_dims(faces, field_char: int = 0) -> list[int]:
    """Reduced homology dimensions of a simplicial complex over an exact field.

    ``faces`` is any iterable of vertex collections; the downward closure is
    taken, so passing just the facets is fine.  The returned list starts at
    H~_{-1}: a complex whose only face is the empty set has H~_{-1} of
    dimension one, while a complex with no faces at all yields an empty
    list (all reduced homology zero).
    """
    _check_field_char(field_char)
    closed: set[tuple[int, ...]] = set()
    for f in faces:
        vs = tuple(sorted(set(f)))
        for size in range(len(vs) + 1):
            closed.update(combinations(vs, size))
    if not closed:
        return []
    by_dim: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for f in closed:
        by_dim[len(f) - 1].append(f)
    return _homology_of_grouped(dict(by_dim), field_char)


# -- Betti tables ------------------------------------------------------


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of A/I with the derived shift data.

    ``M`` and ``m`` hold the extreme shifts M_i and m_i for i = 1..p at
    index i - 1.  ``field_char`` records the coefficient field the ranks
    were computed over.
    """

    beta: dict[tuple[int, int], int]
    p: int
    M: tuple[int, ...]
    m: tuple[int, ...]
    field_char: int = 0

    def entry(self, i: int, j: int) -> int:
        return self.beta.get((i, j), 0)

    def total(self, i: int) -> int:
        return sum(v for (i2, _), v in self.beta.items() if i2 == i)

    def max_shift(self, i: int) -> int:
        if not 1 <= i <= self.p:
            raise DomainError(f"M_i wants 1 <= i <= {self.p}, got {i}")
        return self.M[i - 1]

    def min_shift(self, i: int) -> int:
        if not 1 <= i <= self.p:
            raise DomainError(f"m_i wants 1 <= i <= {self.p}, got {i}")
        return self.m[i - 1]

    def reg_i(self, i: int) -> int:
        """M_{i+1} - i, the regularity contribution of strand i."""
        if not 0 <= i <= self.p - 1:
            raise DomainError(f"reg_i wants 0 <= i <= {self.p - 1}, got {i}")
        return self.M[i] - i

    def regularity(self) -> int:
        return max(self.reg_i(i) for i in range(self.p))

    def euler_numerator(self) -> tuple[int, ...]:
        """Coefficients of the alternating sum over the table.

        Equals the Hilbert series numerator of A/I; asserting that equality
        is the standard whole-table cross-check.
        """
        top = max(j for (_, j) in self.beta)
        out = [0] * (top + 1)
        for (i, j), v in self.beta.items():
            out[j] += v if i % 2 == 0 else -v
        k = len(out)
        while k > 1 and out[k - 1] == 0:
            k -= 1
        return tuple(out[:k])

    def rows(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, v) for (i, j), v in self.beta.items() if v)


def _finish_table(beta: dict[tuple[int, int], int], ngens: int,
                  field_char: int) -> BettiTable:
    beta = {k: v for k, v in beta.items() if v}
    zero_strand = [j for (i, j) in beta if i == 0]
    if zero_strand != [0] or beta[(0, 0)] != 1:
        raise ConsistencyError("homological index offset is wrong at i = 0")
    gens_found = sum(v for (i, _), v in beta.items() if i == 1)
    if gens_found != ngens:
        raise ConsistencyError(
            f"strand i = 1 has total {gens_found} but the ideal has {ngens} "
            "generators; homology index conventions disagree")
    p = max(i for (i, _) in beta)
    M = []
    m = []
    for i in range(1, p + 1):
        js = [j for (i2, j) in beta if i2 == i]
        if not js:
            raise ConsistencyError(f"no Betti numbers in homological degree {i} <= p")
        M.append(max(js))
        m.append(min(js))
    return BettiTable(beta=beta, p=p, M=tuple(M), m=tuple(m), field_char=field_char)


def betti_table(I: MonomialIdeal, field_char: int = 0,
                caps: ResourceCaps = DEFAULT_CAPS) -> BettiTable:
    """Betti table of A/I via upper Koszul complex homology on the lcm lattice."""
    I._require_proper_nonzero("betti_table")
    _check_field_char(field_char)
    lattice = lcm_lattice(I, caps)
    gens = I.vectors
    pairs = [(g, sum(g)) for g in gens]
    member_cache: dict[Vec, bool] = {}

    def member(v: Vec) -> bool:
        hit = member_cache.get(v)
        if hit is None:
            dv = sum(v)
            hit = False
            for g, dg in pairs:
                if dg > dv:
                    break
                if all(a <= b for a, b in zip(g, v)):
                    hit = True
                    break
            member_cache[v] = hit
        return hit

    beta: dict[tuple[int, int], int] = defaultdict(int)
    beta[(0, 0)] = 1
    for b in lattice:
        verts = tuple(i for i, e in enumerate(b) if e)
        by_dim: dict[int, list[tuple[int, ...]]] = {-1: [()]}
        nfaces = 1
        for size in range(1, len(verts) + 1):
            level = []
            for sigma in combinations(verts, size):
                v = list(b)
                for i in sigma:
                    v[i] -= 1
                if member(tuple(v)):
                    level.append(sigma)
            if level:
                by_dim[size - 1] = level
                nfaces += len(level)
        degree_b = sum(b)
        if nfaces == 1:
            # only the empty face: a fresh generator multidegree
            beta[(1, degree_b)] += 1
            continue
        if nfaces == 1 << len(verts):
            continue  # full simplex, contractible
        dims = _homology_of_grouped(by_dim, field_char)
        for idx, dim in enumerate(dims):
            if dim:
                beta[(idx + 1, degree_b)] += dim
    return _finish_table(dict(beta), len(gens), field_char)


# -- bounds and regularity ---------------------------------------------


def bounds(table: BettiTable, c: int) -> tuple[Fraction, Fraction]:
    """The shift bounds (U, L) = (prod M_i / c!, prod m_i / c!) over i = 1..c."""
    if c < 1 or c > table.p:
        raise ConsistencyError(
            f"height {c} is not within 1..projdim {table.p}")
    num_U = 1
    num_L = 1
    for i in range(1, c + 1):
        num_U *= table.max_shift(i)
        num_L *= table.min_shift(i)
    f = factorial(c)
    return Fraction(num_U, f), Fraction(num_L, f)


# -- Taylor complex oracle ----------------------------------------------


def taylor_betti_table(I: MonomialIdeal, field_char: int = 0,
                       max_gens: int = 12) -> BettiTable:
    """Betti table read off a minimalized Taylor complex.

    Independent oracle for :func:`betti_table`; exponential in the number
    of generators, hence the dedicated cap.
    """
    I._require_proper_nonzero("taylor_betti_table")
    _check_field_char(field_char)
    gens = I.vectors
    r = len(gens)
    if r > max_gens:
        raise ResourceLimitError(
            f"{r} generators exceed the Taylor cap {max_gens}",
            limit_name="taylor_max_gens", limit=max_gens, observed=r)
    n = I.ring.n

    mdeg: dict[frozenset[int], Vec] = {frozenset(): (0,) * n}
    level: dict[frozenset[int], int] = {frozenset(): 0}
    subsets_by_level: dict[int, list[frozenset[int]]] = {0: [frozenset()]}
    for size in range(1, r + 1):
        lst = []
        for combo in combinations(range(r), size):
            S = frozenset(combo)
            v = gens[combo[0]]
            for idx in combo[1:]:
                v = vecops.join(v, gens[idx])
            mdeg[S] = v
            level[S] = size
            lst.append(S)
        subsets_by_level[size] = lst

    if field_char == 0:
        one = Fraction(1)

        def invertible(s) -> bool:
            return s != 0
    else:
        one = 1

        def invertible(s) -> bool:
            return s % field_char != 0

    # diff[i]: entries of the map from level i to level i - 1, keyed (row, col)
    diff: dict[int, dict[tuple[frozenset, frozenset], object]] = defaultdict(dict)
    rows_of: dict[int, dict[frozenset, set]] = defaultdict(lambda: defaultdict(set))
    cols_of: dict[int, dict[frozenset, set]] = defaultdict(lambda: defaultdict(set))
    units: set[tuple[int, frozenset, frozenset]] = set()

    def put(i, u, v, s) -> None:
        if field_char:
            s %= field_char
        if s == 0:
            drop(i, u, v)
            return
        diff[i][(u, v)] = s
        rows_of[i][u].add(v)
        cols_of[i][v].add(u)
        if mdeg[u] == mdeg[v] and invertible(s):
            units.add((i, u, v))
        else:
            units.discard((i, u, v))

    def drop(i, u, v) -> None:
        if (u, v) in diff[i]:
            del diff[i][(u, v)]
            rows_of[i][u].discard(v)
            cols_of[i][v].discard(u)
            units.discard((i, u, v))

    for size in range(1, r + 1):
        for S in subsets_by_level[size]:
            ordered = sorted(S)
            for t, idx in enumerate(ordered):
                put(size, S - {idx}, S, -one if t % 2 else one)

    alive: set[frozenset[int]] = set(level)

    def _key(item):
        i, u, v = item
        return (i, tuple(sorted(u)), tuple(sorted(v)))

    while units:
        i, u, v = min(units, key=_key)
        a = diff[i][(u, v)]
        col_pairs = [(u2, diff[i][(u2, v)]) for u2 in cols_of[i][v] if u2 != u]
        row_pairs = [(v2, diff[i][(u, v2)]) for v2 in rows_of[i][u] if v2 != v]
        for u2, _ in col_pairs:
            drop(i, u2, v)
        for v2, _ in row_pairs:
            drop(i, u, v2)
        drop(i, u, v)
        for w in list(cols_of[i - 1][u]):
            drop(i - 1, w, u)
        for y in list(rows_of[i + 1][v]):
            drop(i + 1, v, y)
        alive.discard(u)
        alive.discard(v)
        if field_char:
            a_inv = pow(a, -1, field_char)
        for u2, s_col in col_pairs:
            for v2, s_row in row_pairs:
                old = diff[i].get((u2, v2), 0)
                if field_char:
                    put(i, u2, v2, old - s_col * s_row * a_inv)
                else:
                    put(i, u2, v2, old - s_col * s_row / a)

    beta: dict[tuple[int, int], int] = defaultdict(int)
    for S in alive:
        beta[(level[S], sum(mdeg[S]))] += 1
    return _finish_table(dict(beta), r, field_char)
