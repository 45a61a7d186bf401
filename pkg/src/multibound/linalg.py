"""Exact rank computation for small integer matrices.

Characteristic zero ranks use fraction-free (Bareiss) elimination over the
integers, so no rational arithmetic and no rounding ever happens; prime
characteristic uses plain elimination mod p.  Matrices are given as lists
of rows.
"""

from __future__ import annotations

from typing import Sequence


def rank_int(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals via Bareiss elimination (exact divisions)."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    r = 0
    prev = 1
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pivval = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nr):
            row_i = m[i]
            mic = row_i[c]
            for j in range(c + 1, nc):
                row_i[j] = (pivval * row_i[j] - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = pivval
        r += 1
    return r


def rank_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        row_r = [(x * inv) % p for x in m[r]]
        m[r] = row_r
        for i in range(r + 1, nr):
            f = m[i][c]
            if f:
                m[i] = [(x - f * y) % p for x, y in zip(m[i], row_r)]
        r += 1
    return r


def rank(rows: Sequence[Sequence[int]], field_char: int = 0) -> int:
    if not rows or not rows[0]:
        return 0
    if field_char == 0:
        return rank_int(rows)
    return rank_mod(rows, field_char)
