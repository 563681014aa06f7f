"""Shared test oracles, all independent of the library's own algorithms."""

from fractions import Fraction

import hypothesis.strategies as st

from fusscat.paths import HeightBounds
from fusscat.polyomino import StairSpec


def det_cofactor(rows):
    """Determinant by first-row cofactor expansion."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, val in enumerate(rows[0]):
        if val:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * val * det_cofactor(minor)
    return total


def rank_fractions(rows, ncols):
    """Rank by plain Gaussian elimination over exact rationals."""
    mat = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        for i in range(rank + 1, len(mat)):
            f = mat[i][col] / prow[col]
            if f:
                mat[i] = [x - f * y for x, y in zip(mat[i], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


@st.composite
def height_bounds(draw, max_n=8, min_h=0, max_h=10):
    n = draw(st.integers(1, max_n))
    b = sorted(draw(st.lists(st.integers(min_h, max_h), min_size=n, max_size=n)))
    a = sorted(draw(st.lists(st.integers(min_h, max_h), min_size=n, max_size=n)))
    a = [max(x, y) for x, y in zip(a, b)]
    return HeightBounds(tuple(a), tuple(b))


@st.composite
def stair_specs(draw, max_p=3, max_entry=3):
    p = draw(st.integers(1, max_p))
    u = tuple(draw(st.integers(1, max_entry)) for _ in range(p))
    r = tuple(draw(st.integers(1, max_entry)) for _ in range(p))
    return StairSpec(u, r)
