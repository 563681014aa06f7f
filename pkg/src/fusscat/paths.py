"""Counting monotone lattice paths with per-step height bounds.

A path from (0, b_1) to (n, a_n) built from unit horizontal and vertical
steps is determined by the heights y_1 <= ... <= y_n of its horizontal
steps, so everything here works on weakly increasing integer sequences
with b_i <= y_i <= a_i. Three routes are provided: a prefix-sum dynamic
program, the binomial determinant identity, and (for small instances)
exhaustive enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .caps import check_volume
from .exactmat import Matrix, binomial, det_exact


@dataclass(frozen=True)
class HeightBounds:
    """Upper bounds a and lower bounds b for the horizontal-step heights.

    Both sequences must be weakly increasing with a_i >= b_i. Negative
    heights are allowed by the model; the staircase constructors always
    use b = 0.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        problems = []
        if len(self.a) != len(self.b):
            problems.append(f"len(a)={len(self.a)} differs from len(b)={len(self.b)}")
        if len(self.a) == 0:
            problems.append("bounds must have length >= 1")
        if any(x > y for x, y in zip(self.a, self.a[1:])):
            problems.append(f"a is not weakly increasing: {self.a}")
        if any(x > y for x, y in zip(self.b, self.b[1:])):
            problems.append(f"b is not weakly increasing: {self.b}")
        crossing = [i for i, (x, y) in enumerate(zip(self.a, self.b)) if x < y]
        if crossing:
            problems.append(f"a_i < b_i at positions {crossing} (0-based)")
        if problems:
            raise ValueError("invalid height bounds: " + "; ".join(problems))

    @property
    def n(self) -> int:
        return len(self.a)


def staircase_bounds(n: int, t: int, p: int) -> HeightBounds:
    """Bounds for the staircase family: a_i = ceil(i/t)*(n-t), b_i = 0.

    Length is p*t. Calling with t -> n-t yields the reflected bounds
    a'_i = ceil(i/(n-t))*t of length p*(n-t).
    """
    if not 1 <= t < n:
        raise ValueError(f"require 1 <= t < n, got t={t}, n={n}")
    if p < 1:
        raise ValueError(f"require p >= 1, got p={p}")
    a = tuple(-(-i // t) * (n - t) for i in range(1, p * t + 1))
    return HeightBounds(a, (0,) * (p * t))


def count_paths_dp(bounds: HeightBounds) -> int:
    """Number of admissible height sequences, by prefix-sum DP."""
    a, b = bounds.a, bounds.b
    lo, hi = b[0], a[-1]
    width = hi - lo + 1
    # ways[h - lo] = number of admissible prefixes ending at height h
    ways = [0] * width
    for h in range(b[0], a[0] + 1):
        ways[h - lo] = 1
    for i in range(1, bounds.n):
        prev_hi = a[i - 1]
        new = [0] * width
        # y_i >= y_{i-1} makes each new entry a running prefix sum of the
        # old row, clipped to the previous step's own interval.
        run = 0
        for h in range(lo, hi + 1):
            if h <= prev_hi:
                run += ways[h - lo]
            if b[i] <= h <= a[i]:
                new[h - lo] = run
        ways = new
    return sum(ways)


def path_count_matrix(bounds: HeightBounds) -> Matrix:
    """The n x n matrix binom(a_i - b_j + 1, j - i + 1) whose determinant
    counts the paths."""
    a, b = bounds.a, bounds.b
    n = bounds.n
    return Matrix.from_rows(
        [[binomial(a[i] - b[j] + 1, j - i + 1) for j in range(n)] for i in range(n)]
    )


def count_paths_det(bounds: HeightBounds) -> int:
    """Number of admissible height sequences, by the determinant identity."""
    return det_exact(path_count_matrix(bounds))


def iter_height_sequences(bounds: HeightBounds, max_volume: int | None = None):
    """Yield all admissible height sequences in lexicographic order.

    Refuses instances with n > 12 or box volume prod(a_i - b_i + 1)
    above the cap.
    """
    a, b = bounds.a, bounds.b
    n = bounds.n
    if n > 12:
        raise ValueError(f"exhaustive enumeration is limited to n <= 12, got n={n}")
    volume = 1
    for x, y in zip(a, b):
        volume *= x - y + 1
    check_volume(volume, max_volume, what="height-sequence enumeration")

    prefix = [0] * n

    def rec(i, floor):
        if i == n:
            yield tuple(prefix)
            return
        lo = floor if floor > b[i] else b[i]
        for h in range(lo, a[i] + 1):
            prefix[i] = h
            yield from rec(i + 1, h)

    yield from rec(0, b[0])


def enumerate_height_sequences(bounds: HeightBounds, max_volume: int | None = None):
    return list(iter_height_sequences(bounds, max_volume))
