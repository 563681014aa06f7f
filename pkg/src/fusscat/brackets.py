"""The generalized Fuss-Catalan bracket.

For 1 <= t < n and p >= 1 the bracket counts weak compositions alpha of
p*(n-t) into p*t+1 parts whose prefix sums obey
sum(alpha[:k*t]) <= k*(n-t) for k = 1..p-1. Four independent routes
compute it: direct enumeration, the bounded-path DP, the path
determinant, and the canonical-generator enumeration. They must always
agree, and [n 1]_p specializes to the Fuss-Catalan number C_{p+1}(n).

The composition entries are nonnegative. Enumeration order is
lexicographic and deterministic so listings can be diffed.
"""

from __future__ import annotations

from .caps import check_volume
from .exactmat import binomial
from .paths import count_paths_det, count_paths_dp, staircase_bounds

# a prefix-constrained weak composition, as produced by iter_A
CompositionVector = tuple[int, ...]

GFC_METHODS = ("enum", "dp", "det", "canonical")


def _validate(n: int, t: int, p: int):
    if not 1 <= t < n:
        raise ValueError(f"require 1 <= t < n, got t={t}, n={n}")
    if p < 1:
        raise ValueError(f"require p >= 1, got p={p}")


def iter_A(n: int, t: int, p: int, max_volume: int | None = None):
    """Yield the admissible composition vectors in lexicographic order.

    The cap estimate is the unconstrained stars-and-bars count; the
    prefix constraints only shrink the true search tree.
    """
    _validate(n, t, p)
    parts = p * t + 1
    total = p * (n - t)
    check_volume(binomial(total + parts - 1, parts - 1), max_volume,
                 what=f"composition enumeration for (n,t,p)=({n},{t},{p})")

    # checkpoint[i] = prefix-sum bound that applies once the first i
    # entries are fixed (None where no constraint ends at i).
    checkpoint = [None] * (parts + 1)
    for k in range(1, p):
        checkpoint[k * t] = k * (n - t)

    alpha = [0] * parts

    def rec(i, remaining):
        if i == parts - 1:
            alpha[i] = remaining
            yield tuple(alpha)
            return
        for v in range(remaining + 1):
            alpha[i] = v
            used = total - remaining + v
            bound = checkpoint[i + 1]
            if bound is not None and used > bound:
                break
            yield from rec(i + 1, remaining - v)

    yield from rec(0, total)


def enumerate_A(n: int, t: int, p: int, max_volume: int | None = None):
    """All admissible composition vectors, lexicographically sorted."""
    return list(iter_A(n, t, p, max_volume))


def gfc(n: int, t: int, p: int, method: str = "det",
        max_volume: int | None = None) -> int:
    """The bracket value for (n, t, p) by the requested method."""
    _validate(n, t, p)
    if method == "enum":
        return sum(1 for _ in iter_A(n, t, p, max_volume))
    if method == "dp":
        return count_paths_dp(staircase_bounds(n, t, p))
    if method == "det":
        return count_paths_det(staircase_bounds(n, t, p))
    if method == "canonical":
        from .canonical import iter_stair_alphas

        return sum(1 for _ in iter_stair_alphas(n, t, p, max_volume))
    raise ValueError(f"unknown method {method!r}, expected one of {GFC_METHODS}")


def check_symmetry(n: int, p: int, method: str = "det") -> dict:
    """Compare the bracket at t and n-t for every t.

    Returns a report dict with one entry per t in [1, n-1] and an
    aggregate flag.
    """
    if n < 2:
        raise ValueError(f"require n >= 2, got n={n}")
    if p < 1:
        raise ValueError(f"require p >= 1, got p={p}")
    pairs = []
    all_equal = True
    for t in range(1, n):
        value = gfc(n, t, p, method)
        mirror = gfc(n, n - t, p, method)
        equal = value == mirror
        all_equal = all_equal and equal
        pairs.append({"t": t, "value": str(value), "mirror_t": n - t,
                      "mirror_value": str(mirror), "equal": equal})
    return {"n": n, "p": p, "method": method, "pairs": pairs,
            "all_equal": all_equal}
