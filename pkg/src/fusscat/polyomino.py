"""Grid-cell geometry: convex polyominoes and the staircase family.

A cell is identified with its lower-left corner (x, y), x, y >= 1. A
polyomino is a finite, edge-connected, nonempty set of cells. The
staircase family is built from positive integer lists u and r: reading
left to right it has r_1 columns of height A_1 - 1, then r_2 columns of
height A_2 - 1, and so on, where A_k = 1 + u_1 + ... + u_k and
B_k = 1 + r_1 + ... + r_k mark the height and column breakpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

Cell = tuple[int, int]
Point = tuple[int, int]


@dataclass(frozen=True)
class Polyomino:
    cells: frozenset[Cell]

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(tuple(c) for c in self.cells))
        if not self.cells:
            raise ValueError("a polyomino needs at least one cell")
        for x, y in self.cells:
            if x < 1 or y < 1:
                raise ValueError(f"cell {x, y} outside the positive quadrant")
        if not _connected(self.cells):
            raise ValueError("cells are not edge-connected")

    @classmethod
    def from_cells(cls, cells) -> "Polyomino":
        return cls(frozenset(tuple(c) for c in cells))

    def __len__(self) -> int:
        return len(self.cells)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)


def _connected(cells) -> bool:
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


@dataclass(frozen=True)
class StairSpec:
    """Parameters (u, r) of a staircase polyomino."""

    u: tuple[int, ...]
    r: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "r", tuple(self.r))
        if len(self.u) != len(self.r) or not self.u:
            raise ValueError("u and r must be nonempty lists of equal length")
        if any(x < 1 for x in self.u) or any(x < 1 for x in self.r):
            raise ValueError("all entries of u and r must be >= 1")

    @property
    def p(self) -> int:
        return len(self.u)

    def heights(self) -> tuple[int, ...]:
        """A_1..A_p with A_k = 1 + sum(u[:k])."""
        return tuple(1 + s for s in accumulate(self.u))

    def breaks(self) -> tuple[int, ...]:
        """B_0..B_p with B_0 = 1 and B_k = 1 + sum(r[:k])."""
        return (1,) + tuple(1 + s for s in accumulate(self.r))

    @classmethod
    def uniform(cls, n: int, t: int, p: int) -> "StairSpec":
        """The spec with u_i = n and r_i = t for all i."""
        return cls((n,) * p, (t,) * p)


def format_stair_spec(spec: StairSpec) -> str:
    return "u={};r={}".format(",".join(map(str, spec.u)), ",".join(map(str, spec.r)))


def parse_stair_spec(text: str) -> StairSpec:
    try:
        upart, rpart = text.strip().split(";")
        ukey, uval = upart.split("=")
        rkey, rval = rpart.split("=")
        if ukey.strip() != "u" or rkey.strip() != "r":
            raise ValueError
        u = tuple(int(x) for x in uval.split(","))
        r = tuple(int(x) for x in rval.split(","))
    except ValueError:
        raise ValueError(f"cannot parse stair spec {text!r}, expected like 'u=3,3,3;r=1,1,1'") from None
    return StairSpec(u, r)


def stair(spec: StairSpec) -> Polyomino:
    """The staircase polyomino of a spec.

    Cell rule: step t occupies columns B_{t-1} .. B_t - 1, each of height
    A_t - 1.
    """
    heights = spec.heights()
    breaks = spec.breaks()
    cells = set()
    for t in range(spec.p):
        for x in range(breaks[t], breaks[t + 1]):
            for y in range(1, heights[t]):
                cells.add((x, y))
    return Polyomino(frozenset(cells))


def column_heights(P: Polyomino) -> dict[int, int]:
    """Highest cell per occupied column."""
    out: dict[int, int] = {}
    for x, y in P.cells:
        if y > out.get(x, 0):
            out[x] = y
    return out


def stair_spec_from_polyomino(P: Polyomino) -> StairSpec:
    """Recover (u, r) from a staircase polyomino.

    Raises ValueError when P is not a bottom-aligned staircase starting
    at (1, 1) with weakly increasing column heights.
    """
    heights = column_heights(P)
    xs = sorted(heights)
    if xs[0] != 1 or xs != list(range(1, len(xs) + 1)):
        raise ValueError("not a staircase: columns do not form 1..W")
    hs = [heights[x] for x in xs]
    for x, h in zip(xs, hs):
        for y in range(1, h + 1):
            if (x, y) not in P.cells:
                raise ValueError("not a staircase: column with a gap or not bottom-aligned")
    if any(h1 > h2 for h1, h2 in zip(hs, hs[1:])):
        raise ValueError("not a staircase: column heights must be weakly increasing")
    u: list[int] = []
    r: list[int] = []
    prev_top = 1  # vertex height before the first step
    for h in hs:
        if r and h + 1 == prev_top:
            r[-1] += 1
        else:
            u.append(h + 1 - prev_top)
            r.append(1)
            prev_top = h + 1
    return StairSpec(tuple(u), tuple(r))


def vertex_set(P: Polyomino) -> list[Point]:
    """All corners of all cells, lexicographically sorted."""
    pts = set()
    for x, y in P.cells:
        pts.update(((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)))
    return sorted(pts)


def is_convex(P: Polyomino) -> bool:
    """Row and column convexity of the cell set."""
    by_row: dict[int, list[int]] = {}
    by_col: dict[int, list[int]] = {}
    for x, y in P.cells:
        by_row.setdefault(y, []).append(x)
        by_col.setdefault(x, []).append(y)
    for xs in by_row.values():
        if max(xs) - min(xs) + 1 != len(xs):
            return False
    for ys in by_col.values():
        if max(ys) - min(ys) + 1 != len(ys):
            return False
    return True


@dataclass(frozen=True)
class InnerInterval:
    """A rectangle [a, b] fully inside the polyomino, with its
    anti-diagonal corners c and d."""

    a: Point
    b: Point
    c: Point
    d: Point


def inner_intervals(P: Polyomino) -> list[InnerInterval]:
    """All intervals [a, b] of P with a < b componentwise.

    Containment of each candidate rectangle is tested in O(1) against a
    2-D prefix count of the occupied cells.
    """
    cells = P.cells
    max_x = max(x for x, _ in cells) + 1
    max_y = max(y for _, y in cells) + 1
    # occupancy prefix counts: pref[x][y] = #cells in [1..x] x [1..y]
    pref = [[0] * (max_y + 1) for _ in range(max_x + 1)]
    for x in range(1, max_x + 1):
        row = pref[x]
        prow = pref[x - 1]
        for y in range(1, max_y + 1):
            row[y] = (
                prow[y] + row[y - 1] - prow[y - 1]
                + (1 if (x, y) in cells else 0)
            )

    def rect_full(x1, y1, x2, y2) -> bool:
        # cells with lower-left in [x1, x2] x [y1, y2], all present?
        count = (
            pref[x2][y2] - pref[x1 - 1][y2] - pref[x2][y1 - 1] + pref[x1 - 1][y1 - 1]
        )
        return count == (x2 - x1 + 1) * (y2 - y1 + 1)

    verts = vertex_set(P)
    out = []
    for ai, a in enumerate(verts):
        for b in verts[ai + 1 :]:
            if a[0] < b[0] and a[1] < b[1]:
                if rect_full(a[0], a[1], b[0] - 1, b[1] - 1):
                    out.append(
                        InnerInterval(a, b, (a[0], b[1]), (b[0], a[1]))
                    )
    return out


def krull_dim(P: Polyomino) -> int:
    """|V(P)| - |cells|; only meaningful (and only allowed) for convex P."""
    if not is_convex(P):
        raise ValueError("dimension formula requires a convex polyomino")
    return len(vertex_set(P)) - len(P.cells)


def render_ascii(P: Polyomino) -> str:
    """Character-grid picture, one '#' per cell, origin at lower left."""
    cells = P.cells
    max_x = max(x for x, _ in cells)
    max_y = max(y for _, y in cells)
    lines = []
    for y in range(max_y, 0, -1):
        lines.append("".join("#" if (x, y) in cells else "." for x in range(1, max_x + 1)))
    return "\n".join(lines)


def to_text(P: Polyomino) -> str:
    """One 'x y' line per cell, sorted."""
    return "\n".join(f"{x} {y}" for x, y in P.sorted_cells())


def from_text(text: str) -> Polyomino:
    cells = []
    for line in text.strip().splitlines():
        xs, ys = line.split()
        cells.append((int(xs), int(ys)))
    return Polyomino.from_cells(cells)
