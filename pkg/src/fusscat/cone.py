"""Exponent cones of staircase polyominoes and their halfspace data.

Each vertex (i, j) of a polyomino inside [(1,1), (m, n)] maps to the
0/1 exponent vector e_i + e_{m+j} in Z^{m+n} (x-part first, then
y-part). For a staircase the cone spanned by these vectors is cut out,
inside the hyperplane "x-degree = y-degree", by the unit halfspaces
together with one extra normal per inner step of the staircase. The
predicates below decide membership and certify extremality and facet
status by exact rank computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import mul

from .exactmat import Matrix, rank_exact
from .polyomino import Polyomino, StairSpec, format_stair_spec, stair, vertex_set

ExpVec = tuple[int, ...]


def dot(u: ExpVec, v: ExpVec) -> int:
    return sum(map(mul, u, v))


def exponent_vector(vertex, x_len: int, y_len: int) -> ExpVec:
    i, j = vertex
    if not (1 <= i <= x_len and 1 <= j <= y_len):
        raise ValueError(f"vertex {vertex} outside [(1,1),({x_len},{y_len})]")
    vec = [0] * (x_len + y_len)
    vec[i - 1] = 1
    vec[x_len + j - 1] += 1
    return tuple(vec)


def ambient_box(P: Polyomino) -> tuple[int, int]:
    """Smallest (m, n) with all vertices inside [(1,1), (m, n)]."""
    verts = vertex_set(P)
    return max(v[0] for v in verts), max(v[1] for v in verts)


def exponent_generators(P: Polyomino, x_len: int | None = None,
                        y_len: int | None = None) -> list[ExpVec]:
    """The vectors e_i + e_{m+j} over vertices (i, j), sorted."""
    m, n = ambient_box(P)
    x_len = m if x_len is None else x_len
    y_len = n if y_len is None else y_len
    return [exponent_vector(v, x_len, y_len) for v in vertex_set(P)]


def stair_normals(spec: StairSpec) -> tuple[list[ExpVec], ExpVec]:
    """Inequality normals and the equality normal of a staircase cone.

    Returns (N, nu) where N lists, in order, one normal per inner step
    (s = 1..p-1) followed by the unit normals, and nu is the equality
    normal separating x-degree from y-degree. The step normal for s has
    -1 on x-coordinates 1..B_s - 1 and +1 on y-coordinates 1..A_s.
    """
    heights = spec.heights()
    breaks = spec.breaks()
    m = breaks[-1]  # B_p
    n = heights[-1]  # A_p
    ambient = m + n
    normals: list[ExpVec] = []
    for s in range(1, spec.p):
        vec = [0] * ambient
        for k in range(breaks[s] - 1):
            vec[k] = -1
        for k in range(heights[s - 1]):
            vec[m + k] = 1
        normals.append(tuple(vec))
    for k in range(ambient):
        vec = [0] * ambient
        vec[k] = 1
        normals.append(tuple(vec))
    nu = tuple([1] * m + [-1] * n)
    return normals, nu


@dataclass(frozen=True)
class ConeRep:
    """A cone given by generators plus a candidate halfspace description.

    Invariants (certified by verify_h_representation and the tests, not
    re-checked on every construction): every generator g satisfies
    dot(g, nu) == 0 and dot(g, a) >= 0 for every a in normals.
    """

    gens: tuple[ExpVec, ...]
    normals: tuple[ExpVec, ...]
    nu: ExpVec
    x_len: int
    y_len: int

    @property
    def ambient_dim(self) -> int:
        return self.x_len + self.y_len


def stair_cone(spec: StairSpec) -> ConeRep:
    P = stair(spec)
    breaks = spec.breaks()
    heights = spec.heights()
    m, n = breaks[-1], heights[-1]
    gens = tuple(exponent_generators(P, m, n))
    normals, nu = stair_normals(spec)
    return ConeRep(gens, tuple(normals), nu, m, n)


def _check_dim(c: ConeRep, z: ExpVec):
    if len(z) != c.ambient_dim:
        raise ValueError(
            f"vector of length {len(z)} in ambient dimension {c.ambient_dim}"
        )


def contains(c: ConeRep, z: ExpVec) -> bool:
    """Closed-cone membership: all halfspaces hold and dot(z, nu) == 0."""
    _check_dim(c, z)
    if dot(z, c.nu) != 0:
        return False
    return all(dot(z, a) >= 0 for a in c.normals)


def in_relint(c: ConeRep, z: ExpVec) -> bool:
    """Relative-interior membership for integer points.

    All normals are integral, so strict positivity on an integer vector
    is the same as dot(z, a) >= 1.
    """
    _check_dim(c, z)
    if dot(z, c.nu) != 0:
        return False
    return all(dot(z, a) >= 1 for a in c.normals)


def _active_matrix(c: ConeRep, g: ExpVec) -> Matrix:
    # Unit rows first: the rank elimination then runs almost entirely in
    # its cheap unit-pivot path.
    units = []
    others = []
    for a in c.normals:
        if dot(g, a) == 0:
            nz = [k for k, v in enumerate(a) if v]
            if len(nz) == 1 and a[nz[0]] == 1:
                units.append(a)
            else:
                others.append(a)
    return Matrix.from_rows(units + others + [list(c.nu)])


def is_extreme_generator(c: ConeRep, g: ExpVec) -> bool:
    """Does the active-at-g subsystem cut out exactly the ray of g?

    True iff the normals vanishing on g, together with nu, have rank
    ambient_dim - 1.
    """
    if g not in c.gens:
        raise ValueError(f"{g} is not a generator of this cone")
    return rank_exact(_active_matrix(c, g)) == c.ambient_dim - 1


def facet_check(c: ConeRep, a: ExpVec) -> bool:
    """Is H_a a facet of the cone (one dimension below the cone itself)?

    The cone lives in the hyperplane of nu, so a facet has rank
    ambient_dim - 2 worth of generators on it.
    """
    if a not in c.normals:
        raise ValueError(f"{a} is not one of the cone's inequality normals")
    on_face = [g for g in c.gens if dot(g, a) == 0]
    if not on_face:
        return False
    return rank_exact(Matrix.from_rows(on_face)) == c.ambient_dim - 2


def verify_h_representation(spec: StairSpec) -> dict:
    """Certify the halfspace description of a staircase exponent cone.

    Checks, in order: every generator satisfies every halfspace and the
    nu-equality; every generator is an extreme ray; every listed normal
    is facet-defining; and the generators span a space of dimension
    ambient_dim - 1. Failures are reported with witnesses, never raised.
    """
    c = stair_cone(spec)
    report: dict = {
        "spec": format_stair_spec(spec),
        "ambient_dim": c.ambient_dim,
        "expected_dim": c.ambient_dim - 1,
        "generator_count": len(c.gens),
        "normal_count": len(c.normals),
    }
    containment_fail = [list(g) for g in c.gens if not contains(c, g)]
    extreme_fail = [list(g) for g in c.gens if not is_extreme_generator(c, g)]
    facet_fail = [list(a) for a in c.normals if not facet_check(c, a)]
    gen_rank = rank_exact(Matrix.from_rows(c.gens))
    checks = {
        "containment": {"passed": not containment_fail, "failures": containment_fail},
        "extreme_generators": {"passed": not extreme_fail, "failures": extreme_fail},
        "facets": {"passed": not facet_fail, "failures": facet_fail},
        "dimension": {"passed": gen_rank == c.ambient_dim - 1, "rank": gen_rank},
    }
    report["checks"] = checks
    report["all_passed"] = all(v["passed"] for v in checks.values())
    return report
