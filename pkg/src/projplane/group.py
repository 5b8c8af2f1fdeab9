"""The projective group PGL(n+1) and its action on RP^n.

A :class:`Homography` wraps an invertible square matrix up to a nonzero
scalar factor. Representatives are kept in canonical form (last nonzero entry,
row-major, equal to 1). All arithmetic is division-free apart from that
rescaling, so rational inputs give exact results.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import DegenerateFrame, DimensionMismatch, SingularMatrix
from .homogeneous import ProjLine, ProjPoint, make_line, make_point, normalize, proj_equal
from .scalar import Scalar, all_exact, get_epsilon, norm, to_scalar

__all__ = [
    "Homography",
    "make_homography",
    "identity",
    "pgl_equal",
    "act_point",
    "act_line",
    "compose",
    "inverse",
    "homography_from_frames",
    "det",
    "adjugate",
    "matmul",
    "matvec",
    "transpose",
]

Matrix = tuple  # tuple of row tuples


def _as_matrix(m) -> Matrix:
    rows = tuple(tuple(to_scalar(x) for x in row) for row in m)
    size = len(rows)
    if size < 2 or any(len(r) != size for r in rows):
        raise DimensionMismatch("expected a square matrix of size at least 2")
    return rows


def det(m: Sequence[Sequence[Scalar]]) -> Scalar:
    """Determinant by cofactor expansion along the first row (exact for rationals)."""
    size = len(m)
    if size == 1:
        return m[0][0]
    if size == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if size == 3:
        (a, b, c), (d, e, f), (g, h, i) = m
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    total = 0
    for j in range(size):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def adjugate(m: Sequence[Sequence[Scalar]]) -> Matrix:
    size = len(m)
    if size == 2:
        return ((m[1][1], -m[0][1]), (-m[1][0], m[0][0]))
    cof = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
            c = det(minor)
            # adj[j][i] = cofactor(i, j)
            cof[j][i] = c if (i + j) % 2 == 0 else -c
    return tuple(tuple(r) for r in cof)


def transpose(m) -> Matrix:
    return tuple(zip(*m))


def matmul(a, b) -> Matrix:
    cols = tuple(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), start=0) for col in cols) for row in a)


def matvec(m, v) -> tuple:
    return tuple(sum((x * y for x, y in zip(row, v)), start=0) for row in m)


def _is_singular(m: Matrix) -> bool:
    d = det(m)
    if all_exact(x for row in m for x in row):
        return d == 0
    max_row = max(norm(row) for row in m)
    return abs(d) <= get_epsilon() * max_row ** len(m)


@dataclass(frozen=True)
class Homography:
    """An element ``[g]`` of PGL(n+1), acting on RP^n."""

    matrix: Matrix

    def __post_init__(self):
        m = _as_matrix(self.matrix)
        if _is_singular(m):
            raise SingularMatrix("matrix is not invertible")
        size = len(m)
        flat = normalize(x for row in m for x in row)
        object.__setattr__(self, "matrix", tuple(flat[i * size:(i + 1) * size] for i in range(size)))

    @property
    def dim(self) -> int:
        return len(self.matrix) - 1

    def __call__(self, P):
        return act_point(self, P)

    def __matmul__(self, other):
        return compose(self, other)

    def __repr__(self):
        rows = "; ".join(" ".join(str(x) for x in row) for row in self.matrix)
        return f"Homography[{rows}]"


def make_homography(m) -> Homography:
    return m if isinstance(m, Homography) else Homography(m)


def identity(n: int = 2) -> Homography:
    return Homography(tuple(tuple(int(i == j) for j in range(n + 1)) for i in range(n + 1)))


def _flat(g: Homography) -> tuple:
    return tuple(x for row in g.matrix for x in row)


def _check_same_dim(g: Homography, h: Homography):
    if g.dim != h.dim:
        raise DimensionMismatch(f"PGL({g.dim + 1}) vs PGL({h.dim + 1})")


def pgl_equal(g, h) -> bool:
    """True iff the representatives differ by a nonzero scalar matrix."""
    g, h = make_homography(g), make_homography(h)
    _check_same_dim(g, h)
    return proj_equal(_flat(g), _flat(h))


def act_point(g, P) -> ProjPoint:
    g, P = make_homography(g), make_point(P)
    if P.dim != g.dim:
        raise DimensionMismatch(f"PGL({g.dim + 1}) cannot act on RP^{P.dim}")
    return ProjPoint(matvec(g.matrix, P.coords))


def act_line(g, l) -> ProjLine:
    """Induced action on dual triples: the inverse transpose, up to scale."""
    g, l = make_homography(g), make_line(l)
    if g.dim != 2:
        raise DimensionMismatch("lines live in RP^2")
    return ProjLine(matvec(transpose(adjugate(g.matrix)), l.coords))


def compose(g, h) -> Homography:
    """``[g h]``: apply ``h`` first, then ``g``."""
    g, h = make_homography(g), make_homography(h)
    _check_same_dim(g, h)
    return Homography(matmul(g.matrix, h.matrix))


def inverse(g) -> Homography:
    g = make_homography(g)
    return Homography(adjugate(g.matrix))


def _frame_basis(points: Sequence[ProjPoint], role: str) -> Matrix:
    """Matrix sending the standard frame e1, e2, e3, e1+e2+e3 to ``points``."""
    if len(points) != 4:
        raise DegenerateFrame(f"{role} frame needs exactly 4 points, got {len(points)}")
    pts = [make_point(p) for p in points]
    if any(p.dim != 2 for p in pts):
        raise DimensionMismatch("frames are quadruples of points of RP^2")
    for triple in combinations(range(4), 3):
        m = tuple(pts[i].coords for i in triple)
        if _is_singular(m):
            raise DegenerateFrame(f"{role} points {[i + 1 for i in triple]} are collinear")
    cols = transpose(tuple(p.coords for p in pts[:3]))
    # Cramer: scale the first three columns so they sum to the fourth point
    d = det(cols)
    fourth = pts[3].coords
    weights = []
    for k in range(3):
        replaced = tuple(
            tuple(fourth[i] if j == k else cols[i][j] for j in range(3)) for i in range(3)
        )
        weights.append(det(replaced) / d)
    return tuple(tuple(cols[i][j] * weights[j] for j in range(3)) for i in range(3))


def homography_from_frames(src, dst) -> Homography:
    """The unique homography of RP^2 sending ``src[i]`` to ``dst[i]`` for i = 1..4."""
    a = _frame_basis(src, "source")
    b = _frame_basis(dst, "target")
    return Homography(matmul(b, adjugate(a)))
