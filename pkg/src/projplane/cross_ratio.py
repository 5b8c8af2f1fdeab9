"""Cross-ratio of four points on a projective line.

Values are exact rationals (or floats) with a dedicated :data:`INFINITY`
value for a vanishing denominator.
"""

from __future__ import annotations

from itertools import combinations

from .errors import DimensionMismatch, NotCollinear, NotDistinct
from .group import det
from .homogeneous import ProjPoint, make_point, proj_equal
from .scalar import Scalar, all_exact, get_epsilon, is_zero, norm, to_scalar

__all__ = [
    "INFINITY",
    "Infinity",
    "bracket",
    "cross_ratio_rp1",
    "cross_ratio_affine",
    "cross_ratio_collinear",
    "is_collinear",
    "pencil_coordinates",
]


class Infinity:
    """The point at infinity of the value line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INFINITY = Infinity()


def bracket(P, Q) -> Scalar:
    """The 2x2 determinant ``[P, Q]`` of two points of RP^1."""
    return P[0] * Q[1] - P[1] * Q[0]


def _ratio(num: Scalar, den: Scalar, scale: float):
    if is_zero(den, scale):
        return INFINITY
    return num / den


def _require_distinct(points):
    for (i, p), (j, q) in combinations(enumerate(points), 2):
        if proj_equal(p, q):
            raise NotDistinct(f"points {i + 1} and {j + 1} coincide")


def cross_ratio_rp1(A, B, C, D):
    """``([A,C][B,D]) / ([A,D][B,C])`` for four distinct points of RP^1.

    Improper points are fine; the value does not depend on representatives.
    """
    pts = [make_point(p) for p in (A, B, C, D)]
    if any(p.dim != 1 for p in pts):
        raise DimensionMismatch("cross_ratio_rp1 takes points of RP^1")
    _require_distinct(pts)
    A, B, C, D = (p.coords for p in pts)
    num = bracket(A, C) * bracket(B, D)
    den = bracket(A, D) * bracket(B, C)
    return _ratio(num, den, max(norm(A) * norm(D) * norm(B) * norm(C), 1.0))


def cross_ratio_affine(a, b, c, d):
    """``(c-a)/(c-b) * (d-b)/(d-a)`` for four distinct chart coordinates."""
    a, b, c, d = (to_scalar(x) for x in (a, b, c, d))
    vals = (a, b, c, d)
    for (i, x), (j, y) in combinations(enumerate(vals), 2):
        if is_zero(x - y, max(abs(float(x)), abs(float(y)))):
            raise NotDistinct(f"values {i + 1} and {j + 1} coincide")
    return (c - a) / (c - b) * ((d - b) / (d - a))


def is_collinear(P, Q, R) -> bool:
    """Vanishing 3x3 determinant of the three representatives."""
    pts = [make_point(p) for p in (P, Q, R)]
    if any(p.dim != 2 for p in pts):
        raise DimensionMismatch("collinearity is tested in RP^2")
    rows = tuple(p.coords for p in pts)
    d = det(rows)
    if all_exact(x for row in rows for x in row):
        return d == 0
    return abs(d) <= get_epsilon() * max(1.0, norm(rows[0]) * norm(rows[1]) * norm(rows[2]))


def pencil_coordinates(P, basis) -> ProjPoint:
    """Write ``P = alpha*B1 + beta*B2`` and return ``[alpha:beta]`` in RP^1.

    The 2x2 system is solved on the pair of coordinate rows whose minor of the
    basis has the largest magnitude. ``P`` is assumed to lie on the line
    spanned by the basis.
    """
    B1, B2 = (make_point(b).coords for b in basis)
    P = make_point(P).coords
    best = None
    for i, j in combinations(range(len(P)), 2):
        m = B1[i] * B2[j] - B1[j] * B2[i]
        if best is None or abs(m) > abs(best[0]):
            best = (m, i, j)
    m, i, j = best
    if m == 0:
        raise NotDistinct("pencil basis points coincide")
    # Cramer on rows i, j; the common factor 1/m drops out projectively
    alpha = P[i] * B2[j] - P[j] * B2[i]
    beta = B1[i] * P[j] - B1[j] * P[i]
    if m < 0:
        alpha, beta = -alpha, -beta
    return ProjPoint((alpha, beta))


def cross_ratio_collinear(P1, P2, P3, P4, basis=None):
    """Cross-ratio of four distinct collinear points of RP^2.

    Each point is mapped to its pencil parameter over ``basis`` (default
    ``(P1, P2)``) and the RP^1 cross-ratio of the parameters is returned.
    """
    pts = [make_point(p) for p in (P1, P2, P3, P4)]
    if any(p.dim != 2 for p in pts):
        raise DimensionMismatch("cross_ratio_collinear takes points of RP^2")
    _require_distinct(pts)
    for triple in combinations(pts, 3):
        if not is_collinear(*triple):
            raise NotCollinear("the four points are not on one line")
    if basis is None:
        basis = (pts[0], pts[1])
    params = [pencil_coordinates(p, basis) for p in pts]
    return cross_ratio_rp1(*params)
