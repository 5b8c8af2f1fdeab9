"""Seeded random generation of small rational configurations.

Numerators and denominators are drawn from [-10, 10] without 0, which keeps
exact arithmetic fast and printed values short. :func:`spawn` derives an
independent stream per ``(seed, key...)`` so trials can be regenerated
individually.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .group import Homography, _is_singular
from .homogeneous import ProjPoint, proj_equal

_VALUES = [v for v in range(-10, 11) if v != 0]


def spawn(seed: int, *keys) -> random.Random:
    return random.Random("/".join(str(k) for k in (seed,) + keys))


def rational(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(_VALUES), rng.choice(_VALUES))


def rational_or_zero(rng: random.Random, p_zero: float = 0.1) -> Fraction:
    return Fraction(0) if rng.random() < p_zero else rational(rng)


def point(rng: random.Random, n: int = 2, p_zero: float = 0.1) -> ProjPoint:
    while True:
        coords = tuple(rational_or_zero(rng, p_zero) for _ in range(n + 1))
        if any(c != 0 for c in coords):
            return ProjPoint(coords)


def distinct_points(rng: random.Random, count: int, n: int = 2, p_zero: float = 0.1) -> list[ProjPoint]:
    pts: list[ProjPoint] = []
    while len(pts) < count:
        p = point(rng, n, p_zero)
        if not any(proj_equal(p, q) for q in pts):
            pts.append(p)
    return pts


def matrix(rng: random.Random, n: int = 2, p_zero: float = 0.1):
    while True:
        m = tuple(tuple(rational_or_zero(rng, p_zero) for _ in range(n + 1)) for _ in range(n + 1))
        if not _is_singular(m):
            return m


def homography(rng: random.Random, n: int = 2) -> Homography:
    return Homography(matrix(rng, n))


def collinear_quadruple(rng: random.Random) -> list[ProjPoint]:
    """Four distinct collinear points of RP^2 on a random line."""
    p1, p2 = distinct_points(rng, 2)
    params = distinct_points(rng, 4, n=1)
    return [ProjPoint(tuple(a * x + b * y for x, y in zip(p1.coords, p2.coords))) for a, b in params]


def distinct_scalars(rng: random.Random, count: int) -> list[Fraction]:
    out: list[Fraction] = []
    while len(out) < count:
        x = rational_or_zero(rng)
        if x not in out:
            out.append(x)
    return out


def floatify(P: ProjPoint) -> ProjPoint:
    return ProjPoint(tuple(float(c) for c in P.coords))


def float_homography(g: Homography) -> Homography:
    return Homography(tuple(tuple(float(x) for x in row) for row in g.matrix))


__all__ = [
    "spawn",
    "rational",
    "rational_or_zero",
    "point",
    "distinct_points",
    "matrix",
    "homography",
    "collinear_quadruple",
    "distinct_scalars",
    "floatify",
    "float_homography",
]
