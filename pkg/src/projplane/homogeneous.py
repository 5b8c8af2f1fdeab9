"""Homogeneous coordinates, projective points and lines, incidence.

A point of RP^n is stored through its canonical representative: the
coordinate vector scaled so that its last nonzero entry equals 1. Proper
points therefore read ``[a:1]`` or ``[x:y:1]`` and the affine chart is a
matter of dropping the trailing 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, IdenticalLines, IdenticalPoints, ImproperPoint, ZeroVector
from .scalar import Scalar, is_zero, norm, to_scalar

__all__ = [
    "ProjPoint",
    "ProjLine",
    "normalize",
    "make_point",
    "make_line",
    "proj_equal",
    "is_proper",
    "to_affine_chart",
    "from_affine",
    "join",
    "meet",
    "incident",
    "cross",
    "dot",
]


def _coerce(coords) -> tuple:
    return tuple(to_scalar(c) for c in coords)


def _scale(coords) -> float:
    return max((abs(float(c)) for c in coords), default=0.0)


def normalize(coords: Sequence[Scalar]) -> tuple:
    """Scale ``coords`` so the last nonzero entry equals 1.

    Raises :class:`ZeroVector` for the origin.
    """
    coords = _coerce(coords)
    scale = _scale(coords)
    for c in reversed(coords):
        if not is_zero(c, scale):
            pivot = c
            break
    else:
        raise ZeroVector("the zero vector has no projective class")
    if pivot == 1:
        return coords
    return tuple(c / pivot for c in coords)


@dataclass(frozen=True)
class ProjPoint:
    """A point of RP^n, ``n = len(coords) - 1``."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) < 2:
            raise DimensionMismatch("a projective point needs at least two coordinates")
        object.__setattr__(self, "coords", normalize(self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class ProjLine:
    """A line of RP^2 given by its dual triple ``[u1:u2:u3]``: ``{P : u.P = 0}``."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 3:
            raise DimensionMismatch("lines are only defined in the projective plane")
        object.__setattr__(self, "coords", normalize(self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        return "line[" + ":".join(str(c) for c in self.coords) + "]"


def make_point(coords) -> ProjPoint:
    return coords if isinstance(coords, ProjPoint) else ProjPoint(tuple(coords))


def make_line(coords) -> ProjLine:
    return coords if isinstance(coords, ProjLine) else ProjLine(tuple(coords))


def _minors_vanish(p: Sequence[Scalar], q: Sequence[Scalar]) -> bool:
    if len(p) != len(q):
        raise DimensionMismatch(f"dimension mismatch: {len(p) - 1} vs {len(q) - 1}")
    scale = norm(p) * norm(q)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if not is_zero(p[i] * q[j] - p[j] * q[i], scale):
                return False
    return True


def proj_equal(P, Q) -> bool:
    """True iff the two representatives are proportional (all 2x2 minors vanish).

    Works on points, lines or raw coordinate sequences.
    """
    return _minors_vanish(tuple(P), tuple(Q))


def is_proper(P: ProjPoint) -> bool:
    P = make_point(P)
    return not is_zero(P.coords[-1], _scale(P.coords))


def to_affine_chart(P: ProjPoint) -> tuple:
    P = make_point(P)
    if not is_proper(P):
        raise ImproperPoint(f"{P!r} is a point at infinity and has no affine coordinates")
    last = P.coords[-1]
    return tuple(c / last for c in P.coords[:-1])


def from_affine(a) -> ProjPoint:
    if not isinstance(a, (tuple, list)) and not hasattr(a, "__len__"):
        a = (a,)
    return ProjPoint(tuple(a) + (1,))


def cross(u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    return sum((a * b for a, b in zip(u, v)), start=0)


def _require_plane(P):
    if len(P) != 3:
        raise DimensionMismatch("join, meet and incidence need points of RP^2")


def join(P, Q) -> ProjLine:
    """The line through two distinct points of RP^2."""
    P, Q = make_point(P), make_point(Q)
    _require_plane(P)
    _require_plane(Q)
    if proj_equal(P, Q):
        raise IdenticalPoints(f"{P!r} and {Q!r} are the same point")
    return ProjLine(cross(P.coords, Q.coords))


def meet(l, m) -> ProjPoint:
    """The common point of two distinct lines. Distinct lines always meet."""
    l, m = make_line(l), make_line(m)
    if proj_equal(l, m):
        raise IdenticalLines(f"{l!r} and {m!r} are the same line")
    return ProjPoint(cross(l.coords, m.coords))


def incident(P, l) -> bool:
    P, l = make_point(P), make_line(l)
    _require_plane(P)
    return is_zero(dot(P.coords, l.coords), norm(P.coords) * norm(l.coords))
