"""Random perspective configurations shared by the perspective and acceptance tests."""

from projplane import CentralProjection, IdenticalLines, IdenticalPoints, NoImage, Plane3, Point3, sampling
from projplane.group import det
from projplane.perspective import from_chart


def random_point3(rng):
    return Point3(*(sampling.rational_or_zero(rng) for _ in range(3)))


def random_plane(rng):
    while True:
        normal = tuple(sampling.rational_or_zero(rng, 0.3) for _ in range(3))
        if any(normal):
            return Plane3(normal, sampling.rational_or_zero(rng))


def random_projection(rng):
    while True:
        center, plane = random_point3(rng), random_plane(rng)
        if plane.value(center) != 0:
            return CentralProjection(center, plane)


def homogenized(*points):
    return tuple(tuple(p) + (1,) for p in points)


def collinear3(a, b, c):
    """Exact collinearity of three affine points of R^3 via the rank of their differences."""
    u, v = b - a, c - a
    cross = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
    return all(x == 0 for x in cross)


def random_frame(rng, plane):
    while True:
        st = [(sampling.rational_or_zero(rng), sampling.rational_or_zero(rng)) for _ in range(4)]
        ok = True
        for i in range(4):
            for j in range(i + 1, 4):
                for k in range(j + 1, 4):
                    if det([st[i] + (1,), st[j] + (1,), st[k] + (1,)]) == 0:
                        ok = False
        if ok:
            return [from_chart(plane, p) for p in st]


SKIP = (NoImage, IdenticalPoints, IdenticalLines)
