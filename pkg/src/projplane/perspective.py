"""Central projection from a center ``O`` onto an image plane ``alpha``.

Coordinates on a plane ``n . p = c`` come from a fixed affine chart: with
``k`` the index of the largest-magnitude normal component (first one on ties)
and ``a < b`` the two remaining indices, the chart of ``p`` is
``(p[a], p[b])``. For the plane ``z = 1`` this is the familiar ``(x, y)``.
The chart is affine and exact, so projections, charts and homographies all
stay rational on rational input.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .errors import CenterInput, CenterOnPlane, DirectionParallel, EmptyScene, NoImage
from .group import Homography, homography_from_frames
from .homogeneous import ProjPoint, dot
from .scalar import Scalar, is_zero, norm, to_scalar

__all__ = [
    "Point3",
    "Plane3",
    "CentralProjection",
    "Scene",
    "Drawing",
    "project",
    "project_homogeneous",
    "same_image",
    "chart_axes",
    "to_chart",
    "from_chart",
    "projection_as_homography",
    "vanishing_point",
    "render_scene",
    "standard_projection",
]


class Point3(NamedTuple):
    x: Scalar
    y: Scalar
    z: Scalar

    @classmethod
    def of(cls, p) -> "Point3":
        x, y, z = (to_scalar(c) for c in p)
        return cls(x, y, z)

    def __sub__(self, other):
        return Point3(self.x - other[0], self.y - other[1], self.z - other[2])

    def __add__(self, other):
        return Point3(self.x + other[0], self.y + other[1], self.z + other[2])

    def scaled(self, t) -> "Point3":
        return Point3(t * self.x, t * self.y, t * self.z)


@dataclass(frozen=True)
class Plane3:
    """The plane ``{p : normal . p = offset}``."""

    normal: tuple
    offset: Scalar

    def __post_init__(self):
        n = Point3.of(self.normal)
        if all(c == 0 for c in n):
            raise ValueError("plane normal must be nonzero")
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", to_scalar(self.offset))

    def value(self, p) -> Scalar:
        """Signed residual ``normal . p - offset``."""
        return dot(self.normal, p) - self.offset

    def contains(self, p) -> bool:
        return is_zero(self.value(p), norm(self.normal) * max(1.0, norm(p)))

    @classmethod
    def through(cls, p0, u, v) -> "Plane3":
        """Plane through ``p0`` spanned by directions ``u`` and ``v``."""
        p0 = Point3.of(p0)
        n = (
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        )
        return cls(n, dot(n, p0))


@dataclass(frozen=True)
class CentralProjection:
    center: Point3
    image_plane: Plane3

    def __post_init__(self):
        object.__setattr__(self, "center", Point3.of(self.center))
        if self.image_plane.contains(self.center):
            raise CenterOnPlane("the image plane must not contain the center")


def standard_projection() -> CentralProjection:
    """Center at the origin, image plane ``z = 1``."""
    return CentralProjection(Point3.of((0, 0, 0)), Plane3((0, 0, 1), 1))


def chart_axes(plane: Plane3) -> tuple[int, int, int]:
    """``(a, b, k)``: chart coordinates are ``p[a], p[b]``; ``p[k]`` is solved for."""
    mags = [abs(c) for c in plane.normal]
    k = mags.index(max(mags))
    a, b = (i for i in range(3) if i != k)
    return a, b, k


def to_chart(plane: Plane3, p) -> tuple:
    a, b, _ = chart_axes(plane)
    return (p[a], p[b])


def from_chart(plane: Plane3, st) -> Point3:
    a, b, k = chart_axes(plane)
    n = plane.normal
    s, t = (to_scalar(c) for c in st)
    p = [0, 0, 0]
    p[a], p[b] = s, t
    p[k] = (plane.offset - n[a] * s - n[b] * t) / n[k]
    return Point3(*p)


def _ray(proj: CentralProjection, A):
    """``(numerator, denominator, direction)`` of the ray parameter ``t`` with
    ``O + t (A - O)`` on the image plane."""
    A = Point3.of(A)
    O = proj.center
    d = A - O
    if all(c == 0 for c in d):
        raise CenterInput("the center of projection has no image")
    num = -proj.image_plane.value(O)
    den = dot(proj.image_plane.normal, d)
    return num, den, d


def project(proj: CentralProjection, A) -> Point3:
    """The point of the image plane collinear with the center and ``A``."""
    num, den, d = _ray(proj, A)
    if is_zero(den, norm(proj.image_plane.normal) * norm(d)):
        raise NoImage(f"{tuple(A)} lies on the plane through the center parallel to the image plane")
    t = num / den
    return proj.center + d.scaled(t)


def project_homogeneous(proj: CentralProjection, A) -> ProjPoint:
    """Image of ``A`` as a point of the projective closure of the image chart.

    Total on every ``A`` other than the center: points with no image map to
    the improper point of their direction.
    """
    num, den, d = _ray(proj, A)
    a, b, _ = chart_axes(proj.image_plane)
    O = proj.center
    return ProjPoint((O[a] * den + num * d[a], O[b] * den + num * d[b], den))


def same_image(proj: CentralProjection, A1, A2) -> bool:
    P1, P2 = project(proj, A1), project(proj, A2)
    scale = max(1.0, norm(P1), norm(P2))
    return all(is_zero(x - y, scale) for x, y in zip(P1, P2))


def projection_as_homography(proj: CentralProjection, source_plane: Plane3, src_frame) -> Homography:
    """The homography from ``source_plane``'s chart to the image plane's chart
    induced by the projection, fixed by four frame points of ``source_plane``."""
    if source_plane.contains(proj.center):
        raise CenterOnPlane("the source plane contains the center")
    src, dst = [], []
    for p in src_frame:
        p = Point3.of(p)
        if not source_plane.contains(p):
            raise ValueError(f"frame point {tuple(p)} is not on the source plane")
        src.append(ProjPoint(to_chart(source_plane, p) + (1,)))
        dst.append(project_homogeneous(proj, p))
    return homography_from_frames(src, dst)


def vanishing_point(proj: CentralProjection, direction) -> Point3:
    """Where the images of all lines with ``direction`` converge."""
    d = Point3.of(direction)
    if all(c == 0 for c in d):
        raise ValueError("direction must be nonzero")
    if is_zero(dot(proj.image_plane.normal, d), norm(proj.image_plane.normal) * norm(d)):
        raise DirectionParallel("direction is parallel to the image plane; its vanishing point is at infinity")
    return project(proj, proj.center + d)


@dataclass(frozen=True)
class Scene:
    vertices: tuple
    edges: tuple
    labels: tuple = ()
    directions: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(Point3.of(v) for v in self.vertices))
        object.__setattr__(self, "edges", tuple((int(i), int(j)) for i, j in self.edges))
        object.__setattr__(self, "directions", tuple(Point3.of(d) for d in self.directions))
        nv = len(self.vertices)
        for i, j in self.edges:
            if not (0 <= i < nv and 0 <= j < nv):
                raise ValueError(f"edge ({i}, {j}) refers to a missing vertex")
            if i == j:
                raise ValueError(f"edge ({i}, {j}) is a self-loop")


@dataclass(frozen=True)
class Drawing:
    """Chart-coordinate output of :func:`render_scene`."""

    segments: tuple
    markers: tuple = ()
    skipped: tuple = field(default=(), compare=False)


def _render_edge(proj, A, B, front_only, margin):
    O = proj.center
    n = proj.image_plane.normal
    front = proj.image_plane.value(O) < 0  # sign of the ray parameter's numerator
    sA = float(dot(n, Point3.of(A) - O))
    sB = float(dot(n, Point3.of(B) - O))

    def in_front(s):
        return (s > 0) == front

    a, b, _ = chart_axes(proj.image_plane)

    def image(P):
        Q = project(proj, P)
        return (float(Q[a]), float(Q[b]))

    tol = 1e-12 * max(1.0, abs(sA), abs(sB))
    zeroA, zeroB = abs(sA) <= tol, abs(sB) <= tol
    if zeroA and zeroB:
        return None
    if not zeroA and not zeroB and (sA > 0) == (sB > 0):
        if front_only and not in_front(sA):
            return None
        return (image(A), image(B))
    # the segment touches or crosses the no-image plane: keep one side of it
    keep_A = not zeroA and (zeroB or in_front(sA) or not in_front(sB))
    if front_only and not in_front(sA if keep_A else sB):
        return None
    u0 = sA / (sA - sB)
    u = u0 - margin if keep_A else u0 + margin
    A3 = Point3(*(float(c) for c in A))
    B3 = Point3(*(float(c) for c in B))
    cut = A3 + (B3 - A3).scaled(u)
    return (image(A3), image(cut)) if keep_A else (image(cut), image(B3))


def render_scene(
    scene: Scene,
    proj: CentralProjection,
    directions: Sequence = (),
    *,
    front_only: bool = False,
    margin: float = 1e-6,
    workers: int | None = None,
) -> Drawing:
    """Project every edge of ``scene`` into the image chart.

    Edges crossing the plane through the center parallel to the image plane
    are cut ``margin`` (in edge parameter) short of it. Vanishing points of
    ``directions`` and of the scene's own directions are returned as markers;
    directions parallel to the image plane are skipped.
    """
    jobs = [(scene.vertices[i], scene.vertices[j]) for i, j in scene.edges]

    def run(job):
        return _render_edge(proj, job[0], job[1], front_only, margin)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]

    segments = tuple(r for r in results if r is not None)
    skipped = tuple(edge for edge, r in zip(scene.edges, results) if r is None)

    a, b, _ = chart_axes(proj.image_plane)
    markers = []
    for d in tuple(scene.directions) + tuple(Point3.of(d) for d in directions):
        try:
            v = vanishing_point(proj, d)
        except DirectionParallel:
            continue
        m = (float(v[a]), float(v[b]))
        if m not in markers:
            markers.append(m)

    if not segments:
        raise EmptyScene("no edge of the scene has an image")
    return Drawing(segments, tuple(markers), skipped)
