"""Exact computational projective geometry of the line and the plane.

Points, lines, the projective group PGL(n+1), the cross-ratio, and central
projection onto an image plane, over exact rationals or floats.
"""

from .cross_ratio import (
    INFINITY,
    cross_ratio_affine,
    cross_ratio_collinear,
    cross_ratio_rp1,
    is_collinear,
    pencil_coordinates,
)
from .errors import (
    CenterInput,
    CenterOnPlane,
    DegenerateFrame,
    DimensionMismatch,
    DirectionParallel,
    EmptyScene,
    GeometryError,
    IdenticalLines,
    IdenticalPoints,
    ImproperPoint,
    NoImage,
    NotCollinear,
    NotDistinct,
    ParseError,
    SingularMatrix,
    ZeroVector,
)
from .group import (
    Homography,
    act_line,
    act_point,
    compose,
    homography_from_frames,
    identity,
    inverse,
    make_homography,
    pgl_equal,
)
from .homogeneous import (
    ProjLine,
    ProjPoint,
    from_affine,
    incident,
    is_proper,
    join,
    make_line,
    make_point,
    meet,
    normalize,
    proj_equal,
    to_affine_chart,
)
from .perspective import (
    CentralProjection,
    Plane3,
    Point3,
    Scene,
    project,
    project_homogeneous,
    projection_as_homography,
    render_scene,
    same_image,
    standard_projection,
    vanishing_point,
)
from .scalar import DEFAULT_EPSILON, epsilon, get_epsilon

__version__ = "0.1.0"
