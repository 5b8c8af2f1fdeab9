"""scikit-learn compatible wrappers.

Rows of ``X`` are points. Exact estimators work on ``object`` arrays of
:class:`fractions.Fraction`; with ``exact=False`` plain float arrays are used.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .group import act_point, homography_from_frames, inverse
from .homogeneous import ProjPoint, to_affine_chart
from .perspective import CentralProjection, Plane3, Point3, project, to_chart
from .scalar import to_scalar


def check_points(X, n_features=None, exact=True, name="X") -> np.ndarray:
    """Validate a 2-D array of points and coerce its entries to kernel scalars.

    ``n_features`` may be an int or a tuple of accepted widths.
    """
    if hasattr(X, "to_numpy"):
        X = X.to_numpy()
    arr = np.asarray(X, dtype=object)
    if arr.ndim == 1:
        raise ValueError(f"{name} must be 2-D (one point per row); got a 1-D array of length {arr.shape[0]}")
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise ValueError(f"{name} has no rows")
    if n_features is not None:
        allowed = (n_features,) if isinstance(n_features, int) else tuple(n_features)
        if arr.shape[1] not in allowed:
            raise ValueError(f"{name} has {arr.shape[1]} columns, expected {' or '.join(map(str, allowed))}")
    out = np.empty(arr.shape, dtype=object)
    for idx, value in np.ndenumerate(arr):
        out[idx] = to_scalar(value, exact=exact)
    return out if exact else out.astype(float)


def _homogenize(X: np.ndarray) -> list[ProjPoint]:
    if X.shape[1] == 2:
        return [ProjPoint((x, y, 1)) for x, y in X.tolist()]
    return [ProjPoint(tuple(row)) for row in X.tolist()]


def _emit(points, homogeneous: bool, exact: bool) -> np.ndarray:
    rows = [p.coords if homogeneous else to_affine_chart(p) for p in points]
    return np.array(rows, dtype=object if exact else float)


class HomographyEstimator(TransformerMixin, BaseEstimator):
    """Fit the homography of the plane sending 4 source points to 4 targets.

    Points are rows of chart coordinates ``(x, y)`` or homogeneous triples.
    ``transform`` returns rows in the same form as its input; chart output
    raises :class:`~projplane.errors.ImproperPoint` when an image lies at
    infinity.
    """

    def __init__(self, exact=True):
        self.exact = exact

    def fit(self, X, y):
        X = check_points(X, (2, 3), self.exact)
        y = check_points(y, (2, 3), self.exact, name="y")
        if X.shape[0] != 4 or y.shape[0] != 4:
            raise ValueError("a homography of the plane is fixed by exactly 4 correspondences")
        self.homography_ = homography_from_frames(_homogenize(X), _homogenize(y))
        self.n_features_in_ = X.shape[1]
        return self

    def _apply(self, g, X):
        X = check_points(X, (2, 3), self.exact)
        return _emit([act_point(g, p) for p in _homogenize(X)], X.shape[1] == 3, self.exact)

    def transform(self, X):
        check_is_fitted(self, "homography_")
        return self._apply(self.homography_, X)

    def inverse_transform(self, X):
        check_is_fitted(self, "homography_")
        return self._apply(inverse(self.homography_), X)


class CentralProjector(TransformerMixin, BaseEstimator):
    """Project rows of 3-D points from ``center`` onto the plane
    ``plane_normal . p = plane_offset`` and return image-plane chart coordinates."""

    def __init__(self, center=(0, 0, 0), plane_normal=(0, 0, 1), plane_offset=1, exact=True):
        self.center = center
        self.plane_normal = plane_normal
        self.plane_offset = plane_offset
        self.exact = exact

    def fit(self, X=None, y=None):
        conv = lambda v: to_scalar(v, exact=self.exact)
        plane = Plane3(tuple(conv(c) for c in self.plane_normal), conv(self.plane_offset))
        self.projection_ = CentralProjection(Point3(*(conv(c) for c in self.center)), plane)
        if X is not None:
            self.n_features_in_ = check_points(X, 3, self.exact).shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "projection_")
        X = check_points(X, 3, self.exact)
        plane = self.projection_.image_plane
        rows = [to_chart(plane, project(self.projection_, Point3(*row))) for row in X.tolist()]
        return np.array(rows, dtype=object if self.exact else float)
