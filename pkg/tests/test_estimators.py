from fractions import Fraction

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from projplane import ImproperPoint, act_point, sampling
from projplane.estimators import CentralProjector, HomographyEstimator, check_points

SQUARE = [[0, 0], [1, 0], [1, 1], [0, 1]]


def test_check_points():
    X = check_points([[1, "1/2"], [0.5, 2]])
    assert X.dtype == object
    assert X[0, 1] == Fraction(1, 2) and X[1, 0] == Fraction(1, 2)
    assert check_points([[1, 2]], exact=False).dtype == float
    with pytest.raises(ValueError, match="2-D"):
        check_points([1, 2, 3])
    with pytest.raises(ValueError, match="columns"):
        check_points([[1, 2, 3, 4]], (2, 3))
    with pytest.raises(ValueError, match="no rows"):
        check_points(np.empty((0, 2)))


def test_params_and_clone():
    est = HomographyEstimator(exact=False)
    assert est.get_params() == {"exact": False}
    assert clone(est).get_params() == {"exact": False}
    proj = CentralProjector(center=(0, 0, -1), plane_offset=2)
    assert clone(proj).get_params()["center"] == (0, 0, -1)


def test_homography_estimator_recovers_map():
    rng = sampling.spawn(0, "estimator")
    g = sampling.homography(rng)
    src = [sampling.point(rng, p_zero=0).coords for _ in range(4)]
    dst = [act_point(g, p).coords for p in src]
    est = HomographyEstimator().fit(src, dst)
    assert est.homography_ == g
    probe = [sampling.point(rng).coords for _ in range(5)]
    out = est.transform(probe)
    assert [tuple(r) for r in out] == [act_point(g, p).coords for p in probe]


def test_homography_estimator_chart_coordinates():
    target = [[0, 0], [2, 0], [2, 2], [0, 2]]
    est = HomographyEstimator().fit(SQUARE, target)
    assert est.transform([[Fraction(1, 2), Fraction(1, 4)]]).tolist() == [[1, Fraction(1, 2)]]
    assert est.inverse_transform([[1, 1]]).tolist() == [[Fraction(1, 2), Fraction(1, 2)]]
    assert est.n_features_in_ == 2


def test_inverse_transform_round_trip():
    rng = sampling.spawn(1, "estimator")
    g = sampling.homography(rng)
    src = [sampling.point(rng, p_zero=0).coords for _ in range(4)]
    est = HomographyEstimator().fit(src, [act_point(g, p).coords for p in src])
    probe = np.array([sampling.point(rng).coords for _ in range(5)], dtype=object)
    back = est.inverse_transform(est.transform(probe))
    assert [tuple(r) for r in back] == [tuple(r) for r in probe]


def test_chart_image_at_infinity():
    # keystone map sending the line y = 2 to infinity
    est = HomographyEstimator().fit(SQUARE, [[0, 0], [1, 0], [2, 2], [0, 2]])
    with pytest.raises(ImproperPoint):
        est.transform([[0, 2]])


def test_float_mode():
    est = HomographyEstimator(exact=False).fit(SQUARE, [[0, 0], [2, 0], [2, 2], [0, 2]])
    out = est.transform([[0.5, 0.25]])
    assert out.dtype == float
    np.testing.assert_allclose(out, [[1.0, 0.5]])


def test_wrong_number_of_correspondences():
    with pytest.raises(ValueError, match="4 correspondences"):
        HomographyEstimator().fit(SQUARE[:3], SQUARE[:3])


def test_not_fitted():
    with pytest.raises(NotFittedError):
        HomographyEstimator().transform(SQUARE)
    with pytest.raises(NotFittedError):
        CentralProjector().transform([[1, 1, 1]])


def test_central_projector_standard():
    proj = CentralProjector().fit()
    assert proj.transform([[2, 4, 2], [3, -3, 6]]).tolist() == [[1, 2], [Fraction(1, 2), Fraction(-1, 2)]]


def test_pipeline_projection_then_homography():
    pipe = make_pipeline(
        CentralProjector(exact=False),
        HomographyEstimator(exact=False),
    )
    X3 = np.array([[0.0, 0.0, 1.0], [2.0, 0.0, 2.0], [3.0, 3.0, 3.0], [0.0, 4.0, 4.0]])
    pipe.fit(X3, [[0, 0], [2, 0], [2, 2], [0, 2]])
    np.testing.assert_allclose(pipe.transform([[1.0, 1.0, 2.0]]), [[1.0, 1.0]])
