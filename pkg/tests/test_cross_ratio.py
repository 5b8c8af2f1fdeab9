from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from projplane import (
    INFINITY,
    NotCollinear,
    NotDistinct,
    act_point,
    cross_ratio_affine,
    cross_ratio_collinear,
    cross_ratio_rp1,
    from_affine,
    is_collinear,
    join,
    make_point,
    sampling,
)
from projplane.cross_ratio import pencil_coordinates

from .conftest import nonzero, small

distinct4 = st.lists(small, min_size=4, max_size=4, unique=True)


def line_parameter_oracle(points):
    """Affine parameter of proper collinear points along their chart line."""
    charts = [tuple(Fraction(c) / p.coords[2] for c in p.coords[:2]) for p in points]
    origin = charts[0]
    direction = next(
        (x - origin[0], y - origin[1]) for x, y in charts[1:] if (x, y) != origin
    )
    dd = direction[0] ** 2 + direction[1] ** 2
    return [((x - origin[0]) * direction[0] + (y - origin[1]) * direction[1]) / dd for x, y in charts]


class TestRP1:
    def test_consecutive_integers(self):
        assert cross_ratio_rp1((0, 1), (1, 1), (2, 1), (3, 1)) == Fraction(4, 3)

    def test_figure_value(self):
        value = cross_ratio_rp1((0, 1), (1, 1), (3, 1), (10, 1))
        assert value == Fraction(27, 20)
        assert float(value) == 1.35

    def test_improper_point(self):
        assert cross_ratio_rp1((0, 1), (1, 1), (1, 0), (2, 1)) == Fraction(1, 2)

    def test_not_distinct(self):
        with pytest.raises(NotDistinct):
            cross_ratio_rp1((0, 1), (1, 1), (2, 1), (0, 5))

    @given(distinct4, nonzero, nonzero, nonzero, nonzero)
    def test_representative_independent(self, xs, k1, k2, k3, k4):
        pts = [(x, 1) for x in xs]
        scaled = [(k * x, k) for k, x in zip((k1, k2, k3, k4), xs)]
        assert cross_ratio_rp1(*pts) == cross_ratio_rp1(*scaled)

    def test_infinity_value_is_singleton(self):
        assert str(INFINITY) == "inf"
        assert INFINITY is type(INFINITY)()


class TestAffine:
    def test_values(self):
        assert cross_ratio_affine(0, 1, 2, 3) == Fraction(4, 3)
        assert cross_ratio_affine(0, 1, 3, 10) == Fraction(27, 20)

    def test_not_distinct(self):
        with pytest.raises(NotDistinct):
            cross_ratio_affine(0, 1, 1, 3)

    def test_matches_determinant_form(self):
        rng = sampling.spawn(0, "eq8-eq9")
        for _ in range(1000):
            a, b, c, d = sampling.distinct_scalars(rng, 4)
            assert cross_ratio_affine(a, b, c, d) == cross_ratio_rp1(*(from_affine(x) for x in (a, b, c, d)))

    @given(distinct4)
    def test_symmetries(self, xs):
        a, b, c, d = xs
        lam = cross_ratio_affine(a, b, c, d)
        assert cross_ratio_affine(b, a, d, c) == lam
        assert cross_ratio_affine(c, d, a, b) == lam
        assert cross_ratio_affine(a, c, b, d) == 1 - lam
        if lam != 0:
            assert cross_ratio_affine(a, b, d, c) == 1 / lam

    def test_float(self):
        assert cross_ratio_affine(0.0, 1.0, 3.0, 10.0) == pytest.approx(1.35, rel=1e-12)


class TestCollinear:
    def test_is_collinear(self):
        assert is_collinear((1, 0, 0), (0, 1, 0), (1, 1, 0))
        assert not is_collinear((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_pencil_points_collinear(self, rng):
        for _ in range(100):
            P, Q = sampling.distinct_points(rng, 2)
            a, b = sampling.rational_or_zero(rng), sampling.rational(rng)
            R = tuple(a * p + b * q for p, q in zip(P.coords, Q.coords))
            assert is_collinear(P, Q, R)

    def test_figure_on_chart_axis(self):
        pts = [(0, 0, 1), (1, 0, 1), (3, 0, 1), (10, 0, 1)]
        assert cross_ratio_collinear(*pts) == Fraction(27, 20)

    def test_pair_swap(self, rng):
        for _ in range(100):
            A, B, C, D = sampling.collinear_quadruple(rng)
            assert cross_ratio_collinear(A, B, C, D) == cross_ratio_collinear(B, A, D, C)

    def test_not_collinear(self):
        with pytest.raises(NotCollinear):
            cross_ratio_collinear((0, 0, 1), (1, 0, 1), (3, 0, 1), (10, 1, 1))

    def test_not_distinct(self):
        with pytest.raises(NotDistinct):
            cross_ratio_collinear((0, 0, 1), (1, 0, 1), (3, 0, 1), (2, 0, 2))

    def test_pencil_coordinates_basis(self):
        P, Q = make_point((1, 2, 1)), make_point((3, -1, 1))
        assert pencil_coordinates(P, (P, Q)).coords == (1, 0)
        assert pencil_coordinates(Q, (P, Q)).coords == (0, 1)
        R = tuple(2 * p - 5 * q for p, q in zip(P.coords, Q.coords))
        assert pencil_coordinates(R, (P, Q)).coords == (Fraction(-2, 5), 1)

    def test_basis_independence(self, rng):
        for _ in range(200):
            A, B, C, D = sampling.collinear_quadruple(rng)
            assert cross_ratio_collinear(A, B, C, D) == cross_ratio_collinear(A, B, C, D, basis=(B, C))

    def test_matches_chart_parameter_oracle(self, rng):
        checked = 0
        while checked < 200:
            pts = sampling.collinear_quadruple(rng)
            if any(p.coords[2] == 0 for p in pts):
                continue
            t = line_parameter_oracle(pts)
            assert cross_ratio_collinear(*pts) == cross_ratio_affine(*t)
            checked += 1

    def test_representative_independent(self, rng):
        for _ in range(100):
            pts = sampling.collinear_quadruple(rng)
            ks = [sampling.rational(rng) for _ in pts]
            raw = [tuple(k * c for c in p.coords) for k, p in zip(ks, pts)]
            assert cross_ratio_collinear(*pts) == cross_ratio_collinear(*raw)

    def test_projective_invariance(self):
        rng = sampling.spawn(0, "invariance")
        for _ in range(1000):
            pts = sampling.collinear_quadruple(rng)
            g = sampling.homography(rng)
            assert cross_ratio_collinear(*pts) == cross_ratio_collinear(*(act_point(g, p) for p in pts))

    def test_float_invariance(self):
        rng = sampling.spawn(1, "float-invariance")
        for _ in range(200):
            pts = sampling.collinear_quadruple(rng)
            g = sampling.homography(rng)
            exact = cross_ratio_collinear(*pts)
            fpts = [sampling.floatify(act_point(g, p)) for p in pts]
            assert cross_ratio_collinear(*fpts) == pytest.approx(float(exact), rel=1e-6)

    def test_symmetries_random(self, rng):
        for _ in range(200):
            A, B, C, D = sampling.collinear_quadruple(rng)
            lam = cross_ratio_collinear(A, B, C, D)
            assert cross_ratio_collinear(C, D, A, B) == lam
            assert cross_ratio_collinear(A, C, B, D) == 1 - lam
            assert cross_ratio_collinear(A, B, D, C) == 1 / lam

    def test_line_is_join(self, rng):
        A, B, C, D = sampling.collinear_quadruple(rng)
        assert join(A, B) == join(C, D)
