import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nil3trans.core import (
    FrameVector,
    Isometry,
    KillingField,
    MetricParam,
    ORIGIN,
    Point,
    connection_bilinear,
    connection_table,
    covariant_derivative_fd,
    frame_vector_from_coordinate,
    group_inv,
    group_mul,
    killing_eval,
    metric,
    norm,
    sectional_curvature,
    vertical_translation_field,
)

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
points = st.builds(Point, coord, coord, coord)


class TestGroup:
    def test_identity(self):
        assert group_mul(ORIGIN, Point(1.0, 2.0, 3.0)) == Point(1.0, 2.0, 3.0)

    def test_hand_product(self):
        assert group_mul(Point(1, 0, 0), Point(0, 1, 0)) == Point(1.0, 1.0, 0.5)

    def test_inverse_is_negation(self):
        p = Point(0.3, -1.2, 0.7)
        assert group_mul(p, group_inv(p)) == ORIGIN

    @given(points, points, points)
    @settings(max_examples=200)
    def test_associativity(self, p, q, r):
        lhs = group_mul(group_mul(p, q), r)
        rhs = group_mul(p, group_mul(q, r))
        assert max(abs(a - b) for a, b in zip(lhs.coords(), rhs.coords())) < 1e-12

    def test_associativity_bulk(self):
        rng = np.random.default_rng(0)
        for _ in range(1000):
            p, q, r = (Point(*rng.uniform(-5, 5, 3)) for _ in range(3))
            lhs = group_mul(group_mul(p, q), r)
            rhs = group_mul(p, group_mul(q, r))
            assert max(abs(a - b) for a, b in zip(lhs.coords(), rhs.coords())) < 1e-12


class TestMetric:
    def test_lambda_one_vertical(self):
        z = FrameVector(ORIGIN, 0, 0, 1)
        assert metric(1.0, z, z) == 1.0

    def test_unit_vertical_any_lambda(self):
        for lam in (0.25, 1.0, 4.0, 100.0):
            e3 = FrameVector(ORIGIN, 0, 0, 1 / math.sqrt(lam))
            assert metric(lam, e3, e3) == pytest.approx(1.0, abs=1e-15)

    def test_frame_orthogonality(self):
        v = FrameVector(ORIGIN, 1, 0, 1)
        w = FrameVector(ORIGIN, 0, 1, 0)
        assert metric(2.0, v, w) == 0.0

    def test_orthonormal_frame_all_lambdas(self):
        for lam in (0.25, 1.0, 4.0, 100.0):
            s = math.sqrt(lam)
            basis = [FrameVector(ORIGIN, 1, 0, 0), FrameVector(ORIGIN, 0, 1, 0),
                     FrameVector(ORIGIN, 0, 0, 1 / s)]
            for i, u in enumerate(basis):
                for j, w in enumerate(basis):
                    assert metric(lam, u, w) == pytest.approx(
                        1.0 if i == j else 0.0, abs=1e-15)

    def test_mismatched_base_points(self):
        v = FrameVector(ORIGIN, 1, 0, 0)
        w = FrameVector(Point(1, 0, 0), 1, 0, 0)
        with pytest.raises(ValueError):
            metric(1.0, v, w)

    def test_metric_param_validation(self):
        with pytest.raises(ValueError):
            MetricParam(0.0)
        with pytest.raises(ValueError):
            MetricParam(-1.0)

    def test_coordinate_frame_round_trip(self):
        p = Point(0.7, -1.1, 0.4)
        v = frame_vector_from_coordinate(p, 0.3, -0.2, 1.5)
        assert v.coordinate_velocity() == pytest.approx((0.3, -0.2, 1.5), abs=1e-15)


class TestConnection:
    def test_diagonal_vanishes(self):
        for lam in (0.5, 1.0, 4.0):
            assert connection_table(lam, "X", "X") == (0.0, 0.0, 0.0)
            assert connection_table(lam, "Y", "Y") == (0.0, 0.0, 0.0)
            assert connection_table(lam, "Z", "Z") == (0.0, 0.0, 0.0)

    def test_nabla_x_y_is_half_z(self):
        # Z-frame coefficient 1/2, i.e. (sqrt(lam)/2) on the unit vertical slot
        for lam in (0.5, 1.0, 4.0):
            assert connection_table(lam, "X", "Y") == (0.0, 0.0, 0.5)
            assert connection_table(lam, "Y", "X") == (0.0, 0.0, -0.5)

    def test_torsion_free(self):
        for lam in (0.5, 1.0, 4.0):
            dxy = connection_table(lam, "X", "Y")
            dyx = connection_table(lam, "Y", "X")
            assert tuple(a - b for a, b in zip(dxy, dyx)) == (0.0, 0.0, 1.0)

    def test_metric_compatibility(self):
        # coefficients of the unit frame are constant, so
        # <nabla_Ei Ej, Ek> + <Ej, nabla_Ei Ek> must vanish
        lam = 2.0
        s = math.sqrt(lam)
        unit = [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0 / s)]
        for vi in unit:
            for j, vj in enumerate(unit):
                for k, vk in enumerate(unit):
                    dj = connection_bilinear(lam, vi, vj)
                    dk = connection_bilinear(lam, vi, vk)
                    val = sum(a * b * w for a, b, w in
                              zip(dj, vk, (1, 1, lam))) + \
                        sum(a * b * w for a, b, w in zip(vj, dk, (1, 1, lam)))
                    assert val == pytest.approx(0.0, abs=1e-15)


class TestSectionalCurvature:
    def test_horizontal_plane(self):
        for lam in (0.5, 1.0, 4.0):
            v1 = FrameVector(ORIGIN, 1, 0, 0)
            v2 = FrameVector(ORIGIN, 0, 1, 0)
            assert sectional_curvature(lam, v1, v2) == pytest.approx(
                -0.75 * lam, abs=1e-13)

    def test_vertical_planes(self):
        for lam in (0.5, 1.0, 4.0):
            vx = FrameVector(ORIGIN, 1, 0, 0)
            vy = FrameVector(ORIGIN, 0, 1, 0)
            vz = FrameVector(ORIGIN, 0, 0, 1.0)
            assert sectional_curvature(lam, vx, vz) == pytest.approx(
                0.25 * lam, abs=1e-13)
            assert sectional_curvature(lam, vy, vz) == pytest.approx(
                0.25 * lam, abs=1e-13)

    def test_mixed_plane(self):
        # plane spanned by X and (Y + unit vertical)/sqrt(2): a^2 = b^2 = 1/2
        lam = 3.0
        s = math.sqrt(lam)
        v1 = FrameVector(ORIGIN, 1, 0, 0)
        v2 = FrameVector(ORIGIN, 0, 1 / math.sqrt(2), 1 / (s * math.sqrt(2)))
        assert sectional_curvature(lam, v1, v2) == pytest.approx(
            -0.25 * lam, abs=1e-13)

    def test_basis_independence(self):
        rng = np.random.default_rng(3)
        lam = 1.7
        for _ in range(20):
            v1 = FrameVector(ORIGIN, *rng.uniform(-1, 1, 3))
            v2 = FrameVector(ORIGIN, *rng.uniform(-1, 1, 3))
            k = sectional_curvature(lam, v1, v2)
            a, b, c, d = rng.uniform(-2, 2, 4)
            if abs(a * d - b * c) < 0.1:
                continue
            w1 = FrameVector(ORIGIN, *(a * u + b * w for u, w in
                                       zip(v1.coeffs(), v2.coeffs())))
            w2 = FrameVector(ORIGIN, *(c * u + d * w for u, w in
                                       zip(v1.coeffs(), v2.coeffs())))
            assert sectional_curvature(lam, w1, w2) == pytest.approx(k, abs=1e-10)

    def test_degenerate_span(self):
        v = FrameVector(ORIGIN, 1, 1, 0)
        with pytest.raises(ValueError):
            sectional_curvature(1.0, v, v)


class TestKilling:
    def test_f3_constant(self):
        f3 = KillingField(a3=1.0)
        for p in (ORIGIN, Point(3, -2, 1)):
            assert killing_eval(f3, p).coeffs() == (0.0, 0.0, 1.0)

    def test_f4_example(self):
        f4 = KillingField(a4=1.0)
        v = killing_eval(f4, Point(1, 0, 0))
        assert v.coeffs() == (0.0, 1.0, -0.5)

    def test_f1_origin(self):
        assert killing_eval(KillingField(a1=1.0), ORIGIN).coeffs() == (1.0, 0.0, 0.0)

    def test_z_coefficient_identity(self):
        k = KillingField(a1=0.5, a2=-1.5, a3=2.0)
        p = Point(1.2, -0.7, 3.0)
        v = killing_eval(k, p)
        assert v.cZ == pytest.approx(2.0 + 0.5 * p.y + 1.5 * p.x, abs=1e-15)

    def test_f3_only_constant_norm(self):
        pts = [Point(x, y, 0.0) for x in (-2, 0, 1.5) for y in (-1, 0.5, 2)]
        lam = 2.0
        norms = {i: [norm(lam, killing_eval(KillingField(**{f"a{i}": 1.0}), p))
                     for p in pts] for i in (1, 2, 3, 4)}
        assert np.var(norms[3]) == 0.0
        assert norms[3][0] == pytest.approx(math.sqrt(lam), abs=1e-15)
        for i in (1, 2, 4):
            assert np.var(norms[i]) > 0

    def test_killing_identity_finite_difference(self):
        rng = np.random.default_rng(5)
        for lam in (0.5, 2.0):
            for i in (1, 2, 3, 4):
                f = KillingField(**{f"a{i}": 1.0})
                for _ in range(5):
                    p = Point(*rng.uniform(-2, 2, 3))
                    u = FrameVector(p, *rng.uniform(-1, 1, 3))
                    w = FrameVector(p, *rng.uniform(-1, 1, 3))
                    du = covariant_derivative_fd(lam, lambda q: killing_eval(f, q), u)
                    dw = covariant_derivative_fd(lam, lambda q: killing_eval(f, q), w)
                    assert metric(lam, du, w) + metric(lam, dw, u) == \
                        pytest.approx(0.0, abs=1e-6)

    def test_vertical_translation_field(self):
        lam = 4.0
        v = killing_eval(vertical_translation_field(lam), Point(1, 2, 3))
        assert v.coeffs() == (0.0, 0.0, 0.5)
        assert norm(lam, v) == pytest.approx(1.0, abs=1e-15)


class TestIsometry:
    def test_left_translation_round_trip(self):
        iso = Isometry.left_translation(Point(0.4, -1.0, 2.0))
        p = Point(1.0, 2.0, -0.5)
        q = iso.inverse().apply(iso.apply(p))
        assert max(abs(a - b) for a, b in zip(p.coords(), q.coords())) < 1e-13

    def test_rotation_round_trip(self):
        iso = Isometry.rotation(1.1)
        p = Point(1.0, 2.0, -0.5)
        q = iso.inverse().apply(iso.apply(p))
        assert max(abs(a - b) for a, b in zip(p.coords(), q.coords())) < 1e-13

    def test_metric_preserved(self):
        rng = np.random.default_rng(9)
        lam = 2.5
        isos = [Isometry.left_translation(Point(1.0, -0.3, 0.8)),
                Isometry.rotation(0.7),
                Isometry.composite([Isometry.rotation(-0.4),
                                    Isometry.left_translation(Point(0, 1, 0))])]
        for iso in isos:
            for _ in range(10):
                p = Point(*rng.uniform(-2, 2, 3))
                v = FrameVector(p, *rng.uniform(-1, 1, 3))
                w = FrameVector(p, *rng.uniform(-1, 1, 3))
                before = metric(lam, v, w)
                after = metric(lam, iso.push_forward(v), iso.push_forward(w))
                assert after == pytest.approx(before, abs=1e-12)

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            Isometry("glide", 1.0)
