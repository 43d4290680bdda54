import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import (
    centered_lambda_max,
    quad_reference,
    random_balanced,
    random_space,
    sampled_form_max,
)
from negtype import (
    Classification,
    DimensionTooSmall,
    InvalidCap,
    LengthMismatch,
    NotBalanced,
    SupremalStatus,
    balanced_basis,
    basis_matrix,
    classify,
    from_points,
    hilbert_embeddable,
    quad_form,
    random_ultrametric,
    restricted_form,
    supremal,
    validate_metric,
)


class TestBalancedBasis:
    def test_m2_single_direction(self):
        (v,) = balanced_basis(2)
        np.testing.assert_allclose(v.weights, [1 / math.sqrt(2), -1 / math.sqrt(2)])

    @pytest.mark.parametrize("m", [2, 3, 5, 9])
    def test_orthonormal_zero_sum(self, m):
        b = basis_matrix(m)
        np.testing.assert_allclose(b.T @ b, np.eye(m - 1), atol=1e-14)
        assert np.abs(b.sum(axis=0)).max() < 1e-14

    def test_list_form_spans_hyperplane(self):
        vs = balanced_basis(5)
        assert len(vs) == 4
        g = np.array([[u.weights @ v.weights for v in vs] for u in vs])
        np.testing.assert_allclose(g, np.eye(4), atol=1e-14)
        assert all(abs(v.weights.sum()) < 1e-14 for v in vs)

    def test_dimension_too_small(self):
        with pytest.raises(DimensionTooSmall):
            balanced_basis(1)

    def test_unbalanced_vector_rejected(self):
        from negtype import BalancedVector

        with pytest.raises(NotBalanced):
            BalancedVector([1.0, 1.0])


class TestQuadForm:
    def test_two_point_closed_form(self, two_point):
        # the form on the zero-sum line is -2 t^2 d^p
        rng = np.random.default_rng(0)
        for _ in range(50):
            t = rng.uniform(-3, 3)
            for p in (0.0, 0.5, 1.0, 2.0, 7.0):
                assert quad_form(two_point, p, [t, -t]) == pytest.approx(
                    -2 * t * t, rel=1e-12, abs=1e-300
                )

    def test_zero_vector(self, collinear):
        assert quad_form(collinear, 1.7, [0.0, 0.0, 0.0]) == 0.0

    @pytest.mark.parametrize("p,expected", [(2.0, 0.0), (3.0, 8.0), (1.0, -4.0)])
    def test_collinear_hand_expansion(self, collinear, p, expected):
        # six cross terms collapse to 2 (2^p - 4)
        assert quad_form(collinear, p, [1, -2, 1]) == pytest.approx(expected, abs=1e-12)
        assert 2 * (2**p - 4) == pytest.approx(expected, abs=1e-12)

    def test_length_mismatch(self, collinear):
        with pytest.raises(LengthMismatch):
            quad_form(collinear, 1.0, [1.0, -1.0])

    def test_matches_reference_loop(self):
        rng = np.random.default_rng(5)
        X = random_space(rng)
        for _ in range(20):
            v = random_balanced(X.size, rng)
            p = rng.uniform(0, 6)
            assert quad_form(X, p, v) == pytest.approx(
                quad_reference(X, p, v), rel=1e-12, abs=1e-14
            )


class TestClassify:
    def test_collinear_p1_strict(self, collinear):
        rep = classify(collinear, 1.0)
        assert rep.classification is Classification.STRICT
        # hand value: max of -2(a^2+c^2)/|xi|^2 over the hyperplane is -2/3
        assert rep.lambda_max == pytest.approx(-2 / 3, rel=1e-12)
        assert rep.lambda_max == pytest.approx(centered_lambda_max(collinear, 1.0), rel=1e-10)
        assert sampled_form_max(collinear, 1.0, 200, seed=1) < 0

    def test_collinear_p2_boundary(self, collinear):
        rep = classify(collinear, 2.0)
        assert rep.classification is Classification.BOUNDARY
        target = np.array([1, -2, 1]) / math.sqrt(6)
        assert abs(abs(rep.direction.weights @ target) - 1) < 1e-10
        assert quad_form(collinear, 2.0, rep.direction) == pytest.approx(0, abs=1e-12)

    def test_collinear_p3_not_neg_type(self, collinear):
        rep = classify(collinear, 3.0)
        assert rep.classification is Classification.NOT_NEG_TYPE
        # attained along (1,-2,1): 8 / |(1,-2,1)|^2 = 4/3
        assert rep.lambda_max == pytest.approx(4 / 3, rel=1e-12)
        assert rep.lambda_max == pytest.approx(centered_lambda_max(collinear, 3.0), rel=1e-10)

    def test_four_cycle_p2_eigenvalue(self, four_cycle):
        # circulant [0,1,4,1]: restricted eigenvalues are {-4, 2, -4}
        rep = classify(four_cycle, 2.0)
        assert rep.lambda_max == pytest.approx(2.0, rel=1e-12)
        assert rep.classification is Classification.NOT_NEG_TYPE

    def test_direction_is_unit_and_balanced(self, four_cycle):
        rep = classify(four_cycle, 2.0)
        assert np.linalg.norm(rep.direction.weights) == pytest.approx(1.0, rel=1e-12)
        assert abs(rep.direction.weights.sum()) < 1e-12

    def test_direction_attains_lambda_max(self):
        rng = np.random.default_rng(17)
        for _ in range(10):
            X = random_space(rng)
            p = rng.uniform(0.2, 5)
            rep = classify(X, p)
            assert quad_form(X, p, rep.direction) == pytest.approx(
                rep.lambda_max, rel=1e-9, abs=1e-12
            )

    def test_lambda_max_at_zero_is_negative(self):
        rng = np.random.default_rng(23)
        for _ in range(10):
            X = random_space(rng)
            rep = classify(X, 0.0)
            # the p = 0 form is minus the squared norm on the hyperplane
            assert rep.lambda_max == pytest.approx(-1.0, rel=1e-12)
            assert rep.classification is Classification.STRICT


class TestRestrictionCorrectness:
    def test_matches_quad_form(self):
        rng = np.random.default_rng(31)
        X = random_space(rng)
        b = basis_matrix(X.size)
        for p in (0.5, 1.0, 2.0, 3.7):
            m = restricted_form(X, p)
            for _ in range(250):
                v = rng.standard_normal(X.size - 1)
                v /= np.linalg.norm(v)
                assert quad_form(X, p, b @ v) == pytest.approx(
                    float(v @ m @ v), rel=1e-10, abs=1e-12
                )


class TestSupremal:
    def test_collinear(self, collinear):
        sup = supremal(collinear)
        assert sup.status is SupremalStatus.FINITE
        assert sup.lo <= sup.hi
        assert sup.hi - sup.lo <= 1e-10
        assert sup.midpoint == pytest.approx(2.0, abs=1e-8)
        # independent sign-change scan around the bracket
        assert centered_lambda_max(collinear, 1.9) < 0
        assert centered_lambda_max(collinear, 2.1) > 0

    def test_four_cycle(self, four_cycle):
        sup = supremal(four_cycle)
        assert sup.status is SupremalStatus.FINITE
        assert sup.midpoint == pytest.approx(1.0, abs=1e-8)
        assert centered_lambda_max(four_cycle, 0.9) < 0
        assert centered_lambda_max(four_cycle, 1.1) > 0

    def test_equilateral_ultrametric(self, equilateral):
        sup = supremal(equilateral)
        assert sup.status is SupremalStatus.INFINITE_ULTRAMETRIC
        assert sup.lo is None and sup.hi is None and sup.midpoint is None

    def test_exceeds_cap_near_equilateral(self):
        # distances {1, 1, 1.001}: positive direction appears only once
        # 1.001^p > 4, i.e. beyond p ~ 1386
        X = validate_metric(None, [[0, 1, 1], [1, 0, 1.001], [1, 1.001, 0]])
        sup = supremal(X)
        assert sup.status is SupremalStatus.EXCEEDS_CAP
        assert classify(X, 64.0).classification is Classification.STRICT
        big = supremal(X, cap=2048.0)
        assert big.status is SupremalStatus.FINITE
        assert big.midpoint == pytest.approx(math.log(4) / math.log(1.001), rel=1e-6)

    def test_small_cap_exceeded(self, collinear):
        sup = supremal(collinear, cap=1.5)
        assert sup.status is SupremalStatus.EXCEEDS_CAP
        assert sup.cap == 1.5

    def test_invalid_cap(self, collinear):
        with pytest.raises(InvalidCap):
            supremal(collinear, cap=0.0)
        with pytest.raises(InvalidCap):
            supremal(collinear, width_tol=-1.0)

    def test_bracket_endpoints_have_correct_signs(self):
        rng = np.random.default_rng(41)
        for _ in range(5):
            X = random_space(rng)
            sup = supremal(X)
            if sup.status is not SupremalStatus.FINITE:
                continue
            assert centered_lambda_max(X, sup.lo) <= 1e-9
            assert centered_lambda_max(X, sup.hi) >= -1e-9

    def test_finite_lower_endpoint_positive(self):
        rng = np.random.default_rng(43)
        for _ in range(10):
            X = random_space(rng)
            sup = supremal(X)
            if sup.status is SupremalStatus.FINITE:
                assert sup.lo > 0

    def test_boundary_behavior_near_midpoint(self):
        rng = np.random.default_rng(47)
        done = 0
        while done < 5:
            X = random_space(rng)
            sup = supremal(X)
            if sup.status is not SupremalStatus.FINITE:
                continue
            done += 1
            mid = sup.midpoint
            if mid > 0.01:
                assert classify(X, mid - 0.01).classification is Classification.STRICT
            rep = classify(X, mid)
            assert abs(rep.lambda_max) <= 10 * rep.tolerance


class TestIntervalStructure:
    def test_monotone_classification(self):
        # negative type at q forces negative type at every p < q
        rng = np.random.default_rng(53)
        for _ in range(15):
            X = random_space(rng)
            ps = np.sort(rng.uniform(0, 6, size=4))
            reps = [classify(X, p).classification for p in ps]
            for a in range(len(ps)):
                for b in range(a + 1, len(ps)):
                    if reps[b] is not Classification.NOT_NEG_TYPE:
                        assert reps[a] is not Classification.NOT_NEG_TYPE

    def test_scale_invariance(self):
        rng = np.random.default_rng(59)
        for _ in range(5):
            X = random_space(rng)
            ps = rng.uniform(0.1, 5, size=3)
            for c in (0.1, 3.0):
                Y = validate_metric(X.labels, c * X.dist)
                for p in ps:
                    assert classify(X, p).classification is classify(Y, p).classification
                a, b = supremal(X), supremal(Y)
                assert a.status is b.status
                if a.status is SupremalStatus.FINITE:
                    assert abs(a.lo - b.lo) <= 2e-10
                    assert abs(a.hi - b.hi) <= 2e-10

    def test_quad_form_scales_by_c_to_p(self, collinear):
        c = 3.0
        Y = validate_metric(None, c * collinear.dist)
        rng = np.random.default_rng(61)
        for _ in range(10):
            v = random_balanced(3, rng)
            p = rng.uniform(0, 4)
            assert quad_form(Y, p, v) == pytest.approx(
                c**p * quad_form(collinear, p, v), rel=1e-12
            )


class TestHilbertEmbeddable:
    def test_collinear(self, collinear):
        assert hilbert_embeddable(collinear)

    def test_four_cycle(self, four_cycle):
        assert not hilbert_embeddable(four_cycle)

    def test_ultrametric(self):
        assert hilbert_embeddable(random_ultrametric(6, seed=3))

    def test_euclidean_clouds_never_fail_at_two(self):
        rng = np.random.default_rng(67)
        for _ in range(10):
            n = int(rng.integers(3, 9))
            dim = int(rng.integers(1, 5))
            X = from_points(rng.standard_normal((n, dim)), q=2)
            assert classify(X, 2.0).classification is not Classification.NOT_NEG_TYPE
            assert hilbert_embeddable(X)


@settings(max_examples=30, deadline=None)
@given(
    t=st.floats(-5, 5, allow_nan=False).filter(lambda t: abs(t) > 1e-3),
    p=st.floats(0, 8, allow_nan=False),
    d=st.floats(0.1, 10, allow_nan=False),
)
def test_two_point_form_property(t, p, d):
    X = validate_metric(None, [[0, d], [d, 0]])
    assert quad_form(X, p, [t, -t]) == pytest.approx(-2 * t * t * d**p, rel=1e-11)
