import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coefbound.series import (
    DEFAULT_ORDER,
    SeriesError,
    TruncatedSeries,
    blaschke_schwarz,
    coefficients_from_schwarz,
    exp_series,
    mul,
    ratio_to_coefficients,
    reciprocal,
    unit_series,
)
from coefbound.schwarz import SchwarzCoefficients, validate_schwarz


def ts(*coeffs):
    return TruncatedSeries(coeffs)


class TestConstruction:
    def test_rejects_nan(self):
        with pytest.raises(SeriesError):
            TruncatedSeries([1.0, float("nan")])

    def test_rejects_inf(self):
        with pytest.raises(SeriesError):
            TruncatedSeries([1.0, complex(0, math.inf)])

    def test_rejects_empty(self):
        with pytest.raises(SeriesError):
            TruncatedSeries([])

    def test_immutable(self):
        s = ts(1.0, 2.0)
        with pytest.raises(ValueError):
            s.coeffs[0] = 5.0


class TestMul:
    def test_unit_identity(self):
        s = ts(0.3, -1.2, 0.7, 2.0)
        out = mul(s, unit_series(3))
        assert np.allclose(out.coeffs, s.coeffs)

    def test_hand_cauchy_product(self):
        # (0.5 - z) * (1 + 0.5 z + 0.25 z^2), worked by hand
        out = mul(ts(0.5, -1.0, 0.0), ts(1.0, 0.5, 0.25))
        assert np.allclose(out.coeffs, [0.5, -0.75, -0.375])

    def test_z_times_z(self):
        out = mul(ts(0, 1, 0), ts(0, 1, 0))
        assert np.allclose(out.coeffs, [0, 0, 1])

    def test_truncates_to_smaller_order(self):
        out = mul(ts(1, 1), ts(1, 1, 1, 1))
        assert out.order == 1


class TestReciprocal:
    def test_geometric(self):
        out = reciprocal(ts(1.0, -0.5, 0.0, 0.0))
        assert np.allclose(out.coeffs, [1.0, 0.5, 0.25, 0.125])

    def test_constant(self):
        out = reciprocal(ts(2.0, 0.0, 0.0))
        assert np.allclose(out.coeffs, [0.5, 0.0, 0.0])

    def test_triangular_solve(self):
        out = reciprocal(ts(1.0, 1.0, 0.0))
        assert np.allclose(out.coeffs, [1.0, -1.0, 1.0])

    def test_zero_constant_rejected(self):
        with pytest.raises(SeriesError):
            reciprocal(ts(0.0, 1.0))

    @given(
        st.lists(
            st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False),
            min_size=2,
            max_size=9,
        )
    )
    @settings(max_examples=150, deadline=None)
    def test_mul_roundtrip(self, coeffs):
        # keep |tail| / |constant| <= 2 so the inversion stays well conditioned
        # (the O(1)-scale regime the series engine is used in)
        coeffs[0] = coeffs[0] + 1.5
        if abs(coeffs[0]) < 0.5:
            coeffs[0] = 1.0
        s = TruncatedSeries(coeffs)
        prod = mul(s, reciprocal(s))
        expect = np.zeros(len(coeffs), dtype=complex)
        expect[0] = 1.0
        assert np.allclose(prod.coeffs, expect, atol=1e-12)


class TestExpSeries:
    def test_exp_of_z(self):
        out = exp_series(ts(0.0, 1.0, 0.0, 0.0))
        assert np.allclose(out.coeffs, [1.0, 1.0, 0.5, 1.0 / 6.0])

    def test_exp_of_zero(self):
        out = exp_series(ts(0.0, 0.0, 0.0, 0.0))
        assert np.allclose(out.coeffs, [1.0, 0.0, 0.0, 0.0])

    def test_nonzero_constant_rejected(self):
        with pytest.raises(SeriesError):
            exp_series(ts(0.1, 1.0))

    @given(
        st.floats(min_value=0.05, max_value=math.pi / 2),
        st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False),
        st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False),
        st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False),
    )
    @settings(max_examples=150, deadline=None)
    def test_cubic_coefficient_closed_form(self, lam, c1, c2, c3):
        # z^3 coefficient of exp(lam*w) is lam^3 c1^3/6 + lam^2 c1 c2 + lam c3
        out = exp_series(ts(0.0, lam * c1, lam * c2, lam * c3))
        expect = lam**3 * c1**3 / 6 + lam**2 * c1 * c2 + lam * c3
        assert abs(out[3] - expect) < 1e-12

    def test_matches_power_sum_oracle(self):
        # direct sum_k s^k / k! on a fixed input, independent of the recurrence
        s = ts(0.0, 0.4 - 0.2j, 0.1, -0.3j, 0.05)
        acc = unit_series(4)
        power = unit_series(4)
        for k in range(1, 9):
            power = mul(power, s)
            acc = TruncatedSeries(acc.coeffs + power.coeffs / math.factorial(k))
        assert np.allclose(exp_series(s).coeffs, acc.coeffs, atol=1e-14)


class TestRatioToCoefficients:
    def test_exponential_ratio(self):
        # c_k = 1/k! comes from psi = e^z; unrolled recursion gives these
        c = ts(0.0, *[1.0 / math.factorial(k) for k in range(1, 4)])
        a = ratio_to_coefficients(c, 4)
        assert np.allclose(a, [1.0, 0.75, 17.0 / 36.0])

    def test_zero_input(self):
        a = ratio_to_coefficients(ts(0.0, 0.0, 0.0, 0.0), 4)
        assert np.allclose(a, [0.0, 0.0, 0.0])

    def test_single_coefficient(self):
        lam = 0.7
        a = ratio_to_coefficients(ts(0.0, lam, 0.0, 0.0), 4)
        assert np.allclose(a, [lam, lam**2 / 2, lam**3 / 6])

    def test_insufficient_order_rejected(self):
        with pytest.raises(SeriesError):
            ratio_to_coefficients(ts(0.0, 1.0), 4)

    def test_nonzero_constant_rejected(self):
        with pytest.raises(SeriesError):
            ratio_to_coefficients(ts(1.0, 1.0, 1.0, 1.0), 3)

    @given(
        st.lists(
            st.complex_numbers(max_magnitude=0.8, allow_nan=False, allow_infinity=False),
            min_size=5,
            max_size=DEFAULT_ORDER,
        )
    )
    @settings(max_examples=150, deadline=None)
    def test_inverse_of_forming_ratio(self, tail):
        # rebuild z f'/f from the recovered a_n; must reproduce the input c
        n_max = len(tail)
        c = TruncatedSeries([0.0, *tail])
        a = ratio_to_coefficients(c, n_max)
        num = np.zeros(n_max, dtype=complex)  # (z f')/z = 1 + sum n a_n z^{n-1}
        den = np.zeros(n_max, dtype=complex)  # f/z = 1 + sum a_n z^{n-1}
        num[0] = den[0] = 1.0
        for n in range(2, n_max + 1):
            num[n - 1] = n * a[n - 2]
            den[n - 1] = a[n - 2]
        psi = mul(TruncatedSeries(num), reciprocal(TruncatedSeries(den)))
        assert np.allclose(psi.coeffs[1:], c.coeffs[1:n_max], atol=1e-10)


class TestCoefficientsFromSchwarz:
    def test_starlike_identity_schwarz(self):
        a = coefficients_from_schwarz(ts(0.0, 1.0, 0.0, 0.0), 1.0, "starlike", 4)
        assert np.allclose(a, [1.0, 0.75, 17.0 / 36.0])

    def test_starlike_z_cubed(self):
        for lam in (0.3, 1.0, math.pi / 2):
            a = coefficients_from_schwarz(ts(0.0, 0.0, 0.0, 1.0), lam, "starlike", 4)
            assert np.allclose(a, [0.0, 0.0, lam / 3.0])

    def test_convex_identity_schwarz(self):
        a = coefficients_from_schwarz(ts(0.0, 1.0, 0.0, 0.0), 1.0, "convex", 4)
        assert np.allclose(a, [0.5, 0.25, 17.0 / 144.0])

    def test_starlike_identity_schwarz_fifth_coefficient(self):
        # exact rational unroll of the recursion gives a5 = 19/72, inside the
        # general product bound (= 1 at lambda = 1)
        a = coefficients_from_schwarz(ts(0.0, 1.0, 0.0, 0.0, 0.0), 1.0, "starlike", 5)
        assert abs(a[3] - 19.0 / 72.0) < 1e-14
        assert abs(a[3]) <= 1.0

    def test_convex_is_starlike_over_n_exactly(self):
        w = blaschke_schwarz(0.7, [0.3 + 0.4j, -0.2j], 8)
        star = coefficients_from_schwarz(w, 1.2, "starlike", 8)
        conv = coefficients_from_schwarz(w, 1.2, "convex", 8)
        assert np.array_equal(conv, star / np.arange(2, 9))

    def test_lambda_range_enforced(self):
        with pytest.raises(ValueError):
            coefficients_from_schwarz(ts(0.0, 1.0), 2.0, "starlike", 2)
        with pytest.raises(ValueError):
            coefficients_from_schwarz(ts(0.0, 1.0), 1.0, "spiral", 2)


class TestBlaschkeSchwarz:
    def test_empty_product_is_z(self):
        w = blaschke_schwarz(0.0, [], 5)
        assert np.allclose(w.coeffs, [0, 1, 0, 0, 0, 0])

    def test_zero_at_origin_is_minus_z_squared(self):
        w = blaschke_schwarz(0.0, [0.0], 5)
        assert np.allclose(w.coeffs, [0, 0, -1, 0, 0, 0])

    def test_half_zero_expansion(self):
        # z (0.5 - z)/(1 - 0.5 z); |c2| = 0.75 = 1 - |c1|^2 attains Carleson
        w = blaschke_schwarz(0.0, [0.5], 5)
        assert np.allclose(w.coeffs[:4], [0.0, 0.5, -0.75, -0.375])

    def test_rejects_zero_outside_disk(self):
        with pytest.raises(ValueError):
            blaschke_schwarz(0.0, [1.0])

    @given(
        st.floats(min_value=0.0, max_value=2 * math.pi),
        st.lists(
            st.complex_numbers(max_magnitude=0.95, allow_nan=False, allow_infinity=False),
            max_size=3,
        ),
    )
    @settings(max_examples=150, deadline=None)
    def test_output_is_valid_schwarz(self, theta, zeros):
        w = blaschke_schwarz(theta, zeros, 6)
        assert w[0] == 0
        assert validate_schwarz(SchwarzCoefficients(w[1], w[2], w[3]))

    @given(
        st.floats(min_value=0.0, max_value=2 * math.pi),
        st.lists(
            st.complex_numbers(max_magnitude=0.9, allow_nan=False, allow_infinity=False),
            max_size=3,
        ),
        st.sampled_from([0.25, 1.0, math.pi / 2]),
    )
    @settings(max_examples=150, deadline=None)
    def test_subordination_coefficient_bound(self, theta, zeros, lam):
        # every coefficient of exp(lam*w) - 1 is bounded by lam
        w = blaschke_schwarz(theta, zeros, DEFAULT_ORDER)
        e = exp_series(TruncatedSeries(lam * w.coeffs))
        assert np.max(np.abs(e.coeffs[1:])) <= lam + 1e-12

    def test_values_on_disk_bounded(self):
        # evaluate the rational product directly; series is its Taylor slice
        zeros = [0.4 + 0.3j, -0.5j]
        w = blaschke_schwarz(1.1, zeros, DEFAULT_ORDER)
        for z in [0.3, 0.2 + 0.4j, -0.55j]:
            direct = np.exp(1.1j) * z
            for a in zeros:
                direct *= (a - z) / (1 - np.conj(a) * z)
            assert abs(direct) <= 1.0
            tail = abs(z) ** (DEFAULT_ORDER + 1) / (1 - abs(z))
            approx = np.polyval(w.coeffs[::-1], z)
            assert abs(approx - direct) < 20 * tail + 1e-9
