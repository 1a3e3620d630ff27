"""Coefficient algebra: mode handling, exact identities, serialization."""

import cmath
import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hardylab import (
    RationalComplex,
    TaylorSeries,
    add,
    subtract,
    scale,
    multiply,
    derivative,
    evaluate,
    zero,
    monomial,
)
from hardylab.series import dumps, loads, from_dict, to_dict

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=16)
rc_scalars = st.builds(RationalComplex, rationals, rationals)
exact_series = st.lists(rc_scalars, min_size=1, max_size=8).map(TaylorSeries)
float_scalars = st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False)
float_series = st.lists(float_scalars, min_size=1, max_size=12).map(TaylorSeries)


class TestRationalComplex:
    def test_exact_division_round_trip(self):
        c = RationalComplex(1)
        assert (c / 49) * 49 == RationalComplex(1)
        # the float analogue is not exact, which is why exact mode exists
        assert (1.0 / 49.0) * 49.0 != 1.0

    def test_promotion_to_complex(self):
        c = RationalComplex(Fraction(1, 2), Fraction(1, 3))
        assert isinstance(c * 0.5, complex)
        assert isinstance(0.5 + c, complex)
        assert c * 2 == RationalComplex(1, Fraction(2, 3))

    def test_complex_equality(self):
        assert RationalComplex(Fraction(1, 2)) == 0.5 + 0j
        assert RationalComplex(0, 1) == 1j

    def test_division(self):
        c = RationalComplex(1, 1) / RationalComplex(0, 1)
        assert c == RationalComplex(1, -1)
        with pytest.raises(ZeroDivisionError):
            RationalComplex(1) / RationalComplex(0)

    def test_abs(self):
        assert abs(RationalComplex(3, 4)) == pytest.approx(5.0)


class TestConstruction:
    def test_exact_mode_detection(self):
        f = TaylorSeries([1, Fraction(1, 2), RationalComplex(0, 1)])
        assert f.exact
        g = TaylorSeries([1, 0.5])
        assert not g.exact
        assert all(isinstance(c, complex) for c in g.coeffs)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            TaylorSeries([])

    def test_zero_is_canonical(self):
        z = zero()
        assert z.order == 0 and z.is_zero and not z.exact
        assert zero(exact=True).exact

    def test_monomial(self):
        m = monomial(3)
        assert m.exact and m.coeffs[3] == 1 and m.order == 3
        assert not monomial(2, 1.0).exact

    def test_polynomial_equality_ignores_trailing_zeros(self):
        assert TaylorSeries([1, 2]) == TaylorSeries([1, 2, 0, 0])
        assert TaylorSeries([1]) == TaylorSeries([RationalComplex(1), RationalComplex(0)])
        assert TaylorSeries([1, 2]) != TaylorSeries([1, 2, 1])


class TestArithmetic:
    def test_add_aligns_orders(self):
        s = add(TaylorSeries([1, 1]), TaylorSeries([1, 1, 1]))
        assert s.order == 2 and s == TaylorSeries([2, 2, 1])

    def test_multiply_known_product(self):
        f = TaylorSeries([1, 1])
        g = TaylorSeries([1, -1])
        assert multiply(f, g) == TaylorSeries([1, 0, -1])

    def test_multiply_identity(self):
        f = TaylorSeries([2.0, -1.0, 3.5])
        assert multiply(f, TaylorSeries([1])) == f

    def test_multiply_truncation_and_padding(self):
        f = TaylorSeries([1, 1])
        assert multiply(f, f, out_order=1) == TaylorSeries([1, 2])
        padded = multiply(f, f, out_order=5)
        assert padded.order == 5 and padded == TaylorSeries([1, 2, 1])

    def test_scale_modes(self):
        f = TaylorSeries([1, Fraction(1, 3)])
        assert scale(f, 3).exact and scale(f, 3) == TaylorSeries([3, 1])
        assert not scale(f, 0.5).exact

    @given(exact_series, exact_series, exact_series)
    def test_add_associative_exact(self, f, g, h):
        assert add(add(f, g), h) == add(f, add(g, h))

    @given(exact_series, exact_series, exact_series)
    @settings(max_examples=50)
    def test_multiply_associative_exact(self, f, g, h):
        assert multiply(multiply(f, g), h) == multiply(f, multiply(g, h))

    @given(exact_series, exact_series)
    def test_product_rule_exact(self, f, g):
        lhs = derivative(multiply(f, g), 1)
        rhs = add(multiply(derivative(f, 1), g), multiply(f, derivative(g, 1)))
        assert lhs == rhs


class TestDerivativeEvaluate:
    def test_derivative_known(self):
        f = TaylorSeries([5, 3, 2, 1])  # 5 + 3z + 2z^2 + z^3
        assert derivative(f, 1) == TaylorSeries([3, 4, 3])
        assert derivative(f, 2) == TaylorSeries([4, 6])
        assert derivative(f, 0) is f

    def test_derivative_beyond_order_is_zero(self):
        f = TaylorSeries([1.0, 2.0])
        d = derivative(f, 5)
        assert d.is_zero and d.order == 0

    def test_derivative_rejects_negative(self):
        with pytest.raises(ValueError):
            derivative(TaylorSeries([1]), -1)

    @given(exact_series, st.integers(0, 3), st.integers(0, 3))
    def test_derivative_composes_exact(self, f, a, b):
        assert derivative(f, a + b) == derivative(derivative(f, a), b)

    def test_evaluate_known(self):
        f = TaylorSeries([1, 2, 3])
        assert evaluate(f, 2) == 17
        assert evaluate(f, 0) == 1

    def test_evaluate_exact_stays_exact(self):
        f = TaylorSeries([Fraction(1, 3), 1])
        out = evaluate(f, Fraction(1, 2))
        assert isinstance(out, RationalComplex)
        assert out == RationalComplex(Fraction(5, 6))

    @given(float_series, float_series, st.floats(0, 2 * math.pi))
    @settings(max_examples=50)
    def test_multiply_evaluate_consistency(self, f, g, theta):
        z = cmath.exp(1j * theta)
        lhs = complex(evaluate(multiply(f, g), z))
        rhs = complex(evaluate(f, z)) * complex(evaluate(g, z))
        # relative to the cancellation-free coefficient-mass scale
        cap = sum(abs(c) for c in f.coeffs) * sum(abs(c) for c in g.coeffs)
        assert abs(lhs - rhs) <= 1e-12 * cap + 1e-12


class TestSerialization:
    def test_round_trip_exact_floats(self):
        f = TaylorSeries([0.1 + 0.2j, -1.0 / 3.0, 2.0**-40])
        g = loads(dumps(f))
        assert g.order == f.order
        assert all(a == b for a, b in zip(f.coeffs, g.coeffs))

    def test_dict_shape(self):
        d = to_dict(TaylorSeries([1.0, 2.0]))
        assert d == {"order": 1, "coeffs": [[1.0, 0.0], [2.0, 0.0]]}

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError):
            from_dict({"order": 3, "coeffs": [[1.0, 0.0]]})

    def test_malformed_rejected(self):
        with pytest.raises(ValueError):
            from_dict({"coeffs": [[1.0, 0.0]]})
        with pytest.raises(ValueError):
            from_dict({"order": 0, "coeffs": [[1.0]]})
        with pytest.raises(ValueError):
            from_dict({"order": 0, "coeffs": []})

    def test_json_is_plain(self):
        payload = json.loads(dumps(TaylorSeries([1.5, -2.25j])))
        assert payload["coeffs"] == [[1.5, 0.0], [0.0, -2.25]]
