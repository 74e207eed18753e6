# tests/domain/test_scalars.py
from decimal import Decimal
from fractions import Fraction

import pytest

from domain.scalars.value_objects import ArithmeticMode, SignClass
from domain.scalars.services import (
    to_scalar, coerce_all, mode_of, magnitude, robust_sign, format_scalar,
)
from core.exceptions import ValidationError


class TestToScalar:
    def test_integers_and_decimals_are_exact(self):
        assert to_scalar(3) == Fraction(3)
        assert isinstance(to_scalar(3), Fraction)
        assert to_scalar(Decimal("0.1")) == Fraction(1, 10)

    def test_floats_stay_floats_unless_exact_requested(self):
        assert isinstance(to_scalar(0.5), float)
        assert to_scalar(0.5, ArithmeticMode.EXACT) == Fraction(1, 2)

    def test_float_mode_converts_rationals(self):
        assert to_scalar(Fraction(1, 4), ArithmeticMode.FLOAT) == 0.25

    @pytest.mark.parametrize("value", [True, float("inf"), float("nan"), "1"])
    def test_rejects_non_scalars(self, value):
        with pytest.raises(ValidationError):
            to_scalar(value)


def test_coerce_all_promotes_to_float_when_any_member_is_float():
    values = coerce_all([1, Fraction(1, 2), 0.25])
    assert all(isinstance(v, float) for v in values)
    assert mode_of(values) is ArithmeticMode.FLOAT
    assert mode_of(coerce_all([1, Fraction(1, 2)])) is ArithmeticMode.EXACT


def test_magnitude():
    assert magnitude([Fraction(-3), 2.0]) == 3.0
    assert magnitude([]) == 0.0


def test_magnitude_of_exact_values_beyond_float_range():
    huge = Fraction(10) ** 400 / 7
    assert magnitude([huge, -huge * 2, Fraction(1, 3)]) == huge * 2
    assert robust_sign(huge, magnitude([huge])) is SignClass.POSITIVE


class TestRobustSign:
    def test_exact_zero_and_tiny_exact_values(self):
        assert robust_sign(Fraction(0)) is SignClass.ZERO_OR_UNCERTAIN
        assert robust_sign(Fraction(-1, 10 ** 30)) is SignClass.NEGATIVE

    def test_float_band_is_relative_to_scale(self):
        assert robust_sign(1e-12, scale=1.0) is SignClass.ZERO_OR_UNCERTAIN
        assert robust_sign(1e-12, scale=0.0) is SignClass.POSITIVE
        assert robust_sign(-1e-3, scale=1.0) is SignClass.NEGATIVE

    def test_wider_band_never_decides_more(self, rng):
        tolerances = sorted(float(t) for t in 10.0 ** rng.uniform(-15, -1, size=6))
        values = rng.normal(size=200) * 10.0 ** rng.uniform(-12, 3, size=200)
        scales = 10.0 ** rng.uniform(-3, 3, size=200)
        for x, scale in zip(values, scales):
            signs = [robust_sign(float(x), float(scale), t) for t in tolerances]
            decided = [s is not SignClass.ZERO_OR_UNCERTAIN for s in signs]
            assert decided == sorted(decided, reverse=True)
            assert len({s for s in signs if s is not SignClass.ZERO_OR_UNCERTAIN}) <= 1

    def test_negation(self):
        assert -SignClass.POSITIVE is SignClass.NEGATIVE
        assert -SignClass.ZERO_OR_UNCERTAIN is SignClass.ZERO_OR_UNCERTAIN


@pytest.mark.parametrize("value, text", [
    (Fraction(3, 2), "3/2"),
    (Fraction(26), "26"),
    (Fraction(-1, 3), "-1/3"),
    (0.1, "0.1"),
])
def test_format_scalar(value, text):
    assert format_scalar(value) == text
