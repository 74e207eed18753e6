# tests/domain/test_polynomials.py
from fractions import Fraction

import pytest

from domain.polynomials.entities import ComplexPolynomial
from domain.polynomials.value_objects import ComplexCoefficient, HalfPlaneBound
from domain.polynomials.services import (
    parse_complex,
    parse_real,
    parse_polynomial,
    monicize,
    evaluate,
    shift_argument,
    from_roots,
    multiply,
    characteristic_polynomial_of,
    format_polynomial,
)
from domain.scalars.value_objects import ArithmeticMode
from core.exceptions import CoefficientParseError, DegenerateInputError
from tests.helpers import random_complex_polynomial, random_rational


class TestParseComplex:
    @pytest.mark.parametrize("text, re, im", [
        ("1+2i", 1, 2),
        ("-3i", 0, -3),
        ("i", 0, 1),
        ("-i", 0, -1),
        ("4", 4, 0),
        (" 4 ", 4, 0),
        ("3/2-1/2i", Fraction(3, 2), Fraction(-1, 2)),
        ("1 - i", 1, -1),
        ("0.5+0.25i", Fraction(1, 2), Fraction(1, 4)),
    ])
    def test_exact_literals(self, text, re, im):
        c = parse_complex(text)
        assert c == ComplexCoefficient(re, im)
        assert c.mode is ArithmeticMode.EXACT

    def test_inexact_decimal_is_float(self):
        c = parse_complex("0.1")
        assert c.mode is ArithmeticMode.FLOAT
        assert c.re == 0.1

    def test_forced_exact_mode_reads_decimal_value(self):
        assert parse_complex("0.1", ArithmeticMode.EXACT).re == Fraction(1, 10)

    def test_forced_float_mode(self):
        assert parse_complex("1/4", ArithmeticMode.FLOAT).re == 0.25

    @pytest.mark.parametrize("text, position", [
        ("1+2", 3),
        ("abc", 0),
        ("1/0", 0),
        ("2i3", 2),
    ])
    def test_errors_report_position(self, text, position):
        with pytest.raises(CoefficientParseError) as e:
            parse_complex(text)
        assert e.value.position == position
        assert e.value.error_code == "PARSE_ERROR"

    def test_parse_real_rejects_imaginary_part(self):
        assert parse_real("-5") == Fraction(-5)
        with pytest.raises(CoefficientParseError):
            parse_real("1+i")


class TestParsePolynomial:
    def test_monic_list(self):
        p = parse_polynomial("3+0i,3+1i")
        assert p.degree == 2
        assert (p.a(1), p.b(1), p.a(2), p.b(2)) == (3, 0, 3, 1)

    def test_error_position_is_offset_into_full_list(self):
        with pytest.raises(CoefficientParseError) as e:
            parse_polynomial("1,x")
        assert e.value.position == 2

    def test_leading_coefficient_is_divided_out(self):
        p = parse_polynomial("2,4i", leading="2")
        assert p == ComplexPolynomial.from_parts([1, 0], [0, 2])

    def test_zero_leading_coefficient(self):
        with pytest.raises(DegenerateInputError):
            parse_polynomial("1", leading="0")

    def test_empty_list(self):
        with pytest.raises(CoefficientParseError):
            parse_polynomial("")

    def test_one_float_coefficient_makes_polynomial_float(self):
        assert parse_polynomial("1,0.1").mode is ArithmeticMode.FLOAT

    def test_format_inverts_parse(self):
        p = parse_polynomial("3/2-1/2i,4")
        assert format_polynomial(p) == "3/2-1/2i,4+0i"
        assert parse_polynomial(format_polynomial(p)) == p

    def test_float_polynomial_round_trips_with_its_mode(self):
        # 0.5 and 2.0 are binary-exact, so the text alone reads back as exact
        p = parse_polynomial("0.5-2.0i,0.1", mode=ArithmeticMode.FLOAT)
        text = format_polynomial(p)
        assert text == "0.5-2.0i,0.1+0.0i"
        assert parse_polynomial(text, mode=p.mode) == p
        assert parse_polynomial(text, mode=p.mode).mode is ArithmeticMode.FLOAT
        assert parse_polynomial("0.5-2.0i").mode is ArithmeticMode.EXACT


def test_monicize_needs_trailing_coefficients():
    with pytest.raises(DegenerateInputError):
        monicize(ComplexCoefficient(2), [])


def test_monicize_divides_by_complex_leading():
    lead = ComplexCoefficient(0, 1)
    p = monicize(lead, [ComplexCoefficient(0, 2), ComplexCoefficient(1)])
    assert p.coeffs == (ComplexCoefficient(2), ComplexCoefficient(0, -1))


class TestConstruction:
    def test_from_roots(self):
        p = from_roots([-1, -2])
        assert p == ComplexPolynomial.from_parts([3, 2])
        assert evaluate(p, -1) == 0
        assert evaluate(p, ComplexCoefficient(-2)) == ComplexCoefficient(0)

    def test_multiply_matches_from_roots(self):
        assert multiply(from_roots([-1]), from_roots([-2])) == from_roots([-1, -2])

    def test_conjugate_conjugates_roots(self):
        root = ComplexCoefficient(-1, 2)
        assert from_roots([root]).conjugate() == from_roots([root.conjugate()])

    def test_degree_zero_is_degenerate(self):
        with pytest.raises(DegenerateInputError):
            ComplexPolynomial(())

    def test_characteristic_polynomial_of_companion(self):
        p = characteristic_polynomial_of([[0, 1], [-2, -3]])
        assert p == ComplexPolynomial.from_parts([3, 2])

    def test_characteristic_polynomial_of_complex_diagonal(self):
        p = characteristic_polynomial_of([[ComplexCoefficient(0, 1), 0], [0, -1]])
        assert p == from_roots([ComplexCoefficient(0, 1), ComplexCoefficient(-1)])


class TestShiftArgument:
    def test_shift_moves_roots(self):
        p = from_roots([-1, -3])
        shifted = shift_argument(p, HalfPlaneBound(Fraction(-1, 2)))
        assert shifted == from_roots([Fraction(-1, 2), Fraction(-5, 2)])

    def test_zero_shift_is_identity(self):
        p = parse_polynomial("4+4i,10,1")
        assert shift_argument(p, HalfPlaneBound()) == p

    def test_shifts_compose(self, rng):
        for _ in range(50):
            p = random_complex_polynomial(rng, int(rng.integers(1, 9)))
            x1, x2 = random_rational(rng, -30, 30), random_rational(rng, -30, 30)
            twice = shift_argument(shift_argument(p, HalfPlaneBound(x1)), HalfPlaneBound(x2))
            assert twice == shift_argument(p, HalfPlaneBound(x1 + x2))
