# domain/polynomials/services.py
import math
import re
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .entities import ComplexPolynomial
from .value_objects import ComplexCoefficient, HalfPlaneBound, ZERO, ONE
from domain.scalars.value_objects import Scalar, ArithmeticMode
from core.exceptions import CoefficientParseError, DegenerateInputError


_NUMBER = re.compile(r"\d+/\d+|(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


def _literal(token: str, text: str, position: int, mode: Optional[ArithmeticMode]) -> Scalar:
    """Value of one unsigned literal.

    Rationals and binary-exact decimals are exact unless float mode is forced;
    any other decimal is a float unless exact mode is forced.
    """
    try:
        exact = Fraction(token)
    except ZeroDivisionError:
        raise CoefficientParseError(text, position, "a nonzero denominator")

    if mode is ArithmeticMode.EXACT:
        return exact
    if mode is ArithmeticMode.FLOAT or "/" in token:
        return float(exact) if mode is ArithmeticMode.FLOAT else exact

    approx = float(token)
    if not math.isfinite(approx):
        raise CoefficientParseError(text, position, "a finite number")
    return exact if Fraction(approx) == exact else approx


def _skip_spaces(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _expect_end(text: str, pos: int) -> None:
    pos = _skip_spaces(text, pos)
    if pos != len(text):
        raise CoefficientParseError(text, pos, "end of coefficient")


def parse_complex(text: str, mode: Optional[ArithmeticMode] = None) -> ComplexCoefficient:
    """Parse '[±]R [±] R i' with optional parts, e.g. '1+2i', '-3i', '4', '3/2-1/2i'"""
    pos = _skip_spaces(text, 0)

    sign = 1
    if pos < len(text) and text[pos] in "+-":
        sign = -1 if text[pos] == "-" else 1
        pos = _skip_spaces(text, pos + 1)

    match = _NUMBER.match(text, pos)
    first = _literal(match.group(), text, pos, mode) if match else None
    if match:
        pos = _skip_spaces(text, match.end())

    # Pure imaginary: '[±][R]i'
    if pos < len(text) and text[pos] == "i":
        _expect_end(text, pos + 1)
        im = first if first is not None else Fraction(1)
        return _coefficient(0, sign * im, mode)

    if first is None:
        raise CoefficientParseError(text, pos, "a number or 'i'")

    real = sign * first
    if pos == len(text):
        return _coefficient(real, 0, mode)

    if text[pos] not in "+-":
        raise CoefficientParseError(text, pos, "'+' or '-' before the imaginary part")
    im_sign = -1 if text[pos] == "-" else 1
    pos = _skip_spaces(text, pos + 1)

    match = _NUMBER.match(text, pos)
    second = _literal(match.group(), text, pos, mode) if match else Fraction(1)
    if match:
        pos = _skip_spaces(text, match.end())

    if pos >= len(text) or text[pos] != "i":
        raise CoefficientParseError(text, pos, "'i' after the imaginary part")
    _expect_end(text, pos + 1)
    return _coefficient(real, im_sign * second, mode)


def _coefficient(re_part: Scalar, im_part: Scalar, mode: Optional[ArithmeticMode]) -> ComplexCoefficient:
    coefficient = ComplexCoefficient(re_part, im_part)
    return coefficient.to_mode(mode) if mode is not None else coefficient


def parse_real(text: str, mode: Optional[ArithmeticMode] = None) -> Scalar:
    """Parse a real literal with the same exactness rules as parse_complex"""
    coefficient = parse_complex(text, mode)
    if coefficient.im != 0:
        raise CoefficientParseError(text, len(text), "a real number")
    return coefficient.re


def _split_items(text: str) -> List[Tuple[int, str]]:
    items, start = [], 0
    for index, char in enumerate(text + ","):
        if char == ",":
            items.append((start, text[start:index]))
            start = index + 1
    return items


def parse_polynomial(
    text: str,
    leading: Optional[str] = None,
    mode: Optional[ArithmeticMode] = None
) -> ComplexPolynomial:
    """Parse a comma-separated descending coefficient list.

    Without ``leading`` the list holds a_1+ib_1, ..., a_n+ib_n of a monic
    polynomial; with it the list is normalised by monicize.
    """
    coefficients = []
    for offset, item in _split_items(text):
        try:
            coefficients.append(parse_complex(item, mode))
        except CoefficientParseError as e:
            raise CoefficientParseError(text, offset + e.position, e.expected)

    if leading is None:
        return ComplexPolynomial(tuple(coefficients))
    return monicize(parse_complex(leading, mode), coefficients)


def monicize(leading: ComplexCoefficient, rest: Sequence[ComplexCoefficient]) -> ComplexPolynomial:
    """Divide every trailing coefficient by the leading one"""
    leading = ComplexCoefficient.lift(leading)
    if leading.is_zero():
        raise DegenerateInputError("leading coefficient is zero")
    if not rest:
        raise DegenerateInputError("polynomial of degree 0", "a nonzero constant has no roots to locate")
    return ComplexPolynomial(tuple(ComplexCoefficient.lift(c) / leading for c in rest))


def evaluate(
    p: ComplexPolynomial,
    s: Union[complex, float, int, ComplexCoefficient]
) -> Union[complex, ComplexCoefficient]:
    """Horner evaluation of q(s); exact when s is a ComplexCoefficient"""
    if isinstance(s, ComplexCoefficient):
        acc = ONE
        for c in p.coeffs:
            acc = acc * s + c
        return acc

    z = complex(s)
    acc = 1 + 0j
    for c in p.to_complex_coefficients()[1:]:
        acc = acc * z + c
    return acc


def shift_argument(p: ComplexPolynomial, bound: HalfPlaneBound) -> ComplexPolynomial:
    """Return r(t) = p(t + xi) by repeated synthetic division.

    Roots of p lie in Re(s) < xi iff roots of r lie in Re(t) < 0.
    """
    xi = bound.xi
    c = p.full_coefficients()
    n = p.degree
    for k in range(n):
        for j in range(1, n - k + 1):
            c[j] = c[j] + c[j - 1] * xi
    return ComplexPolynomial(tuple(c[1:]))


def from_roots(roots: Sequence[Union[ComplexCoefficient, complex, int, float, Fraction]]) -> ComplexPolynomial:
    """Monic polynomial with the given roots (exact for rational roots)"""
    if not roots:
        raise DegenerateInputError("empty root list")
    c: List[ComplexCoefficient] = [ONE]
    for root in roots:
        r = ComplexCoefficient.lift(root)
        c = [c[0]] + [c[j] - r * c[j - 1] for j in range(1, len(c))] + [ZERO - r * c[-1]]
    return ComplexPolynomial(tuple(c[1:]))


def multiply(p: ComplexPolynomial, q: ComplexPolynomial) -> ComplexPolynomial:
    return p * q


def _matmul(left: List[List[ComplexCoefficient]], right: List[List[ComplexCoefficient]]) -> List[List[ComplexCoefficient]]:
    size = len(left)
    product = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = ZERO
            for k in range(size):
                acc = acc + left[i][k] * right[k][j]
            row.append(acc)
        product.append(row)
    return product


def characteristic_polynomial_of(matrix: Sequence[Sequence]) -> ComplexPolynomial:
    """det(sI - M) of a square complex matrix by the Faddeev-LeVerrier recursion"""
    m = [[ComplexCoefficient.lift(x) for x in row] for row in matrix]
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise DegenerateInputError("matrix", "a nonempty square matrix is required")

    previous = [[ZERO] * n for _ in range(n)]
    coefficient = ONE
    coeffs = []
    for k in range(1, n + 1):
        current = _matmul(m, previous)
        for i in range(n):
            current[i][i] = current[i][i] + coefficient
        product = _matmul(m, current)
        trace = ZERO
        for i in range(n):
            trace = trace + product[i][i]
        coefficient = -trace / k
        coeffs.append(coefficient)
        previous = current
    return ComplexPolynomial(tuple(coeffs))


def format_coefficient(c: ComplexCoefficient) -> str:
    """'<re>+<im>i' with rationals as 'num/den' (or 'num') and floats as repr"""
    return str(c)


def format_polynomial(p: ComplexPolynomial) -> str:
    """Comma-separated descending coefficients.

    parse_polynomial(text, mode=p.mode) restores p. The mode has to travel with
    the text: a float coefficient with a binary-exact value such as 0.5 reads
    back as exact when no mode is given.
    """
    return ",".join(format_coefficient(c) for c in p.coeffs)
