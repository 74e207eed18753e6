# domain/routh/services.py
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from .entities import (
    RHLevel, RHTable, StabilityVerdict, ClassicalRHTable, QuarticClosedForms,
    MARGINAL_OR_UNSTABLE, UNCERTAIN_PIVOT, EARLY_ZERO,
)
from domain.polynomials.entities import ComplexPolynomial
from domain.polynomials.value_objects import HalfPlaneBound
from domain.polynomials.services import shift_argument
from domain.scalars.value_objects import Scalar, ArithmeticMode, SignClass
from domain.scalars.services import (
    DEFAULT_TOLERANCE, robust_sign, magnitude, coerce_all, mode_of,
)
from core.exceptions import DegreeMismatchError, EarlyZeroError, DegenerateInputError


OVERFLOW_THRESHOLD = 1e100
UNDERFLOW_THRESHOLD = 1e-100


class _TableWalk:
    """Division-free generalized table, produced level by level.

    ``pivots()`` yields (k, a_k^(k), scale) as soon as each pivot exists, so a
    verdict can stop early while a display build simply drains it.
    """

    def __init__(
        self,
        polynomial: ComplexPolynomial,
        overflow_threshold: float = OVERFLOW_THRESHOLD,
        underflow_threshold: float = UNDERFLOW_THRESHOLD
    ):
        self.polynomial = polynomial
        self.exact = polynomial.mode is ArithmeticMode.EXACT
        self.overflow_threshold = overflow_threshold
        self.underflow_threshold = underflow_threshold
        self.levels: List[RHLevel] = []
        self.scaling_log: List[Scalar] = []

    def pivots(self) -> Iterator[Tuple[int, Scalar, Scalar]]:
        q = self.polynomial
        n = q.degree

        yield 1, q.a(1), magnitude(q.real_parts + q.imag_parts)
        if n == 1:
            return

        level = self._finish(1, *self._first_rows())
        for p in range(2, n):
            level = self._finish(p, *self._next_rows(level))
            yield p, level.pivot, level.scale

        # a_n^(n) = a_{n-1}^(n-1) a_n^(n-1) + b_{n-1}^(n-1) b_n^(n-1)
        # its sign band is scaled by the larger of the two products
        head, tail = level.row1[0] * level.row2[1], level.row2[0] * level.row1[1]
        yield n, head + tail, magnitude((head, tail))

    def _first_rows(self) -> Tuple[List[Scalar], List[Scalar]]:
        """Initialization level; identical layout for even and odd n"""
        q = self.polynomial
        n = q.degree
        row1 = [q.a(k) if k % 2 == 1 else q.b(k) for k in range(1, n + 1)]
        other = [q.b(k) if k % 2 == 1 else q.a(k) for k in range(1, n + 1)]
        a1 = row1[0]
        row2 = [a1 * other[i] - (row1[i + 1] if i + 1 < n else 0) for i in range(n)]
        return row1, row2

    @staticmethod
    def _next_rows(prev: RHLevel) -> Tuple[List[Scalar], List[Scalar]]:
        """Level p from level p-1 via the 2x2 determinant recurrences"""
        A, B = prev.row1[0], prev.row2[0]
        width = prev.width - 1

        # a_k^(p) = A a_k + B b_k ; b_l^(p) = A b_l - B a_l  (letters of level p-1)
        row1 = []
        for offset in range(width):
            if offset % 2 == 0:
                row1.append(A * prev.row2[offset + 1] + B * prev.row1[offset + 1])
            else:
                row1.append(A * prev.row2[offset + 1] - B * prev.row1[offset + 1])

        # second row: a_p^(p) x_k^(p-1) - A x_{k+1}^(p); last column has x_{n+1}^(p) = 0
        pivot = row1[0]
        row2 = [
            pivot * prev.row1[offset + 1] - A * (row1[offset + 1] if offset + 1 < width else 0)
            for offset in range(width)
        ]
        return row1, row2

    def _finish(self, p: int, row1: List[Scalar], row2: List[Scalar]) -> RHLevel:
        scale = magnitude(row1 + row2)
        factor: Scalar = Fraction(1) if self.exact else 1.0

        if not self.exact and (scale > self.overflow_threshold or 0.0 < scale < self.underflow_threshold):
            factor = scale
            row1 = [x / factor for x in row1]
            row2 = [x / factor for x in row2]
            scale = magnitude(row1 + row2)
            logger.debug(f"Level {p} rescaled by {factor:.3e}")

        level = RHLevel(p, tuple(row1), tuple(row2), scale, factor)
        self.levels.append(level)
        self.scaling_log.append(factor)
        return level


def build_table(
    p: ComplexPolynomial,
    overflow_threshold: float = OVERFLOW_THRESHOLD,
    underflow_threshold: float = UNDERFLOW_THRESHOLD
) -> RHTable:
    """Full generalized Routh-Hurwitz table of a monic complex polynomial"""
    walk = _TableWalk(p, overflow_threshold, underflow_threshold)
    chain = list(walk.pivots())
    return RHTable(
        polynomial=p,
        levels=tuple(walk.levels),
        pivots=tuple(value for _, value, _ in chain),
        pivot_scales=tuple(scale for _, _, scale in chain),
        scaling_log=tuple(walk.scaling_log),
    )


def pivots(table: RHTable) -> Tuple[Scalar, ...]:
    """(a_1^(1), ..., a_n^(n))"""
    return table.pivots


def _classify(
    chain: Iterator[Tuple[int, Scalar, Scalar]],
    mode: ArithmeticMode,
    tolerance: float
) -> StabilityVerdict:
    inspected = []
    for k, value, scale in chain:
        inspected.append(value)
        sign = robust_sign(value, scale, tolerance)
        if sign is SignClass.POSITIVE:
            continue
        if sign is SignClass.NEGATIVE:
            return StabilityVerdict.not_hurwitz(k, pivots=inspected)
        if mode is ArithmeticMode.EXACT:
            return StabilityVerdict.not_hurwitz(k, MARGINAL_OR_UNSTABLE, inspected)
        return StabilityVerdict.inconclusive(k, UNCERTAIN_PIVOT, inspected)
    return StabilityVerdict.hurwitz(inspected)


def hurwitz_verdict(
    p: ComplexPolynomial,
    tolerance: float = DEFAULT_TOLERANCE,
    xi: Optional[HalfPlaneBound] = None,
    overflow_threshold: float = OVERFLOW_THRESHOLD,
    underflow_threshold: float = UNDERFLOW_THRESHOLD
) -> StabilityVerdict:
    """Are all roots in Re(s) < xi (default 0)? Stops at the first non-positive pivot."""
    if xi is not None:
        p = shift_argument(p, xi)
    walk = _TableWalk(p, overflow_threshold, underflow_threshold)
    return _classify(walk.pivots(), p.mode, tolerance)


def table_verdict(table: RHTable, tolerance: float = DEFAULT_TOLERANCE) -> StabilityVerdict:
    """Verdict read off an already built table"""
    chain = zip(range(1, table.degree + 1), table.pivots, table.pivot_scales)
    return _classify(iter(chain), table.mode, tolerance)


def classical_table(real_coeffs: Sequence, tolerance: float = DEFAULT_TOLERANCE) -> ClassicalRHTable:
    """Classical Routh array of s^n + a_1 s^(n-1) + ... + a_n"""
    coeffs = list(coerce_all(real_coeffs))
    if not coeffs:
        raise DegenerateInputError("polynomial of degree 0")

    n = len(coeffs)
    one: Scalar = Fraction(1) if mode_of(coeffs) is ArithmeticMode.EXACT else 1.0
    full = [one] + coeffs
    width = n // 2 + 1
    zero = one * 0

    def padded(values: List[Scalar]) -> List[Scalar]:
        return values + [zero] * (width - len(values))

    rows = [padded(full[0::2]), padded(full[1::2])]
    for r in range(2, n + 1):
        upper, lower = rows[-2], rows[-1]
        divisor = lower[0]
        if robust_sign(divisor, magnitude(lower), tolerance) is SignClass.ZERO_OR_UNCERTAIN:
            raise EarlyZeroError(r - 1)
        rows.append([
            (divisor * upper[j + 1] - upper[0] * lower[j + 1]) / divisor
            for j in range(width - 1)
        ] + [zero])

    return ClassicalRHTable(tuple(tuple(row) for row in rows))


def classical_verdict(real_coeffs: Sequence, tolerance: float = DEFAULT_TOLERANCE) -> StabilityVerdict:
    """Hurwitz iff every first-column entry of the classical array is positive"""
    try:
        table = classical_table(real_coeffs, tolerance)
    except EarlyZeroError as e:
        return StabilityVerdict.inconclusive(e.row, EARLY_ZERO)

    column = table.first_column
    exact = mode_of(column) is ArithmeticMode.EXACT
    for k in range(1, len(column)):
        sign = robust_sign(column[k], magnitude(table.rows[k]), tolerance)
        if sign is SignClass.NEGATIVE:
            return StabilityVerdict.not_hurwitz(k, pivots=column[1:k + 1])
        if sign is SignClass.ZERO_OR_UNCERTAIN:
            if exact:
                return StabilityVerdict.not_hurwitz(k, MARGINAL_OR_UNSTABLE, column[1:k + 1])
            return StabilityVerdict.inconclusive(k, UNCERTAIN_PIVOT, column[1:k + 1])
    return StabilityVerdict.hurwitz(column[1:])


def classical_quartic_conditions(a1: Scalar, a2: Scalar, a3: Scalar, a4: Scalar) -> Tuple[Scalar, ...]:
    """a1, a1 a2 - a3, a4, (a1 a2 - a3) a3 - a1^2 a4; all positive iff the real quartic is Hurwitz"""
    return a1, a1 * a2 - a3, a4, (a1 * a2 - a3) * a3 - a1 * a1 * a4


def quartic_closed_forms(p: ComplexPolynomial) -> QuarticClosedForms:
    """Expanded degree-4 pivots, consistent with the table recurrences"""
    if p.degree != 4:
        raise DegreeMismatchError(4, p.degree)

    a1, a2, a3, a4 = (p.a(j) for j in range(1, 5))
    b1, b2, b3, b4 = (p.b(j) for j in range(1, 5))

    c1 = a1 * b1 - b2           # b_1^(1)
    d = a1 * b3 - b4            # b_3^(1)
    m = a1 * d - a3 * c1        # b_3^(2)

    beta = a1 * a1 * a2 - a1 * a3 + a1 * b1 * b2 - b2 * b2
    gamma = (
        beta * beta * a3
        - beta * a1 ** 3 * a4
        - beta * (a1 * b4 + a3 * b2) * c1
        + beta * a1 * b2 * d
        - a1 * m * m
    )
    epsilon = a1 * a1 * a4 + b4 * c1
    eta = beta * beta * b4 - (beta * b2 - a1 * m) * epsilon
    final = gamma * gamma * epsilon + eta * (gamma * a1 * d - gamma * a3 * c1 - beta * eta)

    return QuarticClosedForms(beta=beta, gamma=gamma, eta=eta, epsilon=epsilon, final=final)
