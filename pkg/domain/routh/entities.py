# domain/routh/entities.py
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, List

from domain.polynomials.entities import ComplexPolynomial
from domain.scalars.value_objects import Scalar, ArithmeticMode


class VerdictOutcome(Enum):
    """Three-valued answer to 'are all roots in the open left half-plane?'"""
    HURWITZ = "hurwitz"
    NOT_HURWITZ = "not_hurwitz"
    INCONCLUSIVE = "inconclusive"


# Annotations attached to non-Hurwitz / inconclusive verdicts
MARGINAL_OR_UNSTABLE = "marginal_or_unstable"
UNCERTAIN_PIVOT = "uncertain_pivot"
EARLY_ZERO = "early_zero"
NEAR_IMAGINARY_AXIS = "near_imaginary_axis"
ORACLE_NOT_CONVERGED = "oracle_not_converged"


@dataclass(frozen=True)
class StabilityVerdict:
    """Verdict plus the least offending pivot index (1-based) when not Hurwitz"""
    outcome: VerdictOutcome
    first_failing_index: Optional[int] = None
    annotation: Optional[str] = None
    pivots: Tuple[Scalar, ...] = ()

    @classmethod
    def hurwitz(cls, pivots: Tuple[Scalar, ...] = ()) -> "StabilityVerdict":
        return cls(VerdictOutcome.HURWITZ, pivots=tuple(pivots))

    @classmethod
    def not_hurwitz(cls, index: Optional[int], annotation: Optional[str] = None, pivots=()) -> "StabilityVerdict":
        return cls(VerdictOutcome.NOT_HURWITZ, index, annotation, tuple(pivots))

    @classmethod
    def inconclusive(cls, index: Optional[int], annotation: Optional[str] = None, pivots=()) -> "StabilityVerdict":
        return cls(VerdictOutcome.INCONCLUSIVE, index, annotation, tuple(pivots))

    @property
    def is_hurwitz(self) -> bool:
        return self.outcome is VerdictOutcome.HURWITZ

    @property
    def is_decisive(self) -> bool:
        return self.outcome is not VerdictOutcome.INCONCLUSIVE

    def __str__(self) -> str:
        return self.outcome.value


@dataclass(frozen=True)
class RHLevel:
    """One 2 x (n-p+1) level of the generalized table.

    Column k (k = p..n) sits at offset k-p. Row 1 holds a_k^(p) at even
    offsets and b_k^(p) at odd ones; row 2 holds the complementary letters.
    """
    p: int
    row1: Tuple[Scalar, ...]
    row2: Tuple[Scalar, ...]
    scale: Scalar = 0.0
    rescale_factor: Scalar = 1

    @property
    def pivot(self) -> Scalar:
        """a_p^(p)"""
        return self.row1[0]

    @property
    def width(self) -> int:
        return len(self.row1)

    def labels(self) -> Tuple[List[str], List[str]]:
        """Symbolic names of the entries, e.g. (['a_2', 'b_3'], ['b_2', 'a_3'])"""
        first, second = [], []
        for offset in range(self.width):
            k = self.p + offset
            top, bottom = ("a", "b") if offset % 2 == 0 else ("b", "a")
            first.append(f"{top}_{k}")
            second.append(f"{bottom}_{k}")
        return first, second


@dataclass(frozen=True)
class RHTable:
    """Levels p = 1..n-1, the pivot chain a_1^(1)..a_n^(n) and per-level rescale factors"""
    polynomial: ComplexPolynomial
    levels: Tuple[RHLevel, ...]
    pivots: Tuple[Scalar, ...]
    pivot_scales: Tuple[Scalar, ...]
    scaling_log: Tuple[Scalar, ...] = ()

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    @property
    def mode(self) -> ArithmeticMode:
        return self.polynomial.mode

    @property
    def final_pivot(self) -> Scalar:
        """a_n^(n)"""
        return self.pivots[-1]


@dataclass(frozen=True)
class ClassicalRHTable:
    """Division-based Routh array of a real monic polynomial; rows run s^n .. s^0"""
    rows: Tuple[Tuple[Scalar, ...], ...]

    @property
    def first_column(self) -> Tuple[Scalar, ...]:
        return tuple(row[0] for row in self.rows)


@dataclass(frozen=True)
class QuarticClosedForms:
    """Closed-form degree-4 quantities; beta, gamma, final equal a_2^(2), a_3^(3), a_4^(4)"""
    beta: Scalar
    gamma: Scalar
    eta: Scalar
    epsilon: Scalar
    final: Scalar

    def conditions(self) -> Tuple[Scalar, Scalar, Scalar]:
        return self.beta, self.gamma, self.final
