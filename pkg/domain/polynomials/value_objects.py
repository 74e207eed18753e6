# domain/polynomials/value_objects.py
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from domain.scalars.value_objects import Scalar, ArithmeticMode
from domain.scalars.services import to_scalar, is_exact, format_scalar
from core.exceptions import ValidationError


@dataclass(frozen=True)
class ComplexCoefficient:
    """Complex number re + i*im with both parts in one arithmetic regime"""
    re: Scalar
    im: Scalar = Fraction(0)

    def __post_init__(self):
        re = to_scalar(self.re)
        im = to_scalar(self.im)
        if not (is_exact(re) and is_exact(im)):
            re, im = float(re), float(im)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    @classmethod
    def lift(cls, value: Union["ComplexCoefficient", int, float, Fraction, complex]) -> "ComplexCoefficient":
        """Wrap a plain number"""
        if isinstance(value, ComplexCoefficient):
            return value
        if isinstance(value, complex):
            return cls(value.real, value.imag)
        return cls(value, 0 if not isinstance(value, float) else 0.0)

    @property
    def mode(self) -> ArithmeticMode:
        return ArithmeticMode.EXACT if is_exact(self.re) else ArithmeticMode.FLOAT

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def conjugate(self) -> "ComplexCoefficient":
        return ComplexCoefficient(self.re, -self.im)

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def to_mode(self, mode: ArithmeticMode) -> "ComplexCoefficient":
        return ComplexCoefficient(to_scalar(self.re, mode), to_scalar(self.im, mode))

    def __add__(self, other) -> "ComplexCoefficient":
        other = ComplexCoefficient.lift(other)
        return ComplexCoefficient(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "ComplexCoefficient":
        other = ComplexCoefficient.lift(other)
        return ComplexCoefficient(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "ComplexCoefficient":
        return ComplexCoefficient.lift(other) - self

    def __neg__(self) -> "ComplexCoefficient":
        return ComplexCoefficient(-self.re, -self.im)

    def __mul__(self, other) -> "ComplexCoefficient":
        other = ComplexCoefficient.lift(other)
        return ComplexCoefficient(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ComplexCoefficient":
        other = ComplexCoefficient.lift(other)
        if other.is_zero():
            raise ZeroDivisionError("complex division by zero")
        norm = other.re * other.re + other.im * other.im
        return ComplexCoefficient(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __str__(self) -> str:
        sign = "-" if self.im < 0 else "+"
        return f"{format_scalar(self.re)}{sign}{format_scalar(abs(self.im))}i"


ZERO = ComplexCoefficient(0, 0)
ONE = ComplexCoefficient(1, 0)


@dataclass(frozen=True)
class HalfPlaneBound:
    """Abscissa xi of the open half-plane Re(s) < xi"""
    xi: Scalar = Fraction(0)

    def __post_init__(self):
        xi = to_scalar(self.xi)
        if not is_exact(xi) and not math.isfinite(xi):
            raise ValidationError(f"Half-plane abscissa must be finite, got {xi!r}", "xi")
        object.__setattr__(self, "xi", xi)

    def __str__(self) -> str:
        return format_scalar(self.xi)
