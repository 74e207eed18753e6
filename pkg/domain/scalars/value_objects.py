# domain/scalars/value_objects.py
from enum import Enum
from fractions import Fraction
from typing import Union


# Exact rationals are Fractions (always reduced, positive denominator);
# float mode uses plain binary floats.
Scalar = Union[Fraction, float]


class ArithmeticMode(Enum):
    """Arithmetic regime of a polynomial and everything derived from it"""
    EXACT = "exact"
    FLOAT = "float"


class SignClass(Enum):
    """Outcome of a robust sign test"""
    POSITIVE = "positive"
    NEGATIVE = "negative"
    ZERO_OR_UNCERTAIN = "zero_or_uncertain"

    def __neg__(self) -> "SignClass":
        if self is SignClass.POSITIVE:
            return SignClass.NEGATIVE
        if self is SignClass.NEGATIVE:
            return SignClass.POSITIVE
        return self

    @property
    def is_positive(self) -> bool:
        return self is SignClass.POSITIVE
