# domain/scalars/services.py
import math
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Union

from .value_objects import Scalar, ArithmeticMode, SignClass
from core.exceptions import ValidationError


DEFAULT_TOLERANCE = 1e-9

Number = Union[int, float, Fraction, Decimal]


def is_exact(value: Scalar) -> bool:
    """True for exact rationals"""
    return isinstance(value, Fraction)


def mode_of(values: Iterable[Scalar]) -> ArithmeticMode:
    """Exact only when every value is an exact rational"""
    return ArithmeticMode.EXACT if all(is_exact(v) for v in values) else ArithmeticMode.FLOAT


def to_scalar(value: Number, mode: ArithmeticMode = None) -> Scalar:
    """Coerce a number into the requested regime.

    Integers, Fractions and Decimals are exact; floats stay floats unless exact
    mode is requested, in which case their binary value is taken verbatim.
    Without an explicit mode the regime follows the input type.
    """
    if isinstance(value, bool):
        raise ValidationError(f"Boolean is not a scalar: {value!r}", "value")

    if isinstance(value, float) and not math.isfinite(value):
        raise ValidationError(f"Scalar must be finite, got {value!r}", "value")

    if mode is ArithmeticMode.FLOAT:
        return float(value)

    if isinstance(value, (int, Fraction, Decimal)):
        if isinstance(value, Decimal) and not value.is_finite():
            raise ValidationError(f"Scalar must be finite, got {value!r}", "value")
        return Fraction(value)

    if isinstance(value, float):
        return Fraction(value) if mode is ArithmeticMode.EXACT else value

    raise ValidationError(f"Unsupported scalar type: {type(value).__name__}", "value")


def coerce_all(values: Iterable[Number], mode: ArithmeticMode = None) -> tuple:
    """Coerce a batch so that all members share one regime"""
    scalars = tuple(to_scalar(v, mode) for v in values)
    if mode is None and mode_of(scalars) is ArithmeticMode.FLOAT:
        return tuple(float(v) for v in scalars)
    return scalars


def magnitude(values: Iterable[Scalar]) -> Scalar:
    """Largest absolute value, in the regime of the batch (0 for an empty batch).

    Exact entries stay rational: table entries of exact input outgrow the
    float range long before the walk ends.
    """
    return max((abs(v) for v in values), default=0.0)


def robust_sign(x: Scalar, scale: Scalar = 0.0, tolerance: float = DEFAULT_TOLERANCE) -> SignClass:
    """Classify the sign of x.

    Exact rationals are compared against zero; floats against the band
    tolerance * scale, inside which the sign is reported as uncertain.
    """
    if is_exact(x):
        threshold = 0
    else:
        threshold = tolerance * scale

    if x > threshold:
        return SignClass.POSITIVE
    if x < -threshold:
        return SignClass.NEGATIVE
    return SignClass.ZERO_OR_UNCERTAIN


def format_scalar(value: Scalar) -> str:
    """Printable form: 'num/den' (or 'num') for rationals, repr for floats"""
    if is_exact(value):
        return str(value)
    return repr(float(value))
