# domain/shaft/value_objects.py
import dataclasses
import math
from dataclasses import dataclass
from typing import Tuple

from domain.polynomials.value_objects import ComplexCoefficient, ONE
from domain.scalars.value_objects import Scalar, ArithmeticMode
from domain.scalars.services import coerce_all, is_exact
from core.exceptions import ValidationError


@dataclass(frozen=True)
class ShaftParams:
    """Rotating shaft x'' + (2k omega + 2i Omega) x' + (omega^2 - Omega^2) x = u under PI control.

    ``k`` damping, ``omega`` undamped frequency, ``Omega`` angular velocity,
    ``kp``/``kI`` proportional and integral gains, ``x_ref`` reference position.
    """
    k: Scalar
    omega: Scalar
    Omega: Scalar
    kp: Scalar
    kI: Scalar
    x_ref: ComplexCoefficient = ONE

    def __post_init__(self):
        values = coerce_all((self.k, self.omega, self.Omega, self.kp, self.kI))
        for name, value in zip(("k", "omega", "Omega", "kp", "kI"), values):
            if not is_exact(value) and not math.isfinite(value):
                raise ValidationError(f"Shaft parameter {name} must be finite, got {value!r}", name)
            object.__setattr__(self, name, value)

        x_ref = ComplexCoefficient.lift(self.x_ref)
        if not is_exact(values[0]):
            x_ref = x_ref.to_mode(ArithmeticMode.FLOAT)
        object.__setattr__(self, "x_ref", x_ref)

    @property
    def mode(self) -> ArithmeticMode:
        return ArithmeticMode.EXACT if is_exact(self.k) else ArithmeticMode.FLOAT

    def with_gains(self, kI: Scalar, kp: Scalar) -> "ShaftParams":
        return dataclasses.replace(self, kI=kI, kp=kp)

    def gains(self) -> Tuple[Scalar, Scalar]:
        """(kI, kp), the order of the sweep axes"""
        return self.kI, self.kp
