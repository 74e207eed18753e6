# domain/polynomials/entities.py
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from .value_objects import ComplexCoefficient, ONE
from domain.scalars.value_objects import Scalar, ArithmeticMode
from core.exceptions import DegenerateInputError


@dataclass(frozen=True)
class ComplexPolynomial:
    """Monic polynomial q(s) = s^n + sum_{j=1..n} (a_j + i b_j) s^(n-j).

    ``coeffs[j-1]`` holds a_j + i b_j, so code indices match the usual
    subscripts; the leading 1 is implicit.
    """
    coeffs: Tuple[ComplexCoefficient, ...]

    def __post_init__(self):
        coeffs = tuple(ComplexCoefficient.lift(c) for c in self.coeffs)
        if not coeffs:
            raise DegenerateInputError("polynomial of degree 0", "a nonzero constant has no roots to locate")
        if any(c.mode is ArithmeticMode.FLOAT for c in coeffs):
            coeffs = tuple(c.to_mode(ArithmeticMode.FLOAT) for c in coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_parts(cls, a: Sequence, b: Sequence = None) -> "ComplexPolynomial":
        """Build from the real parts a_1..a_n and imaginary parts b_1..b_n"""
        b = b if b is not None else [0] * len(a)
        if len(a) != len(b):
            raise DegenerateInputError("coefficient parts", f"{len(a)} real parts vs {len(b)} imaginary parts")
        return cls(tuple(ComplexCoefficient(re, im) for re, im in zip(a, b)))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def mode(self) -> ArithmeticMode:
        return self.coeffs[0].mode

    def a(self, j: int) -> Scalar:
        """Real part a_j, 1-based"""
        return self.coeffs[j - 1].re

    def b(self, j: int) -> Scalar:
        """Imaginary part b_j, 1-based"""
        return self.coeffs[j - 1].im

    @property
    def real_parts(self) -> List[Scalar]:
        return [c.re for c in self.coeffs]

    @property
    def imag_parts(self) -> List[Scalar]:
        return [c.im for c in self.coeffs]

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self.coeffs)

    def full_coefficients(self) -> List[ComplexCoefficient]:
        """Descending coefficients including the leading 1"""
        return [ONE.to_mode(self.mode)] + list(self.coeffs)

    def to_complex_coefficients(self) -> List[complex]:
        """Descending float coefficients including the leading 1"""
        return [1 + 0j] + [c.to_complex() for c in self.coeffs]

    def to_mode(self, mode: ArithmeticMode) -> "ComplexPolynomial":
        return ComplexPolynomial(tuple(c.to_mode(mode) for c in self.coeffs))

    def conjugate(self) -> "ComplexPolynomial":
        """Coefficient-wise conjugate; its roots are the conjugated roots"""
        return ComplexPolynomial(tuple(c.conjugate() for c in self.coeffs))

    def __mul__(self, other: "ComplexPolynomial") -> "ComplexPolynomial":
        left = self.full_coefficients()
        right = other.full_coefficients()
        product: List[ComplexCoefficient] = [ComplexCoefficient(0, 0)] * (len(left) + len(right) - 1)
        for i, x in enumerate(left):
            for j, y in enumerate(right):
                product[i + j] = product[i + j] + x * y
        return ComplexPolynomial(tuple(product[1:]))

    def __iter__(self) -> Iterator[ComplexCoefficient]:
        return iter(self.coeffs)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)
