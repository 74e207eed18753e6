# tests/helpers.py
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from domain.polynomials.entities import ComplexPolynomial
from domain.polynomials.services import from_roots
from domain.polynomials.value_objects import ComplexCoefficient


def random_rational(rng: np.random.Generator, low: int, high: int, denominator: int = 10) -> Fraction:
    return Fraction(int(rng.integers(low, high + 1)), denominator)


def away_from_axis(rng: np.random.Generator, stable_bias: float = 0.5) -> Fraction:
    """Real part in +-[0.1, 3.0], negative with probability ``stable_bias``"""
    magnitude = random_rational(rng, 1, 30)
    return -magnitude if rng.random() < stable_bias else magnitude


def random_real_polynomial(rng: np.random.Generator, degree: int, stable_bias: float = 0.5) -> Tuple[ComplexPolynomial, bool]:
    """Exact real monic polynomial from conjugate root pairs; returns it with its true Hurwitz status"""
    roots: List[ComplexCoefficient] = []
    while len(roots) < degree:
        re = away_from_axis(rng, stable_bias)
        if degree - len(roots) >= 2 and rng.random() < 0.5:
            im = random_rational(rng, 1, 30)
            roots += [ComplexCoefficient(re, im), ComplexCoefficient(re, -im)]
        else:
            roots.append(ComplexCoefficient(re, 0))
    return from_roots(roots), all(r.re < 0 for r in roots)


def random_complex_polynomial(rng: np.random.Generator, degree: int) -> ComplexPolynomial:
    """Exact monic polynomial with Gaussian-integer coefficients in [-9, 9]"""
    parts = rng.integers(-9, 10, size=(2, degree))
    return ComplexPolynomial.from_parts([int(x) for x in parts[0]], [int(x) for x in parts[1]])


def random_rooted_polynomial(rng: np.random.Generator, degree: int, stable_bias: float = 0.7) -> Tuple[ComplexPolynomial, bool]:
    """Exact complex monic polynomial with prescribed roots away from the imaginary axis"""
    roots = [ComplexCoefficient(away_from_axis(rng, stable_bias), random_rational(rng, -30, 30)) for _ in range(degree)]
    return from_roots(roots), all(r.re < 0 for r in roots)


def stretched_float(p: ComplexPolynomial, factor: float) -> ComplexPolynomial:
    """Float polynomial whose roots are those of p multiplied by ``factor``"""
    return ComplexPolynomial.from_parts(
        [float(x) * factor ** j for j, x in enumerate(p.real_parts, start=1)],
        [float(x) * factor ** j for j, x in enumerate(p.imag_parts, start=1)],
    )
