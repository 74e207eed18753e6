# domain/oracle/services.py
from typing import List, Sequence, Tuple

import numpy as np
from loguru import logger

from .value_objects import RootSet
from domain.polynomials.entities import ComplexPolynomial
from domain.routh.entities import StabilityVerdict, NEAR_IMAGINARY_AXIS, ORACLE_NOT_CONVERGED
from core.exceptions import RootFindingError, DegenerateInputError


DEFAULT_TOLERANCE = 1e-13
DEFAULT_MAX_ITERATIONS = 500
DEFAULT_MARGIN = 1e-7
DEFAULT_RESIDUAL_FACTOR = 1e-8
DEFAULT_START_ANGLE = 0.4

_EPS = np.finfo(float).eps


def _horner(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Evaluate each row of ``coeffs`` (descending) at the matching row of ``z``"""
    value = np.repeat(coeffs[:, :1], z.shape[1], axis=1).astype(complex)
    for j in range(1, coeffs.shape[1]):
        value = value * z + coeffs[:, j:j + 1]
    return value


class RootOracle:
    """Aberth-Ehrlich simultaneous iteration, vectorised over polynomials of one degree.

    Every root is refined in Jacobi fashion and frozen once its correction
    drops below ``tolerance * max(1, |z|)`` or its value sits inside the
    Horner rounding-error bound.
    """

    def __init__(
        self,
        tolerance: float = DEFAULT_TOLERANCE,
        max_iterations: int = DEFAULT_MAX_ITERATIONS,
        residual_factor: float = DEFAULT_RESIDUAL_FACTOR,
        start_angle: float = DEFAULT_START_ANGLE
    ):
        self.tolerance = tolerance
        self.max_iterations = max_iterations
        self.residual_factor = residual_factor
        self.start_angle = start_angle

    def _iterate(self, coeffs: np.ndarray) -> Tuple[np.ndarray, np.ndarray, int]:
        m, n = coeffs.shape[0], coeffs.shape[1] - 1
        deriv = coeffs[:, :-1] * np.arange(n, 0, -1)
        magnitudes = np.abs(coeffs)

        # Cauchy bound; the angular offset keeps real polynomials off the real axis
        radius = 1.0 + np.max(magnitudes[:, 1:], axis=1)
        angles = 2.0 * np.pi * np.arange(n) / n + self.start_angle
        z = radius[:, None] * np.exp(1j * angles)[None, :]

        active = np.ones((m, n), dtype=bool)
        off_diagonal = ~np.eye(n, dtype=bool)
        iterations = 0

        for iterations in range(1, self.max_iterations + 1):
            value = _horner(coeffs, z)
            slope = _horner(deriv, z)
            noise = 4.0 * n * _EPS * _horner(magnitudes, np.abs(z)).real
            at_noise = np.abs(value) <= noise

            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                ratio = value / slope
                gaps = z[:, :, None] - z[:, None, :]
                repulsion = np.where(off_diagonal, 1.0 / np.where(off_diagonal, gaps, 1.0), 0.0).sum(axis=2)
                delta = ratio / (1.0 - ratio * repulsion)

            # Damping: nudge stalled roots, cap steps at the root-bound radius
            stalled = ~np.isfinite(delta)
            delta = np.where(stalled, 1e-3 * radius[:, None] * np.exp(1j * iterations), delta)
            length = np.abs(delta)
            delta = np.where(length > radius[:, None], delta / np.maximum(length, 1e-300) * radius[:, None], delta)

            step = np.where(active & ~at_noise, delta, 0.0)
            z = z - step

            settled = np.abs(step) <= self.tolerance * np.maximum(1.0, np.abs(z))
            active &= ~(settled | at_noise)
            if not active.any():
                break

        return z, ~active.any(axis=1), iterations

    def all_roots_batch(self, coefficient_rows: Sequence[Sequence[complex]]) -> List[RootSet]:
        """Roots of many monic polynomials of one degree (rows include the leading 1)"""
        coeffs = np.asarray(coefficient_rows, dtype=complex)
        if coeffs.ndim != 2 or coeffs.shape[1] < 2:
            raise DegenerateInputError("coefficient matrix", "rows of at least two coefficients are required")

        roots, settled, iterations = self._iterate(coeffs)
        residuals = np.abs(_horner(coeffs, roots))
        bounds = self.residual_factor * (1.0 + np.max(np.abs(coeffs[:, 1:]), axis=1))
        converged = settled & np.all(residuals <= bounds[:, None], axis=1)

        logger.debug(f"Aberth iteration on {coeffs.shape[0]} polynomial(s): {iterations} sweeps, "
                     f"{int(converged.sum())} converged")
        return [
            RootSet(
                roots=tuple(complex(r) for r in roots[i]),
                residuals=tuple(float(x) for x in residuals[i]),
                converged=bool(converged[i]),
                iterations=iterations,
            )
            for i in range(coeffs.shape[0])
        ]

    def all_roots(self, p: ComplexPolynomial) -> RootSet:
        return self.all_roots_batch([p.to_complex_coefficients()])[0]

    def spectral_abscissa(self, p: ComplexPolynomial) -> float:
        """Largest real part over all roots; raises when the iteration fails"""
        root_set = self.all_roots(p)
        if not root_set.converged:
            raise RootFindingError(root_set.iterations, f"max residual {root_set.max_residual:.3e}")
        return root_set.abscissa

    def oracle_verdict(self, p: ComplexPolynomial, margin: float = DEFAULT_MARGIN) -> StabilityVerdict:
        """Hurwitz below -margin, NotHurwitz above +margin, Inconclusive inside the band"""
        try:
            abscissa = self.spectral_abscissa(p)
        except RootFindingError as e:
            logger.warning(f"Oracle gave up: {e.message}")
            return StabilityVerdict.inconclusive(None, ORACLE_NOT_CONVERGED)
        return verdict_from_abscissa(abscissa, margin)


def verdict_from_abscissa(abscissa: float, margin: float = DEFAULT_MARGIN) -> StabilityVerdict:
    if abscissa < -margin:
        return StabilityVerdict.hurwitz()
    if abscissa > margin:
        return StabilityVerdict.not_hurwitz(None)
    return StabilityVerdict.inconclusive(None, NEAR_IMAGINARY_AXIS)


_default_oracle = RootOracle()


def all_roots(p: ComplexPolynomial, tol: float = DEFAULT_TOLERANCE) -> RootSet:
    oracle = _default_oracle if tol == DEFAULT_TOLERANCE else RootOracle(tolerance=tol)
    return oracle.all_roots(p)


def spectral_abscissa(p: ComplexPolynomial) -> float:
    return _default_oracle.spectral_abscissa(p)


def oracle_verdict(p: ComplexPolynomial, margin: float = DEFAULT_MARGIN) -> StabilityVerdict:
    return _default_oracle.oracle_verdict(p, margin)
