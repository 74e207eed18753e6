# domain/shaft/services.py
import math
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from .entities import ClosedLoopModel, ShaftTableEntries, GainCell, GainGrid, Trajectory
from .value_objects import ShaftParams
from domain.oracle.services import RootOracle
from domain.polynomials.entities import ComplexPolynomial
from domain.polynomials.services import characteristic_polynomial_of
from domain.polynomials.value_objects import ComplexCoefficient
from domain.routh.entities import StabilityVerdict, ORACLE_NOT_CONVERGED
from domain.routh.services import hurwitz_verdict
from domain.scalars.value_objects import Scalar
from domain.scalars.services import DEFAULT_TOLERANCE, is_exact
from core.exceptions import ValidationError, DegenerateInputError, DivergenceError


DEFAULT_SWEEP_MARGIN = 1e-6
DEFAULT_BLOWUP_NORM = 1e6


def closed_loop_model(params: ShaftParams) -> ClosedLoopModel:
    """A and f of x' = A x + f for the state (x, x', l) under u = kp (x - x_ref) + kI l"""
    k, omega, Omega, kp, kI = params.k, params.omega, params.Omega, params.kp, params.kI
    zero, one = 0 * k, 0 * k + 1

    def c(re, im=None) -> ComplexCoefficient:
        return ComplexCoefficient(re, zero if im is None else im)

    matrix = (
        (c(zero), c(one), c(zero)),
        (c(kp + Omega * Omega - omega * omega), c(-2 * k * omega, -2 * Omega), c(kI)),
        (c(one), c(zero), c(zero)),
    )
    x_ref = params.x_ref
    forcing = (c(zero), -(x_ref * kp), -x_ref)
    return ClosedLoopModel(matrix, forcing, params)


def characteristic_polynomial(params: ShaftParams) -> ComplexPolynomial:
    """s^3 + (2k omega + 2i Omega) s^2 + (omega^2 - Omega^2 - kp) s - kI"""
    k, omega, Omega, kp, kI = params.k, params.omega, params.Omega, params.kp, params.kI
    return ComplexPolynomial.from_parts(
        [2 * k * omega, omega * omega - Omega * Omega - kp, -kI],
        [2 * Omega, 0 * k, 0 * k],
    )


def model_characteristic_polynomial(model: ClosedLoopModel) -> ComplexPolynomial:
    """det(sI - A) expanded from the closed-loop matrix"""
    return characteristic_polynomial_of(model.matrix)


def _gain_term(params: ShaftParams) -> Scalar:
    """2k omega (omega^2 - Omega^2 - kp) + kI, the table entry a_2^(1)"""
    k, omega, Omega = params.k, params.omega, params.Omega
    return 2 * k * omega * (omega * omega - Omega * Omega - params.kp) + params.kI


def shaft_conditions(params: ShaftParams) -> Tuple[Scalar, Scalar, Scalar]:
    """The three quantities that must all be positive for the gains to stabilize"""
    k, omega, Omega, kI = params.k, params.omega, params.Omega, params.kI
    a = _gain_term(params)
    return (
        2 * k * omega,
        2 * k * omega * a,
        -8 * kI * kI * k * omega * Omega * Omega - kI * a * a,
    )


def shaft_table_closed_forms(params: ShaftParams) -> ShaftTableEntries:
    k, omega, Omega, kI = params.k, params.omega, params.Omega, params.kI
    a2_1 = _gain_term(params)
    a2_2 = 2 * k * omega * a2_1
    return ShaftTableEntries(
        a1_1=2 * k * omega,
        b1_1=4 * k * omega * Omega,
        a2_1=a2_1,
        a2_2=a2_2,
        b2_2=-8 * kI * k * k * omega * omega * Omega,
        b3_2=4 * kI * k * omega * Omega,
        a3_2=-kI * a2_2,
        a3_3=-kI * a2_2 * a2_2 - 32 * kI * kI * k ** 3 * omega ** 3 * Omega * Omega,
    )


def lattice(lo: Scalar, hi: Scalar, count: int) -> Tuple[Scalar, ...]:
    """count equally spaced samples of [lo, hi]; a degenerate interval yields one sample"""
    if count < 2:
        raise ValidationError(f"Resolution must be at least 2 per axis, got {count}", "resolution")
    if lo > hi:
        raise ValidationError(f"Range must be ordered, got {lo}:{hi}", "range")
    if lo == hi:
        return (lo,)
    if is_exact(lo) and is_exact(hi):
        return tuple(lo + (hi - lo) * Fraction(i, count - 1) for i in range(count))
    return tuple(float(x) for x in np.linspace(float(lo), float(hi), count))


def sweep_grid(
    base: ShaftParams,
    ki_range: Tuple[Scalar, Scalar],
    kp_range: Tuple[Scalar, Scalar],
    resolution: Tuple[int, int] = (200, 200),
    margin: float = DEFAULT_SWEEP_MARGIN,
    oracle: Optional[RootOracle] = None,
    tolerance: float = DEFAULT_TOLERANCE
) -> GainGrid:
    """Conditions, table verdict and oracle abscissa at every (kI, kp) lattice point"""
    oracle = oracle or RootOracle()
    ki_axis = lattice(ki_range[0], ki_range[1], resolution[0])
    kp_axis = lattice(kp_range[0], kp_range[1], resolution[1])

    points = [base.with_gains(ki, kp) for ki in ki_axis for kp in kp_axis]
    polynomials = [characteristic_polynomial(p) for p in points]
    root_sets = oracle.all_roots_batch([q.to_complex_coefficients() for q in polynomials])

    cells = []
    for params, q, roots in zip(points, polynomials, root_sets):
        if roots.converged:
            verdict, abscissa = hurwitz_verdict(q, tolerance), roots.abscissa
        else:
            verdict, abscissa = StabilityVerdict.inconclusive(None, ORACLE_NOT_CONVERGED), math.nan
        cells.append(GainCell(params.kI, params.kp, shaft_conditions(params), verdict, abscissa))

    width = len(kp_axis)
    grid = GainGrid(
        ki_axis=ki_axis,
        kp_axis=kp_axis,
        cells=tuple(tuple(cells[i:i + width]) for i in range(0, len(cells), width)),
        base=base,
        margin=margin,
    )
    logger.debug(f"Swept {len(cells)} cells: {grid.summary()}")
    return grid


def equilibrium(params: ShaftParams) -> Tuple[complex, complex, complex]:
    """Fixed point (x_ref, 0, l*) of the affine closed loop"""
    model = closed_loop_model(params)
    try:
        point = np.linalg.solve(model.matrix_array(), -model.forcing_array())
    except np.linalg.LinAlgError:
        raise DegenerateInputError("singular closed-loop matrix", "kI = 0 leaves no isolated equilibrium")
    return complex(point[0]), complex(point[1]), complex(point[2])


def simulate_closed_loop(
    params: ShaftParams,
    x0: complex = 0j,
    v0: complex = 0j,
    l0: complex = 0j,
    horizon: float = 60.0,
    dt: float = 0.01,
    sample_every: int = 1,
    blowup_norm: float = DEFAULT_BLOWUP_NORM
) -> Trajectory:
    """Classical RK4 integration of x' = A x + f, sampled every ``sample_every`` steps"""
    if not (horizon > 0 and dt > 0):
        raise ValidationError(f"Horizon and step must be positive, got horizon={horizon}, dt={dt}", "dt")
    if sample_every < 1:
        raise ValidationError(f"sample_every must be at least 1, got {sample_every}", "sample_every")

    model = closed_loop_model(params)
    A, f = model.matrix_array(), model.forcing_array()
    steps = max(1, math.ceil(horizon / dt - 1e-9))
    h = horizon / steps

    spectral_radius = float(np.max(np.abs(np.linalg.eigvals(A))))
    if h * spectral_radius > 1.0:
        logger.warning(f"Step {h:.3g} times spectral radius {spectral_radius:.3g} exceeds 1; RK4 may be unstable")

    try:
        fixed_point = equilibrium(params)
    except DegenerateInputError:
        fixed_point = (complex("nan"), complex("nan"), complex("nan"))

    def rhs(x: np.ndarray) -> np.ndarray:
        return A @ x + f

    x = np.array([x0, v0, l0], dtype=complex)
    times, states = [0.0], [x.copy()]
    peak = float(np.linalg.norm(x))
    blowup_time = None

    with np.errstate(over="ignore", invalid="ignore"):
        for step in range(1, steps + 1):
            k1 = rhs(x)
            k2 = rhs(x + 0.5 * h * k1)
            k3 = rhs(x + 0.5 * h * k2)
            k4 = rhs(x + h * k3)
            x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            t = step * h

            if not np.all(np.isfinite(x)):
                raise DivergenceError(t)

            norm = float(np.linalg.norm(x))
            peak = max(peak, norm)
            if blowup_time is None and norm > blowup_norm:
                blowup_time = t
                logger.warning(f"State norm exceeded {blowup_norm:.3g} at t={t:.4g}")

            if step % sample_every == 0 or step == steps:
                times.append(t)
                states.append(x.copy())

    logger.debug(f"Integrated {steps} RK4 steps of size {h:.3g}")
    return Trajectory(
        times=np.array(times),
        states=np.array(states),
        x_ref=params.x_ref.to_complex(),
        equilibrium=fixed_point,
        blowup_time=blowup_time,
        peak_norm=peak,
    )
