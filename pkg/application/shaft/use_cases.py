# application/shaft/use_cases.py
from abc import abstractmethod
from dataclasses import dataclass
from typing import Optional, Protocol, Tuple

from loguru import logger

from domain.oracle.services import RootOracle
from domain.polynomials.entities import ComplexPolynomial
from domain.polynomials.services import parse_complex, parse_real
from domain.routh.entities import StabilityVerdict
from domain.routh.services import hurwitz_verdict
from domain.scalars.value_objects import Scalar, ArithmeticMode
from domain.scalars.services import to_scalar
from domain.shaft.entities import GainGrid, ShaftTableEntries, Trajectory
from domain.shaft.services import (
    characteristic_polynomial,
    shaft_conditions,
    shaft_table_closed_forms,
    simulate_closed_loop,
    sweep_grid,
)
from domain.shaft.value_objects import ShaftParams
from config.settings import StabilityConfig, OracleConfig, SweepConfig, SimulationConfig
from .commands import ShaftParamsCommand, AnalyzeShaftCommand, SweepGainsCommand, SimulateCommand


class GridWriter(Protocol):
    """Gain-grid table output port"""

    @abstractmethod
    def write(self, grid: GainGrid, path: str) -> None:
        pass


class HeatmapRenderer(Protocol):
    """Stability-map image output port"""

    @abstractmethod
    def render(self, grid: GainGrid, path: str) -> None:
        pass


class TrajectoryWriter(Protocol):
    """Sampled trajectory output port"""

    @abstractmethod
    def write(self, trajectory: Trajectory, path: str) -> None:
        pass


def shaft_params(command: ShaftParamsCommand, kp: str = "0", ki: str = "0", x_ref: str = "1") -> ShaftParams:
    """Parse the textual parameters; exactness follows the literals"""
    return ShaftParams(
        k=parse_real(command.k),
        omega=parse_real(command.omega),
        Omega=parse_real(command.big_omega),
        kp=parse_real(kp),
        kI=parse_real(ki),
        x_ref=parse_complex(x_ref),
    )


def parse_range(text: Optional[str], default: Tuple[float, float]) -> Tuple[Scalar, Scalar]:
    """'lo:hi' literals, or the configured window taken at its exact binary value"""
    if text is None:
        return to_scalar(default[0], ArithmeticMode.EXACT), to_scalar(default[1], ArithmeticMode.EXACT)
    lo, hi = text.split(":")
    return parse_real(lo), parse_real(hi)


def oracle_from(config: OracleConfig) -> RootOracle:
    return RootOracle(
        tolerance=config.tolerance,
        max_iterations=config.max_iterations,
        residual_factor=config.residual_factor,
        start_angle=config.start_angle,
    )


@dataclass(frozen=True)
class ShaftAnalysis:
    params: ShaftParams
    polynomial: ComplexPolynomial
    conditions: Tuple[Scalar, Scalar, Scalar]
    table_entries: ShaftTableEntries
    verdict: StabilityVerdict
    abscissa: Optional[float]
    oracle_verdict: Optional[StabilityVerdict] = None


class AnalyzeShaftUseCase:
    """Use case for a single gain pair"""

    def __init__(self, oracle: RootOracle, stability: StabilityConfig, oracle_config: OracleConfig):
        self.oracle = oracle
        self.stability = stability
        self.oracle_config = oracle_config

    def execute(self, command: AnalyzeShaftCommand) -> ShaftAnalysis:
        params = shaft_params(command, command.kp, command.ki)
        polynomial = characteristic_polynomial(params)
        verdict = hurwitz_verdict(polynomial, self.stability.tolerance)

        roots = self.oracle.all_roots(polynomial)
        abscissa = roots.abscissa if roots.converged else None

        oracle_verdict = None
        if command.oracle:
            oracle_verdict = self.oracle.oracle_verdict(polynomial, self.oracle_config.margin)
            if oracle_verdict.is_decisive and verdict.is_decisive and oracle_verdict.outcome != verdict.outcome:
                logger.warning(f"Table verdict {verdict} disagrees with oracle verdict {oracle_verdict}")

        return ShaftAnalysis(
            params=params,
            polynomial=polynomial,
            conditions=shaft_conditions(params),
            table_entries=shaft_table_closed_forms(params),
            verdict=verdict,
            abscissa=abscissa,
            oracle_verdict=oracle_verdict,
        )


class SweepGainsUseCase:
    """Use case for the gain-plane stability map"""

    def __init__(
        self,
        oracle: RootOracle,
        grid_writer: GridWriter,
        heatmap_renderer: HeatmapRenderer,
        sweep: SweepConfig,
        stability: StabilityConfig
    ):
        self.oracle = oracle
        self.grid_writer = grid_writer
        self.heatmap_renderer = heatmap_renderer
        self.sweep = sweep
        self.stability = stability

    def execute(self, command: SweepGainsCommand) -> GainGrid:
        base = shaft_params(command)
        grid = sweep_grid(
            base,
            parse_range(command.ki_range, self.sweep.ki_range),
            parse_range(command.kp_range, self.sweep.kp_range),
            resolution=command.resolution or self.sweep.resolution,
            margin=self.sweep.margin if command.margin is None else command.margin,
            oracle=self.oracle,
            tolerance=self.stability.tolerance,
        )

        disagreements = grid.disagreements()
        if disagreements:
            logger.warning(f"{len(disagreements)} cells where conditions and abscissa disagree")

        self.grid_writer.write(grid, command.out)
        if command.svg:
            self.heatmap_renderer.render(grid, command.svg)
        return grid


class SimulateClosedLoopUseCase:
    """Use case for time-domain regulation"""

    def __init__(self, trajectory_writer: TrajectoryWriter, simulation: SimulationConfig):
        self.trajectory_writer = trajectory_writer
        self.simulation = simulation

    def execute(self, command: SimulateCommand) -> Trajectory:
        params = shaft_params(command, command.kp, command.ki, command.x_ref or self.simulation.x_ref)
        trajectory = simulate_closed_loop(
            params,
            x0=parse_complex(command.x0).to_complex(),
            v0=parse_complex(command.v0).to_complex(),
            l0=parse_complex(command.l0).to_complex(),
            horizon=command.horizon or self.simulation.horizon,
            dt=command.dt or self.simulation.dt,
            sample_every=command.sample_every or self.simulation.sample_every,
            blowup_norm=self.simulation.blowup_norm,
        )
        if command.out:
            self.trajectory_writer.write(trajectory, command.out)
        return trajectory
