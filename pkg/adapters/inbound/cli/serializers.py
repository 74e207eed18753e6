# adapters/inbound/cli/serializers.py
import cmath
from typing import Dict, List, Optional, Tuple, Union
from pydantic import BaseModel, Field

from application.stability.use_cases import CheckResult, TableResult
from application.shaft.use_cases import ShaftAnalysis
from domain.routh.entities import StabilityVerdict
from domain.scalars.services import is_exact
from domain.shaft.entities import GainGrid, Trajectory


# Exact rationals travel as "num/den" text, floats as JSON numbers
ScalarJson = Union[str, float]


def scalar_json(value) -> ScalarJson:
    return str(value) if is_exact(value) else float(value)


def complex_json(value: complex) -> Optional[Tuple[float, float]]:
    if cmath.isnan(value):
        return None
    return float(value.real), float(value.imag)


class VerdictFields(BaseModel):
    verdict: str = Field(..., description="hurwitz, not_hurwitz or inconclusive")
    first_failing_index: Optional[int] = None
    annotation: Optional[str] = None

    @staticmethod
    def of(verdict: StabilityVerdict) -> Dict[str, object]:
        return {
            "verdict": verdict.outcome.value,
            "first_failing_index": verdict.first_failing_index,
            "annotation": verdict.annotation,
        }


class CheckResponse(VerdictFields):
    """check output"""
    polynomial: str
    degree: int
    mode: str
    xi: Optional[str] = None
    pivots: List[ScalarJson]

    @classmethod
    def from_result(cls, result: CheckResult) -> "CheckResponse":
        p = result.polynomial
        return cls(
            polynomial=str(p),
            degree=p.degree,
            mode=p.mode.value,
            xi=str(result.xi) if result.xi is not None else None,
            pivots=[scalar_json(v) for v in result.verdict.pivots],
            **VerdictFields.of(result.verdict),
        )


class LevelResponse(BaseModel):
    p: int
    row1: List[ScalarJson]
    row2: List[ScalarJson]
    labels1: List[str]
    labels2: List[str]


class TableResponse(VerdictFields):
    """table output"""
    polynomial: str
    degree: int
    mode: str
    levels: List[LevelResponse]
    pivots: List[ScalarJson]
    scaling_log: List[ScalarJson]

    @classmethod
    def from_result(cls, result: TableResult) -> "TableResponse":
        table = result.table
        levels = []
        for level in table.levels:
            labels1, labels2 = level.labels()
            levels.append(LevelResponse(
                p=level.p,
                row1=[scalar_json(v) for v in level.row1],
                row2=[scalar_json(v) for v in level.row2],
                labels1=labels1,
                labels2=labels2,
            ))
        return cls(
            polynomial=str(table.polynomial),
            degree=table.degree,
            mode=table.mode.value,
            levels=levels,
            pivots=[scalar_json(v) for v in table.pivots],
            scaling_log=[scalar_json(v) for v in table.scaling_log],
            **VerdictFields.of(result.verdict),
        )


class ShaftResponse(VerdictFields):
    """shaft output"""
    params: Dict[str, ScalarJson]
    polynomial: str
    conditions: List[ScalarJson]
    table_entries: Dict[str, ScalarJson]
    abscissa: Optional[float] = None
    oracle_verdict: Optional[str] = None

    @classmethod
    def from_result(cls, result: ShaftAnalysis) -> "ShaftResponse":
        params = result.params
        entries = result.table_entries
        return cls(
            params={
                "k": scalar_json(params.k),
                "omega": scalar_json(params.omega),
                "big_omega": scalar_json(params.Omega),
                "kp": scalar_json(params.kp),
                "ki": scalar_json(params.kI),
            },
            polynomial=str(result.polynomial),
            conditions=[scalar_json(c) for c in result.conditions],
            table_entries={name: scalar_json(getattr(entries, name)) for name in entries.__dataclass_fields__},
            abscissa=result.abscissa,
            oracle_verdict=result.oracle_verdict.outcome.value if result.oracle_verdict else None,
            **VerdictFields.of(result.verdict),
        )


class SweepResponse(BaseModel):
    """sweep output"""
    shape: Tuple[int, int]
    summary: Dict[str, int]
    disagreements: int
    margin: float

    @classmethod
    def from_result(cls, grid: GainGrid) -> "SweepResponse":
        return cls(
            shape=grid.shape,
            summary=grid.summary(),
            disagreements=len(grid.disagreements()),
            margin=grid.margin,
        )


class SimulationResponse(BaseModel):
    """simulate output"""
    horizon: float
    samples: int
    final_state: Dict[str, Tuple[float, float]]
    regulation_error: float
    peak_norm: float
    blowup_time: Optional[float] = None
    equilibrium: Optional[Dict[str, Optional[Tuple[float, float]]]] = None

    @classmethod
    def from_result(cls, trajectory: Trajectory) -> "SimulationResponse":
        names = ("x1", "x2", "l")
        equilibrium = None
        if not cmath.isnan(trajectory.equilibrium[0]):
            equilibrium = {name: complex_json(v) for name, v in zip(names, trajectory.equilibrium)}
        return cls(
            horizon=trajectory.horizon,
            samples=len(trajectory.times),
            final_state={name: complex_json(complex(v)) for name, v in zip(names, trajectory.final_state)},
            regulation_error=trajectory.regulation_error,
            peak_norm=trajectory.peak_norm,
            blowup_time=trajectory.blowup_time,
            equilibrium=equilibrium,
        )
