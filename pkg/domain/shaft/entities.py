# domain/shaft/entities.py
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .value_objects import ShaftParams
from domain.polynomials.value_objects import ComplexCoefficient
from domain.routh.entities import StabilityVerdict
from domain.scalars.value_objects import Scalar


STABLE = "stable"
UNSTABLE = "unstable"
BOUNDARY = "boundary"


@dataclass(frozen=True)
class ClosedLoopModel:
    """Affine closed loop x' = A x + f in the state (x_1, x_2, l) = (x, x', integral of x - x_ref)"""
    matrix: Tuple[Tuple[ComplexCoefficient, ...], ...]
    forcing: Tuple[ComplexCoefficient, ...]
    params: ShaftParams

    def matrix_array(self) -> np.ndarray:
        return np.array([[c.to_complex() for c in row] for row in self.matrix], dtype=complex)

    def forcing_array(self) -> np.ndarray:
        return np.array([c.to_complex() for c in self.forcing], dtype=complex)


@dataclass(frozen=True)
class ShaftTableEntries:
    """Closed forms of the nonzero entries of the shaft's generalized table"""
    a1_1: Scalar
    b1_1: Scalar
    a2_1: Scalar
    a2_2: Scalar
    b2_2: Scalar
    b3_2: Scalar
    a3_2: Scalar
    a3_3: Scalar

    def pivots(self) -> Tuple[Scalar, Scalar, Scalar]:
        return self.a1_1, self.a2_2, self.a3_3


@dataclass(frozen=True)
class GainCell:
    """One lattice point of a gain sweep"""
    ki: Scalar
    kp: Scalar
    conditions: Tuple[Scalar, Scalar, Scalar]
    verdict: StabilityVerdict
    abscissa: float

    @property
    def conditions_hold(self) -> bool:
        """The 1/0 map: all three conditions strictly positive"""
        return all(c > 0 for c in self.conditions)

    def region(self, margin: float) -> str:
        if (
            any(c == 0 for c in self.conditions)
            or not self.verdict.is_decisive
            or not math.isfinite(self.abscissa)
            or abs(self.abscissa) <= margin
        ):
            return BOUNDARY
        return STABLE if self.verdict.is_hurwitz else UNSTABLE

    def disagrees(self, margin: float) -> bool:
        """Condition map and abscissa sign point in opposite directions"""
        if not math.isfinite(self.abscissa) or abs(self.abscissa) <= margin:
            return False
        return self.conditions_hold != (self.abscissa < 0)


@dataclass(frozen=True)
class GainGrid:
    """Sweep of the (kI, kp) plane; ``cells[i][j]`` sits at (ki_axis[i], kp_axis[j])"""
    ki_axis: Tuple[Scalar, ...]
    kp_axis: Tuple[Scalar, ...]
    cells: Tuple[Tuple[GainCell, ...], ...]
    base: ShaftParams
    margin: float = 1e-6

    def __iter__(self):
        for row in self.cells:
            yield from row

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.ki_axis), len(self.kp_axis)

    def summary(self) -> Dict[str, int]:
        counts = {STABLE: 0, UNSTABLE: 0, BOUNDARY: 0}
        for cell in self:
            counts[cell.region(self.margin)] += 1
        return counts

    def disagreements(self, margin: Optional[float] = None) -> List[GainCell]:
        margin = self.margin if margin is None else margin
        return [cell for cell in self if cell.disagrees(margin)]

    def region_codes(self) -> np.ndarray:
        """ki x kp matrix with 1 stable, 0 unstable, -1 boundary"""
        code = {STABLE: 1, UNSTABLE: 0, BOUNDARY: -1}
        return np.array([[code[cell.region(self.margin)] for cell in row] for row in self.cells], dtype=int)


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Sampled closed-loop states; ``states`` has columns (x_1, x_2, l)"""
    times: np.ndarray
    states: np.ndarray
    x_ref: complex
    equilibrium: Tuple[complex, complex, complex]
    blowup_time: Optional[float] = None
    peak_norm: float = field(default=0.0)

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]

    @property
    def regulation_error(self) -> float:
        """|x_1(T) - x_ref|"""
        return float(abs(self.final_state[0] - self.x_ref))

    @property
    def horizon(self) -> float:
        return float(self.times[-1])
