# domain/oracle/value_objects.py
from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class RootSet:
    """All n roots of a degree-n polynomial with their residuals |q(root)|"""
    roots: Tuple[complex, ...]
    residuals: Tuple[float, ...]
    converged: bool
    iterations: int = 0

    @property
    def degree(self) -> int:
        return len(self.roots)

    @property
    def abscissa(self) -> float:
        """Largest real part"""
        return max(root.real for root in self.roots)

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)
