# application/stability/use_cases.py
from dataclasses import dataclass
from typing import Optional

from domain.polynomials.entities import ComplexPolynomial
from domain.polynomials.services import parse_polynomial, parse_real
from domain.polynomials.value_objects import HalfPlaneBound
from domain.routh.entities import RHTable, StabilityVerdict
from domain.routh.services import build_table, hurwitz_verdict, table_verdict
from domain.scalars.value_objects import ArithmeticMode
from config.settings import StabilityConfig
from .commands import CheckPolynomialCommand, BuildTableCommand


def arithmetic_mode(name: str) -> Optional[ArithmeticMode]:
    """'auto' lets the literals decide"""
    return None if name == "auto" else ArithmeticMode(name)


@dataclass(frozen=True)
class CheckResult:
    polynomial: ComplexPolynomial
    verdict: StabilityVerdict
    xi: Optional[HalfPlaneBound] = None


@dataclass(frozen=True)
class TableResult:
    table: RHTable
    verdict: StabilityVerdict


class CheckPolynomialUseCase:
    """Use case for the short-circuiting Hurwitz test"""

    def __init__(self, config: StabilityConfig):
        self.config = config

    def execute(self, command: CheckPolynomialCommand) -> CheckResult:
        """Execute check use case"""
        mode = arithmetic_mode(command.mode if command.mode != "auto" else self.config.default_mode)
        polynomial = parse_polynomial(command.coeffs, command.leading, mode)
        xi = HalfPlaneBound(parse_real(command.xi, mode)) if command.xi is not None else None

        verdict = hurwitz_verdict(
            polynomial,
            tolerance=command.tolerance or self.config.tolerance,
            xi=xi,
            overflow_threshold=self.config.overflow_threshold,
            underflow_threshold=self.config.underflow_threshold,
        )
        return CheckResult(polynomial, verdict, xi)


class BuildTableUseCase:
    """Use case for the full table"""

    def __init__(self, config: StabilityConfig):
        self.config = config

    def execute(self, command: BuildTableCommand) -> TableResult:
        mode = arithmetic_mode(command.mode if command.mode != "auto" else self.config.default_mode)
        polynomial = parse_polynomial(command.coeffs, command.leading, mode)

        table = build_table(polynomial, self.config.overflow_threshold, self.config.underflow_threshold)
        verdict = table_verdict(table, command.tolerance or self.config.tolerance)
        return TableResult(table, verdict)
