# application/stability/handlers.py
from typing import Dict, Any

from .use_cases import CheckPolynomialUseCase, BuildTableUseCase
from .commands import CheckPolynomialCommand, BuildTableCommand
from application.handlers import TimedCommandHandler
from application.exit_codes import verdict_exit_code


class StabilityCommandHandler(TimedCommandHandler):
    """Handler for check and table commands"""

    def __init__(self, check_use_case: CheckPolynomialUseCase, table_use_case: BuildTableUseCase):
        self.check_use_case = check_use_case
        self.table_use_case = table_use_case

    def handle_check(self, command: CheckPolynomialCommand) -> Dict[str, Any]:
        return self.run(
            "check",
            lambda: self.check_use_case.execute(command),
            lambda result: verdict_exit_code(result.verdict),
        )

    def handle_table(self, command: BuildTableCommand) -> Dict[str, Any]:
        return self.run(
            "table",
            lambda: self.table_use_case.execute(command),
            lambda result: verdict_exit_code(result.verdict),
        )
