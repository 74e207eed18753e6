# application/shaft/handlers.py
from typing import Dict, Any

from .use_cases import AnalyzeShaftUseCase, SweepGainsUseCase, SimulateClosedLoopUseCase
from .commands import AnalyzeShaftCommand, SweepGainsCommand, SimulateCommand
from application.handlers import TimedCommandHandler
from application.exit_codes import verdict_exit_code, EXIT_SUCCESS


class ShaftCommandHandler(TimedCommandHandler):
    """Handler for shaft, sweep and simulate commands"""

    def __init__(
        self,
        analyze_use_case: AnalyzeShaftUseCase,
        sweep_use_case: SweepGainsUseCase,
        simulate_use_case: SimulateClosedLoopUseCase
    ):
        self.analyze_use_case = analyze_use_case
        self.sweep_use_case = sweep_use_case
        self.simulate_use_case = simulate_use_case

    def handle_shaft(self, command: AnalyzeShaftCommand) -> Dict[str, Any]:
        return self.run(
            "shaft",
            lambda: self.analyze_use_case.execute(command),
            lambda result: verdict_exit_code(result.verdict),
        )

    def handle_sweep(self, command: SweepGainsCommand) -> Dict[str, Any]:
        return self.run("sweep", lambda: self.sweep_use_case.execute(command), lambda _: EXIT_SUCCESS)

    def handle_simulate(self, command: SimulateCommand) -> Dict[str, Any]:
        return self.run("simulate", lambda: self.simulate_use_case.execute(command), lambda _: EXIT_SUCCESS)
