# adapters/inbound/cli/handlers.py
from typing import Any, Dict, Optional, Type

from pydantic import BaseModel, ValidationError as PydanticValidationError

from core.registry import BaseHandler
from core.exceptions import CommandValidationError
from application.exit_codes import EXIT_USAGE
from application.stability.handlers import StabilityCommandHandler
from application.stability.commands import CheckPolynomialCommand, BuildTableCommand
from application.shaft.handlers import ShaftCommandHandler
from application.shaft.commands import AnalyzeShaftCommand, SweepGainsCommand, SimulateCommand
from .serializers import CheckResponse, TableResponse, ShaftResponse, SweepResponse, SimulationResponse


class CLIHandler(BaseHandler):
    """Turns parsed arguments into a command, runs it and serializes the outcome"""

    command_class: Type[BaseModel]
    response_class: Type[BaseModel]

    @property
    def handler_name(self) -> str:
        return type(self).__name__

    def _dispatch(self, command: BaseModel) -> Dict[str, Any]:
        raise NotImplementedError

    def handle(self, data: Dict[str, Any], context: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        run_id = context.get("run_id") if context else None

        try:
            command = self.command_class(**data, run_id=run_id)
        except PydanticValidationError as e:
            error = CommandValidationError({
                ".".join(str(part) for part in err["loc"]): err["msg"] for err in e.errors()
            })
            return {
                "success": False,
                "error_code": error.error_code,
                "message": error.message,
                "exit_code": EXIT_USAGE,
            }

        result = self._dispatch(command)
        if result["success"]:
            result["data"] = self.response_class.from_result(result["data"])
        return result


class CLICheckHandler(CLIHandler):
    command_class = CheckPolynomialCommand
    response_class = CheckResponse

    def __init__(self, stability_handler: StabilityCommandHandler):
        self.stability_handler = stability_handler

    def _dispatch(self, command: CheckPolynomialCommand) -> Dict[str, Any]:
        return self.stability_handler.handle_check(command)


class CLITableHandler(CLIHandler):
    command_class = BuildTableCommand
    response_class = TableResponse

    def __init__(self, stability_handler: StabilityCommandHandler):
        self.stability_handler = stability_handler

    def _dispatch(self, command: BuildTableCommand) -> Dict[str, Any]:
        return self.stability_handler.handle_table(command)


class CLIShaftHandler(CLIHandler):
    command_class = AnalyzeShaftCommand
    response_class = ShaftResponse

    def __init__(self, shaft_handler: ShaftCommandHandler):
        self.shaft_handler = shaft_handler

    def _dispatch(self, command: AnalyzeShaftCommand) -> Dict[str, Any]:
        return self.shaft_handler.handle_shaft(command)


class CLISweepHandler(CLIHandler):
    command_class = SweepGainsCommand
    response_class = SweepResponse

    def __init__(self, shaft_handler: ShaftCommandHandler):
        self.shaft_handler = shaft_handler

    def _dispatch(self, command: SweepGainsCommand) -> Dict[str, Any]:
        return self.shaft_handler.handle_sweep(command)


class CLISimulateHandler(CLIHandler):
    command_class = SimulateCommand
    response_class = SimulationResponse

    def __init__(self, shaft_handler: ShaftCommandHandler):
        self.shaft_handler = shaft_handler

    def _dispatch(self, command: SimulateCommand) -> Dict[str, Any]:
        return self.shaft_handler.handle_simulate(command)
