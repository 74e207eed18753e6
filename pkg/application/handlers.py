# application/handlers.py
import time
from typing import Any, Callable, Dict

from loguru import logger

from .exit_codes import error_exit_code, EXIT_SOFTWARE
from core.exceptions import DomainException, ApplicationException, InfrastructureException


class TimedCommandHandler:
    """Runs a use case, times it and folds failures into a result dict"""

    def run(self, operation: str, execute: Callable[[], Any], exit_code: Callable[[Any], int]) -> Dict[str, Any]:
        start_time = time.time()

        try:
            logger.info(f"Handling {operation} command")

            result = execute()

            execution_time = (time.time() - start_time) * 1000
            code = exit_code(result)
            logger.info(f"{operation} finished with exit code {code} in {execution_time:.2f}ms")

            return {
                "success": True,
                "data": result,
                "exit_code": code,
                "execution_time_ms": execution_time
            }

        except (DomainException, ApplicationException, InfrastructureException) as e:
            execution_time = (time.time() - start_time) * 1000
            logger.warning(f"{operation} failed: {e.message}")

            return {
                "success": False,
                "error_code": e.error_code,
                "message": e.message,
                "exit_code": error_exit_code(e),
                "execution_time_ms": execution_time
            }

        except Exception as e:
            execution_time = (time.time() - start_time) * 1000
            logger.exception(f"Unexpected error in {operation}: {e}")

            return {
                "success": False,
                "error_code": "INTERNAL_ERROR",
                "message": "An unexpected error occurred",
                "exit_code": EXIT_SOFTWARE,
                "execution_time_ms": execution_time
            }
