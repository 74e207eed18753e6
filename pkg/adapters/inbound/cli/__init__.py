# adapters/inbound/cli/__init__.py
from .parser import create_parser
from .handlers import (
    CLICheckHandler,
    CLITableHandler,
    CLIShaftHandler,
    CLISweepHandler,
    CLISimulateHandler,
)
from .middleware import InvocationLoggingMiddleware

__all__ = [
    "create_parser",
    "CLICheckHandler",
    "CLITableHandler",
    "CLIShaftHandler",
    "CLISweepHandler",
    "CLISimulateHandler",
    "InvocationLoggingMiddleware",
]
