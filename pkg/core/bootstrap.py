# core/bootstrap.py
"""Application bootstrap and initialization"""
import sys
from typing import Optional

from loguru import logger

from config.settings import AppSettings, get_settings
from .registry import registry, HandlerRegistry


class ApplicationBootstrap:
    """Configures logging and wires use cases, adapters and CLI handlers"""

    def __init__(self, settings: Optional[AppSettings] = None, handler_registry: HandlerRegistry = registry):
        self.settings = settings or get_settings()
        self.registry = handler_registry
        self._initialized = False

    def initialize(self) -> None:
        """Initialize the application"""
        if self._initialized:
            return

        self._setup_logging()
        self._register_handlers()

        self._initialized = True
        logger.debug("Application initialized")

    def _setup_logging(self) -> None:
        """stderr sink (stdout carries results) plus an optional rotating file"""
        logger.remove()

        logger.add(
            sink=sys.stderr,
            level=self.settings.log_level.upper(),
            format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
                   "<level>{level: <8}</level> | "
                   "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - "
                   "<level>{message}</level>",
        )

        if not self.settings.debug and self.settings.log_file:
            logger.add(
                self.settings.log_file,
                rotation="10 MB",
                retention="7 days",
                level=self.settings.log_level.upper(),
                format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}"
            )

        logger.debug(f"Logging configured (level: {self.settings.log_level})")

    def _register_handlers(self) -> None:
        """Build the object graph and register one handler per subcommand"""
        from adapters.inbound.cli import (
            CLICheckHandler,
            CLITableHandler,
            CLIShaftHandler,
            CLISweepHandler,
            CLISimulateHandler,
            InvocationLoggingMiddleware,
        )
        from adapters.outbound.files import (
            PandasGridWriter,
            PandasTrajectoryWriter,
            MatplotlibHeatmapRenderer,
        )
        from application.stability.handlers import StabilityCommandHandler
        from application.stability.use_cases import CheckPolynomialUseCase, BuildTableUseCase
        from application.shaft.handlers import ShaftCommandHandler
        from application.shaft.use_cases import (
            AnalyzeShaftUseCase,
            SweepGainsUseCase,
            SimulateClosedLoopUseCase,
            oracle_from,
        )

        settings = self.settings
        oracle = oracle_from(settings.oracle)

        stability_handler = StabilityCommandHandler(
            CheckPolynomialUseCase(settings.stability),
            BuildTableUseCase(settings.stability),
        )
        shaft_handler = ShaftCommandHandler(
            AnalyzeShaftUseCase(oracle, settings.stability, settings.oracle),
            SweepGainsUseCase(
                oracle, PandasGridWriter(), MatplotlibHeatmapRenderer(), settings.sweep, settings.stability
            ),
            SimulateClosedLoopUseCase(PandasTrajectoryWriter(), settings.simulation),
        )

        handlers = {
            "check": CLICheckHandler(stability_handler),
            "table": CLITableHandler(stability_handler),
            "shaft": CLIShaftHandler(shaft_handler),
            "sweep": CLISweepHandler(shaft_handler),
            "simulate": CLISimulateHandler(shaft_handler),
        }
        for operation, handler in handlers.items():
            self.registry.register_handler(operation, InvocationLoggingMiddleware(operation, handler))
