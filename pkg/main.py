# main.py
import sys
from typing import List, Optional

from loguru import logger

from config.settings import get_settings
from core.bootstrap import ApplicationBootstrap
from core.exceptions import CommandValidationError
from core.registry import HandlerRegistry
from adapters.inbound.cli import create_parser
from application.exit_codes import EXIT_USAGE, EXIT_SOFTWARE


GLOBAL_FLAGS = ("command", "log_level", "environment")


class Application:
    """Main application orchestrator: parse, bootstrap, dispatch, print"""

    def __init__(self):
        self.parser = create_parser()
        self.registry = HandlerRegistry()

    def run(self, argv: Optional[List[str]] = None) -> int:
        try:
            args = self.parser.parse_args(argv)
        except CommandValidationError as e:
            self.parser.print_usage(sys.stderr)
            print(f"{self.parser.prog}: error: {e.errors.get('usage', e.message)}", file=sys.stderr)
            return EXIT_USAGE
        except SystemExit as e:
            # --help
            return e.code if isinstance(e.code, int) else 0

        settings = get_settings(environment=args.environment, log_level=args.log_level)
        ApplicationBootstrap(settings, self.registry).initialize()

        data = {k: v for k, v in vars(args).items() if k not in GLOBAL_FLAGS and v is not None}
        handler = self.registry.get_handler(args.command)

        try:
            result = handler.handle(data)
        except Exception as e:
            logger.exception(f"Unhandled failure in {args.command}: {e}")
            return EXIT_SOFTWARE

        if result["success"]:
            print(result["data"].model_dump_json(indent=2))
        else:
            print(f"{self.parser.prog}: {result['error_code']}: {result['message']}", file=sys.stderr)
        return result["exit_code"]


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    return Application().run(argv)


if __name__ == "__main__":
    sys.exit(main())
