# tests/test_registry.py
import pytest
from loguru import logger

from config.settings import get_settings
from core.bootstrap import ApplicationBootstrap
from core.registry import HandlerRegistry


@pytest.fixture
def wired() -> HandlerRegistry:
    handlers = HandlerRegistry()
    ApplicationBootstrap(get_settings(), handlers).initialize()
    yield handlers
    logger.remove()


@pytest.mark.parametrize("operation, name", [
    ("check", "CLICheckHandler"),
    ("table", "CLITableHandler"),
    ("shaft", "CLIShaftHandler"),
    ("sweep", "CLISweepHandler"),
    ("simulate", "CLISimulateHandler"),
])
def test_bootstrap_registers_every_subcommand(wired, operation, name):
    assert wired.get_handler(operation).handler_name == name


def test_unknown_operation(wired):
    with pytest.raises(ValueError, match="frobnicate"):
        wired.get_handler("frobnicate")


def test_later_registration_replaces_earlier(wired):
    check = wired.get_handler("check")
    wired.register_handler("table", check)
    assert wired.get_handler("table") is check
