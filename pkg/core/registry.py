# core/registry.py
from typing import Dict, Any, Optional
from abc import ABC, abstractmethod
from loguru import logger


class BaseHandler(ABC):
    """Base handler interface"""

    @property
    @abstractmethod
    def handler_name(self) -> str:
        """Handler name"""
        pass

    @abstractmethod
    def handle(self, data: Dict[str, Any], context: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """Handle request"""
        pass


class HandlerRegistry:
    """Registry mapping subcommands to their inbound handlers"""

    def __init__(self):
        self._handlers: Dict[str, BaseHandler] = {}

    def register_handler(self, operation: str, handler: BaseHandler) -> None:
        """Register handler for operation"""
        self._handlers[operation] = handler
        logger.debug(f"Registered handler: {operation} -> {handler.handler_name}")

    def get_handler(self, operation: str) -> BaseHandler:
        """Get handler instance for operation"""
        if operation not in self._handlers:
            raise ValueError(f"No handler registered for operation: {operation}")
        return self._handlers[operation]


# Global registry instance
registry = HandlerRegistry()
