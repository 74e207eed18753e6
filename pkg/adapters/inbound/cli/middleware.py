# adapters/inbound/cli/middleware.py
import time
import uuid
from typing import Any, Dict, Optional

from loguru import logger

from core.registry import BaseHandler


class InvocationLoggingMiddleware(BaseHandler):
    """Tags one CLI invocation with a run id and logs its timing"""

    def __init__(self, operation: str, inner: BaseHandler):
        self.operation = operation
        self.inner = inner

    @property
    def handler_name(self) -> str:
        return self.inner.handler_name

    def handle(self, data: Dict[str, Any], context: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        run_id = str(uuid.uuid4())[:8]
        context = {**(context or {}), "run_id": run_id}

        start_time = time.time()
        with logger.contextualize(run_id=run_id):
            logger.info(f"[{run_id}] {self.operation} - Started")
            try:
                result = self.inner.handle(data, context)
            except Exception as e:
                duration = time.time() - start_time
                logger.error(f"[{run_id}] {self.operation} - Failed in {duration:.3f}s: {e}")
                raise

            duration = time.time() - start_time
            logger.info(
                f"[{run_id}] {self.operation} - Completed with exit code {result.get('exit_code')} in {duration:.3f}s"
            )
        return result
