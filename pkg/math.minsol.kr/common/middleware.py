"""
공통 미들웨어
명령 디스패치 앞뒤로 요청/응답 로그와 처리 시간을 남긴다.
"""
import time
import logging
from typing import Any, Callable

logger = logging.getLogger(__name__)


class LoggingMiddleware:
    """명령 실행 로깅 미들웨어"""

    def __init__(self, handler: Callable[[Any], Any]):
        self.handler = handler

    def dispatch(self, job: Any) -> Any:
        start_time = time.perf_counter()

        # 요청 로깅
        logger.info(f"Request: {job.command.value} {job.describe()}")

        result = self.handler(job)

        # 응답 시간 계산
        process_time = time.perf_counter() - start_time

        logger.info(
            f"Response: {job.command.value} - "
            f"Exit: {result.exit_code} - Time: {process_time:.3f}s"
        )

        return result
