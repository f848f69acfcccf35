"""
공통 유틸리티 함수
"""
import json
import logging
import sys
from typing import Any, Dict


def setup_logging(service_name: str, level: str = "INFO", *packages: str) -> logging.Logger:
    """로깅 설정

    서비스 로거와 함께 넘겨받은 패키지 로거(app, common 등)에도 같은 핸들러를 붙인다.
    출력은 stderr 로만 보낸다 (stdout 은 명령 결과 전용).
    """
    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    for name in (service_name, *packages):
        target = logging.getLogger(name)
        target.setLevel(getattr(logging, level.upper()))

        if not target.handlers:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(formatter)
            target.addHandler(handler)

    return logging.getLogger(service_name)


def dump_json(data: Any) -> str:
    """결정적 JSON 문자열 (들여쓰기 2칸, 마지막 줄바꿈 포함)"""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def create_error_response(message: str, error_code: str = "UNKNOWN_ERROR", exit_code: int = 1) -> Dict:
    """에러 응답 형식 생성 (재현성을 위해 timestamp 없음)"""
    return {
        "status": "error",
        "message": message,
        "error_code": error_code,
        "exit_code": exit_code,
    }
