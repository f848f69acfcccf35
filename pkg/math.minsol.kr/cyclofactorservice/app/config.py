"""
Cyclofactor Service 설정
"""
from functools import lru_cache

from pydantic import Field
from pydantic_settings import SettingsConfigDict

from common.config import BaseServiceConfig


class CyclofactorServiceConfig(BaseServiceConfig):
    """x^n - 1 인수분해 서비스 설정"""
    service_name: str = "cyclofactorservice"
    service_version: str = "1.0.0"
    field_bound: int = Field(2 ** 63, ge=2, description="구성 가능한 체 크기 p^d 의 상한")
    sweep_workers: int = Field(1, ge=1, description="sweep 명령의 기본 프로세스 수")

    model_config = SettingsConfigDict(
        env_prefix="CYCLOFACTOR_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )


@lru_cache(maxsize=1)
def get_config() -> CyclofactorServiceConfig:
    """설정 싱글톤 (환경 변경 후에는 get_config.cache_clear())"""
    return CyclofactorServiceConfig()
