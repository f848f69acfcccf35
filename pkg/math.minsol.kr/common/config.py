"""
공통 설정 관리
"""
from pydantic_settings import BaseSettings, SettingsConfigDict


class BaseServiceConfig(BaseSettings):
    """서비스 기본 설정"""
    service_name: str
    service_version: str = "1.0.0"
    debug: bool = False
    log_level: str = "WARNING"

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )
