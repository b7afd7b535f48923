"""
IG-ODD - Configuration Settings
"""
from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache

from app.schemas import FormatEnum


class Settings(BaseSettings):
    # App
    app_name: str = "IG-ODD"
    app_version: str = "1.0.0"
    log_level: str = "WARNING"

    # Límites de enumeración (grafo de momentos y oráculo)
    max_vertices: int = 20000

    # Barrido de verificación
    jobs: int = 1

    # Salida
    default_format: FormatEnum = FormatEnum.text

    model_config = SettingsConfigDict(
        env_prefix="IGODD_",
        env_file=".env",
        env_file_encoding="utf-8",
    )


@lru_cache()
def get_settings() -> Settings:
    return Settings()
