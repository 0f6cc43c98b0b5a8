"""
Pydantic Settings - Configuración centralizada y validada con variables de entorno.
"""
from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import List


class Settings(BaseSettings):
    """Configuración de la aplicación con validación Pydantic."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # Evaluación numérica
    ZETA_TOLERANCE: float = 1e-12
    COMPARISON_MARGIN: float = 1e-9
    LAMBDA_THEOREM_MIN: float = 1.8

    # Cruces de forma
    CROSSOVER_LAMBDA_MAX: float = 20.0
    CROSSOVER_TOLERANCE: float = 1e-6
    CROSSOVER_GRID_POINTS: int = 400

    # Oráculo y reducción
    ENUMERATION_MAX_AREA: int = 12
    ITERATION_CAP_FACTOR: int = 16
    DISCONNECTED_SAMPLES: int = 1000
    DEFAULT_SEED: int = 0
    DIRECT_WINDOW: int = 10_000
    PREFIX_TABLE_MAX: int = 1 << 16

    # Barridos
    WORKERS: int = 1

    # Salida
    CSV_SCHEMA_VERSION: int = 1
    FLOAT_DIGITS: int = 12

    # API
    CORS_ORIGINS: List[str] = ["http://localhost:8001"]

    # Entorno
    ENVIRONMENT: str = "development"
    LOG_LEVEL: str = "INFO"
    LOG_JSON: bool = True

    @field_validator("ZETA_TOLERANCE", "COMPARISON_MARGIN")
    @classmethod
    def _positive(cls, value: float) -> float:
        if value <= 0:
            raise ValueError("debe ser positivo")
        return value

    @field_validator("WORKERS")
    @classmethod
    def _at_least_one(cls, value: int) -> int:
        return max(1, value)


# Instancia global de configuración
settings = Settings()
