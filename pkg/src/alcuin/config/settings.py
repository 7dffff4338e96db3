"""
Settings and configuration management using Pydantic.

Alcuin is configured from the command line only: the settings object reads
constructor arguments and nothing else (no environment, no .env file). CLI
flags override individual values per invocation.
"""

import os

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class Settings(BaseSettings):
    """Alcuin defaults."""

    model_config = SettingsConfigDict(
        case_sensitive=False,
        extra="ignore",
        validate_default=True,
    )

    # Application
    log_level: str = Field(
        default="WARNING", description="Logging level: DEBUG, INFO, WARNING, ERROR"
    )

    # Exact arithmetic
    int_bits: int = Field(
        default=128, ge=64, description="Signed width emulated by checked integers"
    )

    # Verification harness
    verify_workers: int = Field(
        default_factory=lambda: os.cpu_count() or 1,
        ge=1,
        description="Worker processes for verify sweeps (default: CPU count)",
    )
    geometry_sweep_limit: int = Field(
        default=2000, ge=3, description="Largest p for the max-area argmax sweep"
    )
    range_lemma_limit: int = Field(
        default=300, ge=3, description="Largest p for the fixed-base range lemma sweep"
    )
    odd_shift_limit: int = Field(
        default=999, ge=1, description="Largest odd p for the T(p) = T(p+3) check"
    )

    # Benchmarks
    bench_reps: int = Field(default=1, ge=1, description="Benchmark repetitions")

    # Rendering
    area_decimal_places: int = Field(
        default=6, ge=0, le=50, description="Fractional digits when printing E"
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)


# Global settings instance
settings = Settings()
