# ==============================================================================
# settings.py — Application configuration and environment management
# ==============================================================================
# Purpose: Centralized settings loaded from DIETBENCH_* environment variables
# Sections: Imports, Settings Class, Global Instance
# ==============================================================================

# Third Party -------------------------------------------------------------------
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="DIETBENCH_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application metadata
    app_name: str = Field(default="dietbench", description="Application name")
    app_version: str = Field(default="0.1.0", description="Application version")

    # Performance & Limits
    threads: int = Field(default=1, ge=1, description="Upper bound on worker threads for per-location and per-household stages")

    # Methodology constants
    reference_energy_kcal: float = Field(default=2330.0, gt=0, description="Energy of the reference adult woman (kcal/day)")

    # Logging & Debugging
    log_level: str = Field(default="INFO", description="Log level")

    # Output Configuration
    output_dir: str = Field(default="outputs", description="Default directory for report files")


# Global settings instance
settings = Settings()
