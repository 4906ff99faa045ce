"""Application configuration settings."""
from pydantic_settings import BaseSettings
from pydantic import Field


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Application
    app_name: str = Field(default="qform", alias="APP_NAME")
    app_version: str = Field(default="1.0.0", alias="APP_VERSION")
    env: str = Field(default="development", alias="ENV")
    debug: bool = Field(default=True, alias="DEBUG")
    log_level: str = Field(default="WARNING", alias="LOG_LEVEL")
    log_json: bool = Field(default=False, alias="LOG_JSON")

    # Randomised runs
    seed: int = Field(default=20240229, alias="QFORM_SEED")

    # Bounded searches (conic points, value witnesses)
    search_height_bound: int = Field(default=30, alias="QFORM_SEARCH_HEIGHT")

    # Oracle limits
    oracle_max_prime: int = Field(default=10_000, alias="ORACLE_MAX_PRIME")
    oracle_max_triples: int = Field(default=10_000_000, alias="ORACLE_MAX_TRIPLES")
    oracle_quintuple_cap: int = Field(default=1_000_000, alias="ORACLE_QUINTUPLE_CAP")
    oracle_sample_size: int = Field(default=100_000, alias="ORACLE_SAMPLE_SIZE")
    oracle_workers: int = Field(default=1, alias="ORACLE_WORKERS")

    @property
    def identity_checks_enabled(self) -> bool:
        """Runtime identity tripwires run in debug configurations only."""
        return self.debug and self.env != "production"

    class Config:
        """Pydantic config."""
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False


# Global settings instance
settings = Settings()
