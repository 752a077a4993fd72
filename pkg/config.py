"""Application configuration using Pydantic Settings."""

from pydantic_settings import BaseSettings, SettingsConfigDict

OUTPUT_FORMATS = ("text", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """Defaults for every command, loaded from environment variables or .env."""

    # Truncation
    default_order: int = 6
    # Oracle enumeration grows like p^(sum d_s d_t), so it gets its own cap
    oracle_order: int = 3

    # Enumeration budgets
    budget_reps: int = 1_000_000
    budget_subspaces: int = 10_000

    # Randomized property checks
    seed: int = 0
    poisson_samples: int = 5

    # Output
    output_format: str = "text"

    # Logging
    log_level: str = "INFO"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    def __init__(self, **kwargs):
        """Initialize settings and validate ranges."""
        super().__init__(**kwargs)
        self._validate()

    def _validate(self) -> None:
        """Collect every invalid field into one readable error."""
        problems = []
        if self.default_order < 0:
            problems.append(f"DEFAULT_ORDER must be >= 0, got {self.default_order}")
        if self.oracle_order < 0:
            problems.append(f"ORACLE_ORDER must be >= 0, got {self.oracle_order}")
        if self.budget_reps < 1:
            problems.append(f"BUDGET_REPS must be >= 1, got {self.budget_reps}")
        if self.budget_subspaces < 1:
            problems.append(
                f"BUDGET_SUBSPACES must be >= 1, got {self.budget_subspaces}"
            )
        if self.poisson_samples < 0:
            problems.append(f"POISSON_SAMPLES must be >= 0, got {self.poisson_samples}")
        if self.output_format not in OUTPUT_FORMATS:
            problems.append(
                f"OUTPUT_FORMAT must be one of {OUTPUT_FORMATS}, "
                f"got {self.output_format!r}"
            )
        if self.log_level.upper() not in LOG_LEVELS:
            problems.append(
                f"LOG_LEVEL must be one of {LOG_LEVELS}, got {self.log_level!r}"
            )

        if problems:
            raise ValueError("Invalid configuration:\n" + "\n".join(problems))


def get_settings() -> Settings:
    """Get application settings instance.

    Returns:
        Settings instance loaded from environment

    Raises:
        ValueError: If a configured value is out of range
    """
    return Settings()
