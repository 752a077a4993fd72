"""Exit codes and the mapping from exceptions to them."""

from typing import Any

import click
from pydantic import ValidationError

from errors import BudgetExceeded, ConfigurationError, QuiverError, QuiverWallcrossError
from utils.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3


def _validation_message(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        field = ".".join(str(loc) for loc in item["loc"]) or "input"
        parts.append(f"{field}: {item['msg']}")
    return "; ".join(parts)


def exit_code_for(error: BaseException) -> int:
    """Exit status for an exception escaping a command."""
    config_errors = (ConfigurationError, ValidationError, QuiverError, ValueError)
    if isinstance(error, config_errors):
        return EXIT_CONFIG
    if isinstance(error, BudgetExceeded):
        return EXIT_BUDGET
    return EXIT_FAILURES


def describe(error: BaseException) -> str:
    if isinstance(error, ValidationError):
        return f"configuration error: {_validation_message(error)}"
    if isinstance(error, BudgetExceeded):
        return f"budget exceeded: {error}"
    if isinstance(error, (ConfigurationError, QuiverError, ValueError)):
        return f"configuration error: {error}"
    return f"{type(error).__name__}: {error}"


class ReportingGroup(click.Group):
    """Click group that turns library exceptions into exit codes."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except (click.exceptions.Exit, click.ClickException, click.Abort):
            raise
        except (QuiverWallcrossError, ValidationError, ValueError) as e:
            click.echo(describe(e), err=True)
            ctx.exit(exit_code_for(e))
        except Exception as e:
            logger.exception("Unexpected error")
            click.echo(describe(e), err=True)
            ctx.exit(EXIT_FAILURES)
