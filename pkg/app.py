"""Command-line entry point."""

import sys
from typing import List, Optional

import click

from cli.commands import cli
from cli.errors import EXIT_CONFIG
from config import Settings, get_settings


def create_app(settings: Optional[Settings] = None) -> click.Group:
    """Bind settings to the command group and return it.

    The group applies the log level itself, so a ``--log-level`` flag
    overrides the bound settings.

    Args:
        settings: Optional settings instance (for testing). If None, loads
            from the environment.

    Returns:
        The click group; an ``obj`` passed at invocation takes precedence
    """
    if settings is None:
        settings = get_settings()
    cli.context_settings = {**cli.context_settings, "obj": settings}
    return cli


def main(argv: Optional[List[str]] = None) -> None:
    try:
        settings = get_settings()
    except ValueError as e:
        click.echo(f"configuration error: {e}", err=True)
        sys.exit(EXIT_CONFIG)
    create_app(settings).main(args=argv, prog_name="quiver-wallcross")


if __name__ == "__main__":
    main()
