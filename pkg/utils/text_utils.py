"""Parsing of the comma-separated command-line values."""

from fractions import Fraction
from typing import Dict, List, Sequence

from errors import ConfigurationError


def parse_int_list(raw: str) -> List[int]:
    """Parse "1,0,2" into [1, 0, 2].

    Example:
        >>> parse_int_list(" 1, 1 ")
        [1, 1]
    """
    parts = [part.strip() for part in raw.split(",")]
    try:
        return [int(part) for part in parts if part]
    except ValueError as e:
        raise ConfigurationError(
            f"expected comma-separated integers, got {raw!r}"
        ) from e


def parse_named_ints(raw: str, names: Sequence[str]) -> Dict[str, int]:
    """Parse either "i=1,j=0" or a positional "1,0" against ``names``."""
    if "=" not in raw:
        values = parse_int_list(raw)
        if len(values) != len(names):
            raise ConfigurationError(
                f"expected {len(names)} values for vertices {list(names)}, "
                f"got {len(values)}"
            )
        return dict(zip(names, values))

    result: Dict[str, int] = {}
    for part in raw.split(","):
        if not part.strip():
            continue
        key, _, value = part.partition("=")
        try:
            result[key.strip()] = int(value)
        except ValueError as e:
            raise ConfigurationError(f"bad entry {part.strip()!r} in {raw!r}") from e
    return result


def parse_slope(raw: str) -> Fraction:
    """Parse "a/b" or an integer into an exact slope."""
    try:
        return Fraction(raw.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigurationError(f"bad slope {raw!r}") from e


def parse_suites(raw: str, known: Sequence[str]) -> List[str]:
    """Parse "hn,oracle" or "all" into suite names in canonical order."""
    requested = {part.strip().lower() for part in raw.split(",") if part.strip()}
    if "all" in requested:
        return list(known)
    unknown = sorted(requested - set(known))
    if unknown:
        raise ConfigurationError(
            f"unknown suites {unknown}; choose from {list(known)} or all"
        )
    return [name for name in known if name in requested]
