import os

ENV_VAR = "INVHILB_MAX_ENUM"


class EnumerationLimitError(ValueError):
    """Raised when a brute-force enumeration would exceed its size guard."""


def enum_limit(default: int) -> int:
    """The size guard, overridable through ``INVHILB_MAX_ENUM``."""
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None


def check_limit(count: int, default: int, what: str) -> None:
    limit = enum_limit(default)
    if count > limit:
        raise EnumerationLimitError(
            f"{what}: {count} exceeds the enumeration guard {limit} (set {ENV_VAR} to override)"
        )
