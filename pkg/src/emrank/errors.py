"""Error types shared across the workbench.

Two families matter to callers: ``UsageError`` (the request itself is
malformed: bad indices, empty selections, too few alternatives) and
``DataError`` (the inputs are well-formed but the data is wrong: unknown
ids, labels outside a scale, duplicate ids). The CLI maps them to exit
codes 2 and 1 respectively; the HTTP layer maps codes to 4xx statuses.
"""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class; carries a machine-readable code and an optional path."""

    default_code = "ERROR"

    def __init__(self, message: str, *, code: str | None = None, path: str | None = None):
        super().__init__(message)
        self.message = message
        self.code = code or self.default_code
        self.path = path

    def __str__(self) -> str:
        if self.path:
            return f"{self.code}: {self.message} (at {self.path})"
        return f"{self.code}: {self.message}"


class UsageError(WorkbenchError):
    """The caller asked for something structurally impossible."""

    default_code = "USAGE"


class DataError(WorkbenchError):
    """The data violates a contract (unknown id, bad label, gap, ...)."""

    default_code = "DATA"


class ConfigurationError(DataError):
    """A criterion or preference function is configured inconsistently."""

    default_code = "BAD_CONFIG"
