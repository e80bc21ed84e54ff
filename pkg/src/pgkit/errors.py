"""Exception hierarchy shared by all pgkit modules."""

from __future__ import annotations

import os


class PgkitError(Exception):
    """Base class for every error raised by pgkit."""


class GraphError(PgkitError, ValueError):
    """Malformed graph input or an operation applied outside its domain."""


class InvalidEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class UnknownVertex(GraphError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class VertexCollision(GraphError):
    pass


class NotASubset(GraphError):
    pass


class PartialColoring(GraphError):
    pass


class PartialMap(GraphError):
    pass


class ZeroMultiplicity(GraphError):
    pass


class ImproperInput(GraphError):
    pass


class SizeLimitError(PgkitError):
    """Requested computation exceeds an exhaustive-search size guard."""

    def __init__(self, what: str, size: int, limit: int) -> None:
        super().__init__(f"{what}: size {size} exceeds limit {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class InvariantViolation(PgkitError, AssertionError):
    """An internal mathematical invariant failed; indicates a bug or bad precondition."""


# Default guards. Subset-enumeration guards honour PG_SIZE_GUARD.
POWERSET_LIMIT = 25
HOLE_SEARCH_LIMIT = 12
ISO_LIMIT = 10
REPLICATION_LIMIT = 7
ENUMERATION_LIMIT = 7


def subset_guard(default: int) -> int:
    raw = os.environ.get("PG_SIZE_GUARD")
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"PG_SIZE_GUARD must be an integer, got {raw!r}") from None


def check_size(what: str, size: int, limit: int) -> None:
    if size > limit:
        raise SizeLimitError(what, size, limit)
