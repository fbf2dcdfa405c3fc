"""Exception types shared across the engine and mapped to API error codes."""
from __future__ import annotations


class NewslensError(Exception):
    """Base class for all engine errors."""


class ValidationError(NewslensError):
    """A request or argument violates a documented precondition.

    ``field`` names the offending input when one can be singled out.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class NotFoundError(NewslensError):
    """A referenced article or resource does not exist."""


class IngestError(NewslensError):
    """A fatal corpus-ingest problem (bad header, duplicate ids, ...)."""
