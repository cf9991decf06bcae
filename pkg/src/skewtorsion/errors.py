"""Exception types raised by the engine."""

from __future__ import annotations


class GeometryError(Exception):
    """Base class for every error raised by skewtorsion."""


class DimensionMismatch(GeometryError, ValueError):
    """Operands live on frames of different dimension."""


class DegreeMismatch(GeometryError, ValueError):
    """Operands have incompatible form degrees."""


class InvalidFrame(GeometryError, ValueError):
    """Structure equations violate d^2 = 0 (Jacobi identity)."""

    def __init__(self, message: str, triple: tuple[int, int, int] | None = None):
        super().__init__(message)
        self.triple = triple


class NotAdmissible(GeometryError):
    """A structure fails a hypothesis needed for the requested construction.

    ``condition`` names the first violated condition, e.g. ``"cycon.psi_plus"``.
    """

    def __init__(self, condition: str, message: str = ""):
        super().__init__(f"{condition}: {message}" if message else condition)
        self.condition = condition


class UnsupportedOperation(GeometryError):
    """The backend lacks the data needed (e.g. a model space without d-data)."""


class ConsistencyError(GeometryError):
    """Internal cross-check between two routes failed."""


class FrameSyntaxError(GeometryError, ValueError):
    """Malformed frame-file or form text."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
