"""Exception types raised across the package."""

from __future__ import annotations


class IndOrderError(Exception):
    """Base class for all library errors."""


class InvalidFamilyParameters(IndOrderError, ValueError):
    pass


class VertexOutOfRange(IndOrderError, IndexError):
    pass


class NotAnEdge(IndOrderError, ValueError):
    pass


class PreconditionViolated(IndOrderError, ValueError):
    """Raised by the star operation; ``clause`` names the failed condition."""

    def __init__(self, clause: str, message: str = ""):
        self.clause = clause
        super().__init__(message or clause)


class NotAForest(IndOrderError, ValueError):
    pass


class NotATree(IndOrderError, ValueError):
    pass


class NotStarlike(IndOrderError, ValueError):
    """``kind`` is ``"path"`` or ``"multiple"``."""

    def __init__(self, kind: str):
        self.kind = kind
        super().__init__(f"tree is not starlike ({kind})")


class TooLarge(IndOrderError, ValueError):
    pass


class ZeroPolynomial(IndOrderError, ValueError):
    pass


class NoRealRoot(IndOrderError, ValueError):
    pass


class LengthMismatch(IndOrderError, ValueError):
    pass


class NotConvertible(IndOrderError, ValueError):
    """X cannot be converted to Y by unit transfers.

    ``prefix_index`` is the 1-indexed prefix where ``sum(y[:j]) < sum(x[:j])``,
    or ``None`` when the failure is a total mismatch.
    """

    def __init__(self, reason: str, prefix_index: int | None = None):
        self.reason = reason
        self.prefix_index = prefix_index
        super().__init__(reason)


class ParseError(IndOrderError, ValueError):
    def __init__(self, text: str, position: int, message: str):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")
