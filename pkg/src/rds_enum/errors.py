"""Exception hierarchy shared by every module."""
from __future__ import annotations


class RdsError(Exception):
    """Base class for all errors raised by :mod:`rds_enum`."""


class InvalidOrder(RdsError, ValueError):
    """Graph order outside the range an operation accepts."""


class InvalidVertex(RdsError, ValueError):
    """A vertex label outside ``1..n``."""


class OrderTooLarge(RdsError):
    """Brute-force enumeration refused above the configured order limit."""


class InvalidRange(RdsError, ValueError):
    """Series expansion requested for an unsupported range."""


class NotExpanded(RdsError, KeyError):
    """Coefficient requested outside the expanded part of a series table."""


class BudgetExceeded(RdsError):
    """Materialising a family would exceed the set-count budget."""


class ConstructionError(RdsError):
    """A source set matched zero or several extension rules during a checked build."""
