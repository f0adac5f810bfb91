"""Exception hierarchy shared by the whole package."""

from __future__ import annotations


class RibbonError(Exception):
    """Base class for all package errors."""


class StructuralError(RibbonError, ValueError):
    """A ribbon graph or arrow presentation violates its structural invariants."""


class InputError(RibbonError, ValueError):
    """An argument is outside the accepted domain (unknown edge id, bad bounds, ...)."""


class DomainError(RibbonError, ValueError):
    """The operation is undefined for this input (e.g. homfly of a non-orientable graph)."""


class EvaluationError(RibbonError, ArithmeticError):
    """Exact evaluation failed, typically a division by zero."""


class ParseError(RibbonError, ValueError):
    """Syntax or semantic error in one of the text formats.

    ``line`` is 1-based for the line-oriented formats, ``position`` is a
    0-based character offset for the polynomial grammar.
    """

    def __init__(self, message: str, *, line: int | None = None, position: int | None = None):
        self.line = line
        self.position = position
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
