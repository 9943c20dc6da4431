"""Exception hierarchy shared across the package.

Input problems (bad ids, malformed files, non-composable paths, modules that
fail their defining equations) are all subclasses of :class:`InputError` and
map to CLI exit code 2.  :class:`InvariantViolation` signals that an internal
consistency check failed on data that was supposed to be correct by
construction; it is a bug indicator, never a user error.
"""


class QuiverHomError(Exception):
    """Base class for all package errors."""


class InputError(QuiverHomError):
    """Invalid user-supplied data."""


class ParseError(InputError):
    """Malformed text input; carries position information."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class DanglingIdError(InputError):
    """A vertex or arrow id referenced but never declared."""


class CompositionError(InputError):
    """An arrow sequence that is not composable."""


class ModuleValidationError(InputError):
    """A representation that violates its algebra's defining relations."""


class InvariantViolation(QuiverHomError):
    """A supposedly-impossible internal state; indicates a bug upstream."""
