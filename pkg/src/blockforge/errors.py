"""Exception types shared across the package.

Two failure families are kept apart on purpose: bad input that a caller
can fix (DomainError) and a broken internal cross-check that indicates a
bug in this package or an arithmetic inconsistency (InternalCheckError).
The command line maps DomainError to exit code 2; an InternalCheckError
is never caught and crashes loudly.
"""


class DomainError(ValueError):
    """The caller handed us something outside an operation's domain."""


class GroupFileError(DomainError):
    """A group file failed to parse.  Carries a 1-based position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class InternalCheckError(RuntimeError):
    """A redundant internal verification failed; this is a bug, not bad input."""
