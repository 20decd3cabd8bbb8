"""Exception types shared across the package.

The CLI maps these onto exit codes: parse/IO problems exit 2, contract
violations (mismatched degrees, failed preconditions) exit 3, unresolved
orbit selectors exit 4.
"""


class SgqError(Exception):
    """Base class for all package errors."""


class ParseError(SgqError):
    """A group/graph/partition/cycle file failed to parse."""

    def __init__(self, message, path=None, line=None):
        if path is not None and line is not None:
            message = f"{path}:{line}: {message}"
        elif path is not None:
            message = f"{path}: {message}"
        super().__init__(message)
        self.path = path
        self.line = line


class DegreeMismatchError(SgqError):
    """Group degree does not match the acted-on structure."""


class DomainMismatchError(SgqError):
    """An object lies outside the action domain it was used with."""


class PreconditionError(SgqError):
    """A named operation precondition failed."""

    def __init__(self, name, message=None):
        super().__init__(message or name)
        self.name = name


class NotSymmetricError(SgqError):
    """Input claimed to be symmetric has a non-constant local invariant."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GraphSizeError(SgqError):
    """Graph exceeds a configured size bound."""


class SelectorError(SgqError):
    """An orbit selector did not resolve to an orbit."""
