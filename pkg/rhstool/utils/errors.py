"""
Error types and exit codes for rhs-tool.

Every failure the library can signal derives from ``RhsError`` and carries
the process exit code the CLI reports for it:

- ExitCode: Enumeration of the codes the command line returns
- InstanceError: Malformed input, unknown tokens, invalid pre-solutions
- PreconditionError: A documented solver precondition does not hold
- InfeasibleError: The instance admits no solution at all
- GuardRefusal: An exponential oracle was asked to run past its size guard
- TrivialInstanceError: A reduction refuses an instance it would decide trivially
- SearchInvariantError: An internal branching invariant failed

Decision answers (yes/no) are never errors; they print normally and exit 0.
"""

from enum import IntEnum
from typing import List, Optional


class ExitCode(IntEnum):
    """
    Process exit codes of the command line.

    Shells can tell a completed run with a negative answer apart from a run
    that could not complete.
    """
    OK = 0  # Completed, including "no" answers
    INPUT_ERROR = 1  # Usage error, unreadable or malformed input
    REFUSED = 2  # Size guard exceeded or trivial instance refused


class RhsError(Exception):
    """Base class for all rhs-tool errors."""
    exit_code: ExitCode = ExitCode.INPUT_ERROR
    label: str = "ERROR"


class InstanceError(RhsError):
    """
    Invalid instance or pre-solution.

    Parsers collect every problem they find before raising; ``errors`` keeps
    the individual messages so callers can report them one per line.
    """

    def __init__(self, message: str, errors: Optional[List[str]] = None):
        super().__init__(message)
        self.errors = list(errors) if errors else [message]

    @classmethod
    def from_errors(cls, what: str, errors: List[str]) -> 'InstanceError':
        """Aggregate a list of validation errors into one exception."""
        message = f"{what} validation failed with {len(errors)} errors:\n"
        message += "\n".join(f"  - {error}" for error in errors)
        return cls(message, errors)


class PreconditionError(InstanceError):
    """A solver was called on an input outside its documented domain."""


class InfeasibleError(InstanceError):
    """No Roman hitting function exists (an edge with empty preimage is empty)."""


class GuardRefusal(RhsError):
    """
    Refusal to run an exponential procedure beyond its configured size.

    Attributes:
        size: Measured instance size
        limit: Configured guard value
    """
    exit_code = ExitCode.REFUSED
    label = "REFUSED"

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: size {size} exceeds guard {limit}")
        self.size = size
        self.limit = limit


class TrivialInstanceError(GuardRefusal):
    """A reduction refuses an instance whose answer is already known."""

    def __init__(self, message: str):
        RhsError.__init__(self, message)
        self.size = 0
        self.limit = 0


class SearchInvariantError(RhsError):
    """A branching search reached a state its case analysis excludes."""


def check_guard(what: str, size: int, limit: int) -> None:
    """Raise ``GuardRefusal`` when ``size`` exceeds ``limit``."""
    if size > limit:
        raise GuardRefusal(what, size, limit)


__all__ = [
    'ExitCode',
    'RhsError',
    'InstanceError',
    'PreconditionError',
    'InfeasibleError',
    'GuardRefusal',
    'TrivialInstanceError',
    'SearchInvariantError',
    'check_guard',
]
