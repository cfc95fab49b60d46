"""Error taxonomy shared by every module, with stable CLI exit codes."""


class NtqsError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class DomainError(NtqsError, ValueError):
    """Arguments outside an operation's mathematical domain."""

    exit_code = 2


class EmptyStateError(DomainError):
    """A state construction produced an empty support."""


class CapacityError(NtqsError):
    """Request exceeds a configured capacity bound (sieve limit, matrix dim, ...)."""

    exit_code = 3


class ConvergenceError(NtqsError):
    """An iterative solver failed to converge within its budget."""

    exit_code = 4


class ExtractionError(NtqsError):
    """No consistent integer solution found when inverting peak equations."""

    exit_code = 5
