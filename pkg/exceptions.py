"""Error hierarchy shared by every service.

The command line maps these onto exit codes: usage problems exit with 2,
mathematically degenerate input exits with 3.
"""

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DEGENERATE = 3


class BezoutError(Exception):
    """Base class for all library errors"""
    exit_code = EXIT_USAGE


class UsageError(BezoutError):
    """A precondition of an operation was violated by the caller"""
    exit_code = EXIT_USAGE


class UnboundVariableError(UsageError):
    def __init__(self, name, message=None):
        self.name = name
        super().__init__(message or f"variable '{name}' is not bound")


class SizeGuardError(UsageError):
    """Desk-scale guard exceeded (set BEZOUT_SIZE_GUARD=off to lift it)"""


class ConstraintViolationError(UsageError):
    pass


class ParseError(UsageError):
    """Syntax or declaration errors found while reading a system file.

    Args:
        diagnostics: list of Diagnostic, ordered by position
    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        first = self.diagnostics[0] if self.diagnostics else None
        super().__init__(str(first) if first else "parse error")


class DegenerateInputError(BezoutError):
    """Mathematically degenerate input (zero polynomial, common component, ...)"""
    exit_code = EXIT_DEGENERATE


class NotCoprimeError(DegenerateInputError):
    pass


class CommonComponentError(DegenerateInputError):
    pass


class DegenerateClassError(DegenerateInputError):
    pass


class NoKernelError(DegenerateInputError):
    pass


class BranchFailureError(BezoutError):
    exit_code = EXIT_DEGENERATE
