"""
    Exceptions raised by qsympairs, each tied to a command line exit code.
"""
from qsympairs.constants import ExitCode


class QSymPairsError(Exception):
    exit_code = ExitCode.INVARIANT


class ValidationError(QSymPairsError, ValueError):
    """ Invalid Cartan data, involution data, parameters or descriptors. """
    exit_code = ExitCode.VALIDATION


class ArgumentError(ValidationError):
    """ An operation was called outside of its precondition. """


class NotHomogeneous(ArgumentError):
    """ An element mixes several weights where a single weight is needed. """


class ParseError(ValidationError):
    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at column {position + 1})"
        super().__init__(message)

    def pointer(self):
        """ Returns the offending source line with a caret under the error.

        Returns:
            str: Two lines of text, or the empty string without a position.
        """
        if self.text is None or self.position is None:
            return ""
        return f"{self.text}\n{' ' * self.position}^"


class PoleError(QSymPairsError, ArithmeticError):
    """ A coefficient has a pole at q = 1 and cannot be specialized. """
    exit_code = ExitCode.VALIDATION


class ResourceError(QSymPairsError):
    exit_code = ExitCode.RESOURCE

    def __init__(self, message, degree=None):
        self.degree = degree
        super().__init__(message)


class InvariantViolation(QSymPairsError):
    """ A computed result contradicts a proven structural property. """
    exit_code = ExitCode.INVARIANT


def exit_code_for(error):
    """ Returns the command line exit code associated to an exception.

    Args:
        error (Exception): Any raised exception.
    Returns:
        int: The exit code; unknown exceptions count as invariant violations.
    """
    return int(getattr(error, "exit_code", ExitCode.INVARIANT))
