"""
This module defines enumerations, exception classes and small records shared by all
zetakit modules.

Classes and Enums:
------------------
- :class:`.FunctionId` (Enum): The four Dirichlet series handled by the library.
- :class:`.ErrorCode` (Enum): Error codes and descriptions for library errors.
- :class:`.UnsupportedReason` (Enum): Why a function value has no exact closed form.
- :class:`.Unsupported` (dataclass): Structured "no value" result of an evaluation.
- :class:`.ZetaKitError` (Exception): Base exception carrying an :class:`.ErrorCode`.
- :class:`.PolySyntaxError` (Exception): Parse error of a polynomial expression.
- :class:`.UnsupportedValueError` (Exception): Raised variant of :class:`.Unsupported`.
"""

from enum import Enum
from dataclasses import dataclass
from typing import Optional, Sequence


class FunctionId(str, Enum):
    """
    Enumeration of the zeta-like functions with exact values at integer arguments.

    Attributes:
        ZETA: Riemann zeta function, sum of 1/n^s.
        ETA: Dirichlet eta function, the alternating zeta series.
        LAMBDA: Dirichlet lambda function, zeta restricted to odd denominators.
        BETA: Dirichlet beta function, the alternating odd-denominator series.
    """
    ZETA = "zeta"
    ETA = "eta"
    LAMBDA = "lambda"
    BETA = "beta"

    def __str__(self):
        return self.value

    @property
    def symbol(self) -> str:
        """Greek letter conventionally used for the function."""
        symbols = {
            FunctionId.ZETA: "ζ",
            FunctionId.ETA: "η",
            FunctionId.LAMBDA: "λ",
            FunctionId.BETA: "β",
        }
        return symbols[self]


class ErrorCode(Enum):
    """
    ErrorCode(Enum):
        An enumeration representing the error classes raised by the library and their
        corresponding descriptions.
    """
    UNSUPPORTED = 1
    POLE_AT_ONE = 2
    NO_CLOSED_FORM = 3
    UNSUPPORTED_SEGMENT = 4
    ODD_TERM_PRESENT = 5
    NOT_QUASI_EVEN = 6
    ARITY_MISMATCH = 7
    NOT_AN_ANTIDIFFERENCE = 8
    DIGITS_OUT_OF_RANGE = 9
    NON_ALTERNATING = 10
    DOMAIN_VIOLATION = 11
    UNKNOWN_SUITE = 12
    INVALID_CONFIG = 13
    INFINITE_SEGMENT = 14
    SYNTAX_ERROR = 15

    @classmethod
    def get_description(cls, error_code: "ErrorCode") -> str:
        """
        Retrieves a human-readable description for a given error code.

        Args:
            error_code (ErrorCode): The error code for which the description is requested.

        Returns:
            str: A string describing the error. If the error code is not recognized,
                 "Unknown error" is returned.
        """
        descriptions = {
            cls.UNSUPPORTED: "No exact value available",
            cls.POLE_AT_ONE: "Simple pole at s=1",
            cls.NO_CLOSED_FORM: "No finite closed form is known",
            cls.UNSUPPORTED_SEGMENT: "Segment is not expressible as a standard or wrapped run",
            cls.ODD_TERM_PRESENT: "Function has a nonzero odd-power coefficient",
            cls.NOT_QUASI_EVEN: "Function is not quasi-even for the given shift",
            cls.ARITY_MISMATCH: "Wrong number of limit values",
            cls.NOT_AN_ANTIDIFFERENCE: "F(x+1) - F(x) does not equal f(x)",
            cls.DIGITS_OUT_OF_RANGE: "Requested digits of pi out of range",
            cls.NON_ALTERNATING: "Series terms do not alternate in sign",
            cls.DOMAIN_VIOLATION: "Argument outside the validity interval",
            cls.UNKNOWN_SUITE: "Unknown verification suite",
            cls.INVALID_CONFIG: "Invalid numeric configuration",
            cls.INFINITE_SEGMENT: "Segment is infinite and cannot be enumerated",
            cls.SYNTAX_ERROR: "Syntax error in polynomial expression",
        }
        return descriptions.get(error_code, "Unknown error")


class ZetaKitError(Exception):
    """
    Base exception class for all errors raised by the library.

    Attributes:
        error_code (ErrorCode): The error code associated with the exception.
        description (str): A human-readable description of the error.
        detail (str | None): Optional context, e.g. the offending argument.

    Args:
        error_code (ErrorCode): An instance of the ErrorCode enum representing the error.
        detail (str, optional): Additional information appended to the message.
    """
    def __init__(self, error_code: ErrorCode, detail: Optional[str] = None):
        self.error_code = error_code
        self.description = ErrorCode.get_description(error_code)
        self.detail = detail
        message = f"Error {self.error_code.value}: {self.description}"
        if detail:
            message += f" - {detail}"
        super().__init__(message)


class PolySyntaxError(ZetaKitError):
    """
    Raised when a polynomial expression cannot be parsed.

    Attributes:
        column (int): 1-based column of the offending token. End of input is reported
            as ``len(source) + 1``.
        expected (tuple[str, ...]): Sorted names of the tokens that would have been accepted.
    """
    def __init__(self, column: int, expected: Sequence[str], found: str):
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        self.found = found
        super().__init__(
            ErrorCode.SYNTAX_ERROR,
            f"column {column}: expected {' or '.join(self.expected)}, found {found}",
        )


class UnsupportedReason(Enum):
    """
    Reason codes for function values the library deliberately does not produce.
    """
    POLE = "pole"
    "The function has a pole at the requested argument."

    NO_CLOSED_FORM = "no-closed-form"
    "No finite closed form in powers of pi is known."

    def error_code(self) -> ErrorCode:
        """Returns the matching :class:`ErrorCode`."""
        if self is UnsupportedReason.POLE:
            return ErrorCode.POLE_AT_ONE
        return ErrorCode.NO_CLOSED_FORM


@dataclass(frozen=True)
class Unsupported:
    """
    Structured result returned instead of a value when no exact closed form exists.

    Attributes:
        fn (FunctionId): The function that was evaluated.
        s (int): The integer argument.
        reason (UnsupportedReason): Machine readable reason code.
        detail (str): Human readable explanation.
    """
    fn: FunctionId
    s: int
    reason: UnsupportedReason
    detail: str

    def __str__(self):
        return f"{self.fn.symbol}({self.s}): {self.reason.value} ({self.detail})"


class UnsupportedValueError(ZetaKitError):
    """
    Raised by the raising evaluation helpers when a value is :class:`Unsupported`.

    Attributes:
        unsupported (Unsupported): The structured reason.
    """
    def __init__(self, unsupported: Unsupported):
        self.unsupported = unsupported
        super().__init__(unsupported.reason.error_code(), str(unsupported))
