"""
Exception hierarchy for permucodec.

Every error raised on purpose by the library derives from PermucodecError so
callers (and the command-line front end) can catch them in one place.
"""

from typing import Optional


class PermucodecError(Exception):
    """Base class for all permucodec errors."""


class InvalidInputError(PermucodecError, ValueError):
    """An argument violates the pre-condition of an operation."""


class SymbolNotInAlphabetError(PermucodecError, KeyError):
    """A symbol was looked up in a distribution or tree that does not hold it."""

    def __init__(self, symbol=None):
        self.symbol = symbol
        super().__init__("symbol not in alphabet")

    def __str__(self):
        return f"symbol not in alphabet: {self.symbol!r}"


class MalformedStateError(PermucodecError, ValueError):
    """A serialized ANS state is not in minimal big-endian form."""

    def __init__(self, detail: str = ""):
        message = "malformed state"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class StateDepletedError(PermucodecError):
    """The ANS state holds too little information for a bits-back decode."""

    def __init__(self, state: int, precision: int):
        self.state = state
        self.precision = precision
        super().__init__(f"state depleted: state {state} < precision {precision}")


class CorruptMessageError(PermucodecError):
    """A message could not be decoded consistently."""

    def __init__(self, detail: str = ""):
        message = "corrupt message"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class IntegrityError(PermucodecError):
    """Decoding finished but did not restore the fixed initial state."""

    def __init__(self, detail: str = ""):
        message = "integrity failure"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class InputParseError(PermucodecError, ValueError):
    """An input file could not be parsed; carries the 1-based line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
