"""Exception hierarchy shared across the engine."""


class AspicError(Exception):
    """Base class for every error raised by aspicmin."""


class TheoryError(AspicError):
    """A theory could not be built because an invariant would be broken."""

    code = "TheoryError"

    def __init__(self, message, *, line=None, column=None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column


class DuplicateRule(TheoryError):
    code = "DuplicateRule"


class DuplicateRuleName(TheoryError):
    code = "DuplicateRuleName"


class OverlappingKB(TheoryError):
    code = "OverlappingKB"


class UnknownFormula(TheoryError):
    code = "UnknownFormula"


class EmptyPremises(TheoryError):
    code = "EmptyPremises"


class CyclicTheory(AspicError):
    """Exhaustive enumeration was requested on a theory with a rule cycle."""


class EnumerationLimit(AspicError):
    """Bounded enumeration produced more arguments than the caller allowed."""


class PropertyViolation(AspicError):
    """A regular argument failed the minimality test, or the reverse."""

    def __init__(self, message, argument=None, verdict=None):
        super().__init__(message)
        self.argument = argument
        self.verdict = verdict


class TooLarge(AspicError):
    """Brute-force oracle refused an input above its size guard."""


class ParseError(AspicError):
    """Syntax error in theory or argument text, with a 1-based position."""

    def __init__(self, message, line, column, snippet=""):
        self.message = message
        self.line = line
        self.column = column
        self.snippet = snippet
        super().__init__(self.__str__())

    def __str__(self):
        text = f"{self.line}:{self.column}: {self.message}"
        if self.snippet:
            pointer = " " * (self.column - 1) + "^"
            text += f"\n  {self.snippet}\n  {pointer}"
        return text
