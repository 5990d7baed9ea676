"""Exception hierarchy shared by the interpreter, constructions and search."""


class SammyError(Exception):
    """Base class. ``code`` is the CLI exit status for this error class."""

    code = 1


class SammyTypeError(SammyError, TypeError):
    code = 5


class SizeBound(SammyError):
    """A construction grew past a configured bound (possibly infinite)."""

    code = 7

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class NoUniversal(SammyError):
    """A required limit, colimit, Kan extension or lifting does not exist."""

    code = 8


class StepLimit(SammyError):
    code = 6


class ParseError(SammyError):
    code = 4

    def __init__(self, message, line=None, column=None):
        loc = f"line {line}" if line is not None else ""
        if column is not None:
            loc += f", column {column}"
        super().__init__(f"{loc}: {message}" if loc else message)
        self.line = line
        self.column = column


class BudgetExhausted(SammyError):
    """Search stopped before finding a witness; ``report`` holds best-so-far."""

    code = 9

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
