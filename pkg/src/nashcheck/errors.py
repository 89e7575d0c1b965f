"""Exception hierarchy.

Every validation failure has its own class so callers (and the CLI) can
tell a symmetry problem from a definiteness problem without parsing
messages.
"""


class ValidationError(ValueError):
    """Input is not a valid intersection matrix."""


class ParseError(ValidationError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class SymmetryError(ValidationError):
    pass


class SignPatternError(ValidationError):
    pass


class DisconnectedGraphError(ValidationError):
    pass


class NotNegativeDefiniteError(ValidationError):
    def __init__(self, level, pivot):
        self.level = level
        self.pivot = pivot
        super().__init__(f"not negative definite: pivot {level} is >= 0 (value {pivot})")


class MinimalityError(ValidationError):
    pass


class ZeroPivotError(ArithmeticError):
    """A Schur contraction hit a zero pivot.

    Cannot happen for negative definite input, so it points at misuse.
    """
