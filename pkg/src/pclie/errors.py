"""Exception hierarchy shared by the library and the command line."""


class PCLieError(Exception):
    """Base class for all errors raised by pclie."""


class UnknownGeneratorError(PCLieError, KeyError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown generator {name}")

    def __str__(self):
        return f"unknown generator {self.name}"


class GraphError(PCLieError, ValueError):
    """Malformed commutation graph (loops, duplicates, bad document)."""


class WordError(PCLieError, ValueError):
    """A word or monomial violates a precondition (empty, not LSA, not LS)."""


class DegreeBoundError(PCLieError, ValueError):
    """A computation needs a larger degree bound than the reduction table has."""

    def __init__(self, required, available):
        self.required = required
        self.available = available
        super().__init__(
            f"degree bound {available} is too small; need at least {required}")


class OrderMismatchError(PCLieError, ValueError):
    pass


class ParseError(PCLieError, ValueError):
    """Syntax error in an expression or graph document; carries a position."""

    def __init__(self, message, position=None, line=None):
        self.message = message
        self.position = position
        self.line = line
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {position})" if position is not None else ")")
        elif position is not None:
            where = f" (at position {position})"
        super().__init__(message + where)


class InternalConsistencyError(PCLieError, AssertionError):
    """A computed object contradicts a theorem the library relies on."""
