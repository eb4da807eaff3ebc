"""Exception hierarchy shared by all ratpow modules."""


class RatPowError(Exception):
    """Base class for every error raised by ratpow."""


class DimensionMismatch(RatPowError, ValueError):
    pass


class ContextMismatch(RatPowError, ValueError):
    pass


class UndefinedOperation(RatPowError, ValueError):
    pass


class InvalidMatrix(RatPowError, ValueError):
    pass


class PreconditionError(RatPowError, ValueError):
    """An input fails a stated precondition (e.g. P != I + J, non-squarefree)."""


class HypothesisViolation(RatPowError):
    """The input ideal does not satisfy a theorem hypothesis.

    ``witness`` carries the offending certificate (a non-integral dual vertex).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class TheoremViolation(RatPowError):
    """A proved identity failed on a computation: always an internal defect."""


class ParseError(RatPowError, ValueError):
    def __init__(self, message, path=None, line=None, column=None):
        self.path = path
        self.line = line
        self.column = column
        self.message = message
        loc = ":".join(str(p) for p in (path, line, column) if p is not None)
        super().__init__(f"{loc}: {message}" if loc else message)
