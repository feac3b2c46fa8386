"""Exception hierarchy shared by every ordfix module."""


class OrdfixError(Exception):
    """Base class for all engine errors."""


class DuplicateElement(OrdfixError):
    pass


class UnknownElement(OrdfixError):
    pass


class CycleDetected(OrdfixError):
    """Raised when the closure of the generators is not antisymmetric."""

    def __init__(self, a, b):
        super().__init__(f"cycle between {a!r} and {b!r}: both a<=b and b<=a")
        self.elements = (a, b)


class EmptyProduct(OrdfixError):
    pass


class CapExceeded(OrdfixError):
    """An exponential enumeration was requested on an instance above the size cap."""


class TargetNotLattice(OrdfixError):
    pass


class NotSelfCorrespondence(OrdfixError):
    pass


class NotCompleteLattice(OrdfixError):
    pass


class NoCandidate(OrdfixError):
    pass


class NotIncreasing(OrdfixError):
    pass


class NoBottom(OrdfixError):
    pass


class NoTop(OrdfixError):
    pass


class IncompatibleInstance(OrdfixError):
    pass


class GenerationExhausted(OrdfixError):
    pass


class UnknownFixture(OrdfixError):
    pass


class UnknownPlayer(OrdfixError):
    pass


class IncompatibleProfile(OrdfixError):
    pass


class ParseError(OrdfixError):
    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


class ValidationError(OrdfixError):
    pass
