"""Exception hierarchy shared across the package."""


class DressianError(Exception):
    """Base class for all errors raised by this package."""


class NotAMatroid(DressianError):
    """The exchange axiom fails; carries a violating triple (B, B', e)."""

    def __init__(self, b, b_other, e):
        self.triple = (tuple(sorted(b)), tuple(sorted(b_other)), e)
        super().__init__(
            f"basis exchange fails for B={self.triple[0]}, "
            f"B'={self.triple[1]}, e={e}"
        )


class EmptyBases(DressianError):
    pass


class WrongCardinality(DressianError):
    pass


class InvalidParameters(DressianError):
    pass


class NoEdges(DressianError):
    pass


class UnknownName(DressianError):
    pass


class EverythingRemoved(DressianError):
    pass


class MalformedInput(DressianError):
    pass


class ImpossiblePattern(DressianError):
    """A pair-face pattern excluded by the exchange axiom was observed."""


class NotValuated(DressianError):
    pass


class NotMatroidal(DressianError):
    pass


class NotABasis(DressianError):
    pass


class NotParallel(DressianError):
    pass


class HasLoops(DressianError):
    pass


class MalformedTree(DressianError):
    pass


class AllInfiniteColumnSet(DressianError):
    pass


class BudgetExceeded(DressianError):
    """Node budget exhausted; carries the partial result when available."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ParseError(DressianError):
    pass
