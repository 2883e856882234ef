class WeightDynError(Exception):
    """Base class for all errors raised by this package."""


class GraphStructureError(WeightDynError):
    """Unknown node or edge, or an edge that breaks the graph's structure."""


class WeightRangeError(WeightDynError):
    """A weight change would leave the interval [1, W]."""


class ParseError(WeightDynError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(ParseError):
    """Well-formed input that violates a model invariant.

    Subclasses ParseError so callers reading files can catch one type.
    """


class GenerationError(WeightDynError):
    """Random instance parameters that cannot be satisfied."""


class NoSpanningTreeError(WeightDynError):
    pass


class SizeGuardError(WeightDynError):
    """Instance too large for an exhaustive solver."""


class StateError(WeightDynError):
    pass


class InvariantError(WeightDynError):
    """Internal state corruption. Should be unreachable."""


class NoPathError(WeightDynError):
    pass
