"""Exception hierarchy shared by all modules."""


class TopologyError(Exception):
    """Base class for domain errors raised by spernerkit."""


class EmptyComplexError(TopologyError):
    pass


class NotNonBranchingError(TopologyError):
    pass


class PointOutsideComplexError(TopologyError):
    pass


class MapNotSimplicialError(TopologyError):
    pass


class DimensionMismatchError(TopologyError):
    pass


class ConeNotInComplexError(TopologyError):
    pass


class NotASubdivisionError(TopologyError):
    pass


class NotASubcomplexError(TopologyError):
    pass


class NotACocycleError(TopologyError):
    pass


class NotACycleError(TopologyError):
    pass


class BudgetExceeded(TopologyError):
    pass


class CenterNotInteriorError(TopologyError):
    pass


class TargetMissError(TopologyError):
    pass


class MissingLabelError(TopologyError):
    pass


class InvalidFlagError(TopologyError):
    pass


class UnknownMapError(TopologyError):
    pass


class FormatError(TopologyError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class MixedGeometryError(TopologyError):
    pass


class ComplexIOError(TopologyError, OSError):
    pass
