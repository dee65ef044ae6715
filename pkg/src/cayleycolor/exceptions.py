"""Exception hierarchy for CayleyColor.

Operations raise these; verifiers report improper colorings as report content instead.
"""


class CayleyColorError(Exception):
    """Base exception for all CayleyColor errors."""

    pass


class InvalidParameterError(CayleyColorError, ValueError):
    """Raised when an operation's preconditions are violated."""

    pass


class PermutationError(InvalidParameterError):
    """Raised for malformed permutations, cycle notation or degree mismatches."""

    pass


class GroupBudgetError(InvalidParameterError):
    """Raised when a group enumeration exceeds the configured degree budget."""

    pass


class GyroTableError(InvalidParameterError):
    """Raised for an invalid gyrogroup order or a table without left inverses."""

    pass


class GeneratorSetError(InvalidParameterError):
    """Raised when a generating set is not symmetric or contains the identity."""

    pass


class GraphError(InvalidParameterError):
    """Raised for out-of-range vertices, loops or inconsistent graph input."""

    pass


class ColoringFormatError(CayleyColorError):
    """Raised for malformed coloring artifacts or colorings that do not fit their graph."""

    pass


class VerificationError(CayleyColorError):
    """Raised when a construction's own output fails verification."""

    def __init__(self, message: str, report: object | None = None) -> None:
        super().__init__(message)
        self.report = report


class SearchExhaustedError(CayleyColorError):
    """Raised when a constructive search or repair runs out of budget."""

    def __init__(self, message: str, nodes: int = 0) -> None:
        super().__init__(message)
        self.nodes = nodes


class NoPassingVariantError(CayleyColorError):
    """Raised when no enumerated gyrogroup variant satisfies the axioms."""

    pass
