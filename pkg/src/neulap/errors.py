"""Exception taxonomy.

Every error carries a stable machine-readable ``code`` so the CLI can emit
it on the diagnostic stream; the class hierarchy mirrors where the error
originates (graph validation, operator arguments, eigensolver, parameters).
"""


class NeulapError(Exception):
    """Base class for all neulap errors."""

    code = "ERROR"


# graph construction and validation
class GraphError(NeulapError):
    code = "GRAPH"


class SelfLoopError(GraphError):
    code = "SELF_LOOP"


class DuplicateEdgeError(GraphError):
    code = "DUPLICATE_EDGE"


class UnknownVertexError(GraphError):
    code = "UNKNOWN_VERTEX"


class DisconnectedError(GraphError):
    code = "DISCONNECTED"


class BoundaryEdgeError(GraphError):
    code = "BOUNDARY_EDGE"


class DanglingBoundaryError(GraphError):
    code = "DANGLING_BOUNDARY"


class EmptyInteriorError(GraphError):
    code = "EMPTY_INTERIOR"


class NotATreeError(GraphError):
    code = "NOT_A_TREE"


class TooSmallError(GraphError):
    code = "TOO_SMALL"


class GraphParseError(GraphError):
    code = "GRAPH_PARSE"


# vector and operator arguments
class LengthMismatchError(NeulapError):
    code = "LENGTH_MISMATCH"


class NotBoundaryError(NeulapError):
    code = "NOT_BOUNDARY"


class NotInteriorError(NeulapError):
    code = "NOT_INTERIOR"


class ZeroOnInteriorError(NeulapError):
    code = "ZERO_ON_INTERIOR"


# eigensolver
class SolverError(NeulapError):
    code = "SOLVER"


class NonSymmetricError(SolverError):
    code = "NON_SYMMETRIC"


class NoConvergenceError(SolverError):
    code = "NO_CONVERGENCE"


class ResidualError(SolverError):
    code = "RESIDUAL"


class SizeTooLargeError(SolverError):
    code = "SIZE_TOO_LARGE"


# parameters, families, checks
class BadParamsError(NeulapError):
    code = "BAD_PARAMS"


class BadVariantError(BadParamsError):
    code = "BAD_VARIANT"


class DiameterTooSmallError(BadParamsError):
    code = "DIAMETER_TOO_SMALL"


class BadRangeError(BadParamsError):
    code = "BAD_RANGE"


class InteriorTooSmallError(NeulapError):
    code = "INTERIOR_TOO_SMALL"


class NotSubtreeError(NeulapError):
    code = "NOT_SUBTREE"


class UnknownCheckError(NeulapError):
    code = "UNKNOWN_CHECK"
