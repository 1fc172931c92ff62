"""Exception hierarchy shared by every layer of the workbench."""


class WorkbenchError(Exception):
    """Base class; the CLI maps subclasses to exit codes."""


class ValidationError(WorkbenchError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(message + where)


class DimensionMismatch(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class AlgebraMismatch(ValidationError):
    pass


class SpaceMismatch(ValidationError):
    pass


class DegreeMismatch(ValidationError):
    pass


class JacobiViolation(ValidationError):
    def __init__(self, i, j, k, residual):
        self.triple = (i, j, k)
        self.residual = residual
        super().__init__(
            f"Jacobi identity fails on generators ({i + 1}, {j + 1}, {k + 1}); "
            f"residual coefficients {residual}"
        )


class RepresentationError(ValidationError):
    """A matrix representation, cyclic vector or J failed validation."""


class PositivityFailure(ValidationError):
    def __init__(self, message, witness=None, value=None):
        self.witness = witness
        self.value = value
        super().__init__(message)


class OrderExceeded(WorkbenchError):
    def __init__(self, degree, order):
        self.degree = degree
        self.order = order
        super().__init__(f"degree {degree} exceeds available order {order}")


class InsufficientOrder(WorkbenchError):
    pass


class NonpositiveRadius(WorkbenchError):
    pass


class Unstabilized(WorkbenchError):
    """Raised when generator matrices are requested from a module that did
    not stabilize. The truncated action is attached for inspection."""

    def __init__(self, rank_profile, truncated_action):
        self.rank_profile = list(rank_profile)
        self.truncated_action = truncated_action
        super().__init__(f"GNS module not stabilized; rank profile {self.rank_profile}")


class ContractViolation(WorkbenchError):
    pass
