"""Exception types raised by widthlab."""


class ContractViolation(ValueError):
    """An argument violates a documented precondition."""


class NotAvailableError(LookupError):
    """A requested reference value has no closed form in this library."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach its requested tolerance."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class PolytopeFileError(ValueError):
    """A polytope file could not be read or does not describe a valid polytope."""
