"""Exception hierarchy shared by every module of the package."""


class BMSError(Exception):
    """Base class for all package errors."""

    kind = "error"


class InvalidMass(BMSError, ValueError):
    kind = "invalid_mass"


class InvalidPosition(BMSError, ValueError):
    kind = "invalid_position"


class MassSum(BMSError, ValueError):
    kind = "mass_sum"


class InvalidParameter(BMSError, ValueError):
    kind = "invalid_parameter"


class DomainError(BMSError, ValueError):
    kind = "domain_error"


class NonZeroTail(BMSError, ValueError):
    kind = "nonzero_tail"


class NoBracket(BMSError, ArithmeticError):
    kind = "no_bracket"


class NoConvergence(BMSError, ArithmeticError):
    kind = "no_convergence"


class NonFinite(BMSError, ArithmeticError):
    kind = "non_finite"


class Infeasible(BMSError, ArithmeticError):
    kind = "infeasible"


class RejectionExhausted(BMSError, RuntimeError):
    kind = "rejection_exhausted"
