"""Exceptions raised across the package."""


class GBXError(Exception):
    """Base class for all package errors."""


class NotInvertible(GBXError, ArithmeticError):
    """The number is zero or a zero divisor, so it has no inverse."""


class NotOnHyperquadric(GBXError, ValueError):
    """A point failed one of the two hyperquadric membership conditions.

    Attributes:
        reason: ``"constraint"`` when the bilinear constraint is violated,
            ``"norm"`` when the metric norm vanishes.
        value: the offending measured quantity.
    """

    def __init__(self, reason, value, message=None):
        self.reason = reason
        self.value = value
        if message is None:
            message = f"not on hyperquadric ({reason} check failed, value={value!r})"
        super().__init__(message)


class IndexNotInBasis(GBXError, ValueError):
    """A Lie algebra basis index is not available for the requested hyperquadric."""


class CaseMismatch(GBXError, ValueError):
    """Curve kinds do not match the case table for a tensor rule and (alpha, beta)."""


class FormMismatch(GBXError, ArithmeticError):
    """Ambient and product-formula fundamental forms disagree."""


class Degenerate(GBXError, ArithmeticError):
    """The tangent plane is degenerate (lightlike), no orthonormal frame exists."""


class MeshExportError(GBXError, OSError):
    """Writing a mesh file failed."""
