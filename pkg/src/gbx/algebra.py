"""Arithmetic of generalized bicomplex numbers.

A generalized bicomplex number is ``x = x1 + x2 i + x3 j + x4 ij`` with
``i**2 = -alpha``, ``j**2 = -beta`` and ``ij = ji``. Coefficients are always
stored in the order ``(1, i, j, ij)``.

Two layers live here. The array kernels (``*_arrays`` and friends) work on
numpy arrays of shape ``(..., 4)`` and do all of the numerics; the value types
:class:`AlgebraParams` and :class:`GBCNumber` plus the scalar functions are a
thin, validated front end over them.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.linalg

from gbx.errors import NotInvertible

__all__ = [
    "AlgebraParams",
    "GBCNumber",
    "ConjugationKind",
    "NormForm",
    "add",
    "scale",
    "multiply",
    "conjugate",
    "norm_form",
    "rep_matrix",
    "general_inverse",
    "product_arrays",
    "conjugate_arrays",
    "rep_matrices",
    "abs_product_arrays",
    "abs_product_scale",
    "relative_deviation",
    "CONJUGATION_SIGNS",
]

# pivots below this fraction of the matrix max-norm count as singular
SINGULAR_PIVOT_RATIO = 1e-12


@dataclass(frozen=True)
class AlgebraParams:
    """The pair ``(alpha, beta)`` fixing the algebra C_alpha_beta."""

    alpha: float
    beta: float

    def __post_init__(self):
        for name in ("alpha", "beta"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            if value == 0.0:
                raise ValueError(f"{name} must be nonzero")
            object.__setattr__(self, name, value)

    @property
    def is_sign_case(self) -> bool:
        """True when both parameters are +1 or -1."""
        return abs(self.alpha) == 1.0 and abs(self.beta) == 1.0


@dataclass(frozen=True)
class GBCNumber:
    """A generalized bicomplex number ``c1 + c2 i + c3 j + c4 ij``.

    The value carries no algebra parameters; addition and scaling do not need
    them, and every product takes an explicit :class:`AlgebraParams`.
    """

    c1: float
    c2: float = 0.0
    c3: float = 0.0
    c4: float = 0.0

    def __post_init__(self):
        for name in ("c1", "c2", "c3", "c4"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"coefficient {name} is not finite: {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_array(cls, values) -> GBCNumber:
        values = np.asarray(values, dtype=float)
        if values.shape != (4,):
            raise ValueError(f"expected 4 coefficients, got shape {values.shape}")
        return cls(*values.tolist())

    def as_array(self) -> np.ndarray:
        return np.array([self.c1, self.c2, self.c3, self.c4])

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.c1, self.c2, self.c3, self.c4)

    def __iter__(self):
        return iter(self.as_tuple())

    def __add__(self, other):
        if not isinstance(other, GBCNumber):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, GBCNumber):
            return NotImplemented
        return add(self, scale(-1.0, other))

    def __neg__(self):
        return scale(-1.0, self)

    def __rmul__(self, other):
        # only real scalars; the algebra product needs AlgebraParams
        if isinstance(other, (int, float, np.floating, np.integer)):
            return scale(float(other), self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return scale(float(other), self)
        return NotImplemented


ONE = GBCNumber(1.0, 0.0, 0.0, 0.0)
UNIT_I = GBCNumber(0.0, 1.0, 0.0, 0.0)
UNIT_J = GBCNumber(0.0, 0.0, 1.0, 0.0)
UNIT_IJ = GBCNumber(0.0, 0.0, 0.0, 1.0)


class ConjugationKind(enum.Enum):
    """The three conjugations, named after the unit(s) whose sign they flip."""

    TI = "ti"
    TJ = "tj"
    TIJ = "tij"

    @classmethod
    def parse(cls, value) -> ConjugationKind:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown kind {value!r}; expected one of {choices}") from None


# coefficient signs on (1, i, j, ij)
CONJUGATION_SIGNS = {
    ConjugationKind.TI: np.array([1.0, -1.0, 1.0, -1.0]),
    ConjugationKind.TJ: np.array([1.0, 1.0, -1.0, -1.0]),
    ConjugationKind.TIJ: np.array([1.0, -1.0, -1.0, 1.0]),
}

# which coefficient of x * conj(x) carries the non-real residual
_RESIDUAL_SLOT = {
    ConjugationKind.TI: 2,
    ConjugationKind.TJ: 1,
    ConjugationKind.TIJ: 3,
}


class NormForm(NamedTuple):
    scalar: float
    residual: float


# -- array kernels -----------------------------------------------------------


def product_arrays(x, y, alpha: float, beta: float) -> np.ndarray:
    """Generalized bicomplex product of coefficient arrays.

    Args:
        x, y: arrays of shape ``(..., 4)``; broadcast against each other.
        alpha, beta: algebra parameters.

    Returns:
        Array of shape ``(..., 4)``.

    Every component is written as a sum of symmetric pairs, so swapping
    ``x`` and ``y`` reproduces the result bit for bit.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    x1, x2, x3, x4 = np.moveaxis(x, -1, 0)
    y1, y2, y3, y4 = np.moveaxis(y, -1, 0)
    ab = alpha * beta
    r1 = x1 * y1 - alpha * (x2 * y2) - beta * (x3 * y3) + ab * (x4 * y4)
    r2 = (x1 * y2 + x2 * y1) - beta * (x3 * y4 + x4 * y3)
    r3 = (x1 * y3 + x3 * y1) - alpha * (x2 * y4 + x4 * y2)
    r4 = (x1 * y4 + x4 * y1) + (x2 * y3 + x3 * y2)
    return np.stack([r1, r2, r3, r4], axis=-1)


def abs_product_arrays(x, y, alpha: float, beta: float) -> np.ndarray:
    """``x * y`` with every term replaced by its magnitude; shape ``(..., 4)``.

    Each component bounds the sum of absolute values of the terms that enter
    the matching component of the true product.
    """
    # the product subtracts every alpha and beta term, so negative parameters
    # turn all of them into additions
    return product_arrays(np.abs(x), np.abs(y), -abs(alpha), -abs(beta))


def abs_product_scale(x, y, alpha: float, beta: float) -> np.ndarray:
    """Largest absolute-term component of ``x * y``, per sample; shape ``(...)``.

    This is the natural denominator for rounding-error comparisons.
    """
    return abs_product_arrays(x, y, alpha, beta).max(axis=-1)


def relative_deviation(a, b, scale) -> np.ndarray:
    """``max|a - b|`` over the last axis divided by ``max(scale, tiny)``."""
    diff = np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float)).max(axis=-1)
    return diff / np.maximum(scale, np.finfo(float).tiny)


def conjugate_arrays(x, kind) -> np.ndarray:
    kind = ConjugationKind.parse(kind)
    return np.asarray(x, dtype=float) * CONJUGATION_SIGNS[kind]


def rep_matrices(x, alpha: float, beta: float) -> np.ndarray:
    """Matrix representation of each number; shape ``(..., 4, 4)``.

    Column one of ``rep(x)`` is ``x`` itself and ``rep(x) @ y`` equals the
    product ``x * y``.
    """
    x = np.asarray(x, dtype=float)
    x1, x2, x3, x4 = np.moveaxis(x, -1, 0)
    ab = alpha * beta
    rows = [
        [x1, -alpha * x2, -beta * x3, ab * x4],
        [x2, x1, -beta * x4, -beta * x3],
        [x3, -alpha * x4, x1, -alpha * x2],
        [x4, x3, x2, x1],
    ]
    return np.stack([np.stack(row, axis=-1) for row in rows], axis=-2)


def norm_form_arrays(x, kind, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """Scalar part and residual coefficient of ``x * conj(x)``."""
    kind = ConjugationKind.parse(kind)
    full = product_arrays(x, conjugate_arrays(x, kind), alpha, beta)
    return full[..., 0], full[..., _RESIDUAL_SLOT[kind]]


# -- scalar API --------------------------------------------------------------


def add(x: GBCNumber, y: GBCNumber) -> GBCNumber:
    return GBCNumber(x.c1 + y.c1, x.c2 + y.c2, x.c3 + y.c3, x.c4 + y.c4)


def scale(lam: float, x: GBCNumber) -> GBCNumber:
    lam = float(lam)
    if not math.isfinite(lam):
        raise ValueError(f"scale factor must be finite, got {lam!r}")
    return GBCNumber(lam * x.c1, lam * x.c2, lam * x.c3, lam * x.c4)


def multiply(x: GBCNumber, y: GBCNumber, p: AlgebraParams) -> GBCNumber:
    return GBCNumber.from_array(product_arrays(x.as_array(), y.as_array(), p.alpha, p.beta))


def conjugate(x: GBCNumber, k) -> GBCNumber:
    """Conjugate with respect to ``i`` (TI), ``j`` (TJ) or ``ij`` (TIJ).

    >>> conjugate(GBCNumber(1, 2, 3, 4), ConjugationKind.TI).as_tuple()
    (1.0, -2.0, 3.0, -4.0)
    """
    return GBCNumber.from_array(conjugate_arrays(x.as_array(), k))


def norm_form(x: GBCNumber, k, p: AlgebraParams) -> NormForm:
    """Scalar part and surviving non-real coefficient of ``x * conj_k(x)``.

    The residual is the ``j`` coefficient for TI, the ``i`` coefficient for TJ
    and the ``ij`` coefficient for TIJ; the other two non-real coefficients of
    the product are exactly zero.
    """
    scalar, residual = norm_form_arrays(x.as_array(), k, p.alpha, p.beta)
    return NormForm(float(scalar), float(residual))


def rep_matrix(x: GBCNumber, p: AlgebraParams) -> np.ndarray:
    return rep_matrices(x.as_array(), p.alpha, p.beta)


def general_inverse(x: GBCNumber, p: AlgebraParams) -> GBCNumber:
    """Multiplicative inverse via an LU solve of ``rep(x) v = e1``.

    Raises:
        NotInvertible: if ``x`` is zero or a zero divisor, detected as a pivot
            smaller than ``1e-12`` times the matrix max-norm.
    """
    matrix = rep_matrix(x, p)
    max_norm = np.abs(matrix).max()
    if max_norm == 0.0:
        raise NotInvertible("zero has no inverse")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(matrix, check_finite=False)
    smallest_pivot = np.abs(np.diag(lu)).min()
    if smallest_pivot < SINGULAR_PIVOT_RATIO * max_norm:
        raise NotInvertible(
            f"{x.as_tuple()} is a zero divisor (pivot ratio {smallest_pivot / max_norm:.3g})"
        )
    e1 = np.array([1.0, 0.0, 0.0, 0.0])
    return GBCNumber.from_array(scipy.linalg.lu_solve((lu, piv), e1, check_finite=False))
