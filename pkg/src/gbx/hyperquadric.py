"""The hyperquadrics M_ti, M_tj, M_tij as multiplicative groups.

Each hyperquadric is cut out of R^4 by one bilinear constraint and a
nonvanishing metric norm:

======  ============================  ============================
kind    constraint                    metric weights on x1..x4
======  ============================  ============================
TI      x1 x3 + alpha x2 x4 = 0       (1, alpha, -beta, -alpha beta)
TJ      x1 x2 + beta x3 x4 = 0        (1, -alpha, beta, -alpha beta)
TIJ     x1 x4 - x2 x3 = 0             (1, alpha, beta, alpha beta)
======  ============================  ============================

On a hyperquadric the norm ``x * conj(x)`` is real and equals the metric norm,
which is what makes the inverse ``conj(y) / N(y)`` available.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from gbx.algebra import (
    AlgebraParams,
    ConjugationKind,
    GBCNumber,
    conjugate,
    multiply,
    scale,
    conjugate_arrays,
)
from gbx.errors import NotOnHyperquadric

__all__ = [
    "HyperquadricKind",
    "MetricForm",
    "HyperquadricPoint",
    "metric_form",
    "constraint_value",
    "metric_eval",
    "membership",
    "group_product",
    "group_inverse",
    "unit_membership",
    "constraint_arrays",
    "constraint_gradient_arrays",
    "metric_arrays",
    "abs_metric_arrays",
    "inverse_arrays",
    "sample_members",
    "DEFAULT_TOL",
]

# a hyperquadric kind and its conjugation share the same three tags
HyperquadricKind = ConjugationKind

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class MetricForm:
    """Diagonal quadratic form with the given weights on x1..x4."""

    weights: tuple[float, float, float, float]

    @property
    def index(self) -> int:
        """Number of negative weights (the ``v`` of R^4_v)."""
        return sum(1 for w in self.weights if w < 0)

    def evaluate(self, x, y) -> np.ndarray:
        return (np.asarray(x, dtype=float) * np.asarray(y, dtype=float) * self.weights).sum(axis=-1)


def metric_weights(kind, alpha: float, beta: float) -> np.ndarray:
    kind = HyperquadricKind.parse(kind)
    ab = alpha * beta
    if kind is HyperquadricKind.TI:
        return np.array([1.0, alpha, -beta, -ab])
    if kind is HyperquadricKind.TJ:
        return np.array([1.0, -alpha, beta, -ab])
    return np.array([1.0, alpha, beta, ab])


def metric_form(kind, p: AlgebraParams) -> MetricForm:
    return MetricForm(tuple(metric_weights(kind, p.alpha, p.beta).tolist()))


@dataclass(frozen=True)
class HyperquadricPoint:
    """A number known to lie on the hyperquadric ``kind``.

    Build these with :func:`membership`, which performs the checks.
    """

    value: GBCNumber
    kind: HyperquadricKind
    params: AlgebraParams

    @property
    def norm(self) -> float:
        return metric_eval(self.value, self.value, self.kind, self.params)


# -- array kernels -----------------------------------------------------------


def constraint_arrays(x, kind, alpha: float, beta: float) -> np.ndarray:
    """Value of the defining bilinear constraint; shape ``(...)``.

    Written so that it equals exactly half the residual returned by
    :func:`gbx.algebra.norm_form_arrays` for the matching conjugation.
    """
    kind = HyperquadricKind.parse(kind)
    x1, x2, x3, x4 = np.moveaxis(np.asarray(x, dtype=float), -1, 0)
    if kind is HyperquadricKind.TI:
        return x1 * x3 + alpha * (x2 * x4)
    if kind is HyperquadricKind.TJ:
        return x1 * x2 + beta * (x3 * x4)
    return x1 * x4 - x2 * x3


def constraint_gradient_arrays(x, kind, alpha: float, beta: float) -> np.ndarray:
    """Gradient of the constraint with respect to x1..x4; shape ``(..., 4)``."""
    kind = HyperquadricKind.parse(kind)
    x1, x2, x3, x4 = np.moveaxis(np.asarray(x, dtype=float), -1, 0)
    if kind is HyperquadricKind.TI:
        grad = [x3, alpha * x4, x1, alpha * x2]
    elif kind is HyperquadricKind.TJ:
        grad = [x2, x1, beta * x4, beta * x3]
    else:
        grad = [x4, -x3, -x2, x1]
    return np.stack(grad, axis=-1)


def metric_arrays(x, y, kind, alpha: float, beta: float) -> np.ndarray:
    w = metric_weights(kind, alpha, beta)
    return (np.asarray(x, dtype=float) * np.asarray(y, dtype=float) * w).sum(axis=-1)


def abs_metric_arrays(x, y, kind, alpha: float, beta: float) -> np.ndarray:
    """The metric with all weights and coordinates made nonnegative.

    Bounds the magnitude of the terms summed by :func:`metric_arrays`.
    """
    w = np.abs(metric_weights(kind, alpha, beta))
    return (np.abs(x) * np.abs(y) * w).sum(axis=-1)


def inverse_arrays(y, kind, alpha: float, beta: float) -> np.ndarray:
    """Group inverse ``conj(y) / N(y)`` for points on the hyperquadric."""
    norm = metric_arrays(y, y, kind, alpha, beta)
    return conjugate_arrays(y, kind) / norm[..., None]


def sample_members(
    rng: np.random.Generator,
    n: int,
    kind,
    alpha: float,
    beta: float,
    low: float = -2.0,
    high: float = 2.0,
    min_norm: float = 1e-12,
    min_norm_ratio: float = 1e-3,
) -> np.ndarray:
    """Draw ``n`` random points of a hyperquadric; shape ``(n, 4)``.

    All four coordinates are drawn uniformly from ``[low, high]``; then the
    coordinate with the largest constraint multiplier is re-solved so that the
    constraint holds. Draws are rejected when every multiplier is tiny or when
    ``|N|`` is at most ``max(min_norm, min_norm_ratio * |g|(x, x))``, where
    ``|g|`` is the metric with absolute weights.
    """
    kind = HyperquadricKind.parse(kind)
    out = np.empty((0, 4))
    while out.shape[0] < n:
        batch = max(2 * (n - out.shape[0]), 16)
        x = rng.uniform(low, high, size=(batch, 4))
        grad = constraint_gradient_arrays(x, kind, alpha, beta)
        slot = np.abs(grad).argmax(axis=-1)
        rows = np.arange(batch)
        multiplier = grad[rows, slot]
        ok = np.abs(multiplier) > 1e-6 * max(abs(high), abs(low), 1.0)
        x[rows, slot] -= constraint_arrays(x, kind, alpha, beta) / np.where(ok, multiplier, 1.0)
        norm = metric_arrays(x, x, kind, alpha, beta)
        floor = np.maximum(min_norm, min_norm_ratio * abs_metric_arrays(x, x, kind, alpha, beta))
        ok &= np.abs(norm) > floor
        ok &= np.isfinite(x).all(axis=-1)
        out = np.concatenate([out, x[ok]])
    return out[:n]


# -- scalar API --------------------------------------------------------------


def constraint_value(x: GBCNumber, k, p: AlgebraParams) -> float:
    return float(constraint_arrays(x.as_array(), k, p.alpha, p.beta))


def metric_eval(x: GBCNumber, y: GBCNumber, k, p: AlgebraParams) -> float:
    return float(metric_arrays(x.as_array(), y.as_array(), k, p.alpha, p.beta))


def _constraint_scale(x: GBCNumber) -> float:
    return max(1.0, max(abs(c) for c in x.as_tuple()) ** 2)


def membership(x: GBCNumber, k, p: AlgebraParams, tol: float = DEFAULT_TOL) -> HyperquadricPoint:
    """Check that ``x`` lies on hyperquadric ``k`` and wrap it.

    The constraint is compared against ``tol * max(1, max|x_m|**2)`` so large
    points are not rejected for rounding noise; the norm must exceed ``tol``.

    Raises:
        NotOnHyperquadric: with ``reason`` set to ``"constraint"`` or ``"norm"``.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    kind = HyperquadricKind.parse(k)
    c = constraint_value(x, kind, p)
    if abs(c) > tol * _constraint_scale(x):
        raise NotOnHyperquadric("constraint", c)
    norm = metric_eval(x, x, kind, p)
    if not abs(norm) > tol:
        raise NotOnHyperquadric("norm", norm)
    return HyperquadricPoint(x, kind, p)


def _check_compatible(x: HyperquadricPoint, y: HyperquadricPoint):
    if x.kind is not y.kind:
        raise ValueError(f"cannot combine points of {x.kind.name} and {y.kind.name}")
    if x.params != y.params:
        raise ValueError(f"cannot combine points of different algebras {x.params} and {y.params}")


def group_product(x: HyperquadricPoint, y: HyperquadricPoint, tol: float = DEFAULT_TOL) -> HyperquadricPoint:
    """Product of two points; the result is re-validated against ``tol``.

    A :class:`NotOnHyperquadric` from the re-validation means the tolerance is
    too tight for the magnitudes involved.
    """
    _check_compatible(x, y)
    return membership(multiply(x.value, y.value, x.params), x.kind, x.params, tol)


def group_inverse(y: HyperquadricPoint, tol: float = DEFAULT_TOL) -> HyperquadricPoint:
    norm = metric_eval(y.value, y.value, y.kind, y.params)
    inv = scale(1.0 / norm, conjugate(y.value, y.kind))
    return membership(inv, y.kind, y.params, tol)


def unit_membership(x: HyperquadricPoint, tol: float = DEFAULT_TOL) -> bool:
    """True when ``x`` belongs to the unit subgroup (norm one)."""
    return math.fabs(x.norm - 1.0) <= tol
