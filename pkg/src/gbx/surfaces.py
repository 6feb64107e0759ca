"""Tensor product surfaces of planar curves lying on the hyperquadrics.

Three tensor rules combine a curve ``gamma(t)`` and a curve ``delta(s)``:

* ``TI``:  f = (g1 d1,  g1 d2, -alpha g2 d2, g2 d1)  lies on M_ti
* ``TJ``:  f = (g1 d1, -beta g2 d2,  g1 d2,  g2 d1)  lies on M_tj
* ``TIJ``: f = (g1 d1,  g1 d2,  g2 d1,  g2 d2)       lies on M_tij

As numbers, these are ``(g1 + g2 u)(d1 + d2 w)`` for units ``u = ij, w = i``
(TI), ``u = ij, w = j`` (TJ) and ``u = j, w = i`` (TIJ). A unit squaring to -1
turns ``cos + sin u`` into an exponential and a unit squaring to +1 does the same
for ``cosh + sinh u``. That is why each ``(rule, alpha, beta)`` pins down which
curves are Euclidean and which Lorentzian, and why the diagonal ``f(t, t)`` is a
one-parameter subgroup.

Only ``alpha, beta in {+1, -1}`` are supported here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from gbx.algebra import AlgebraParams, GBCNumber, abs_product_scale, product_arrays, relative_deviation
from gbx.errors import CaseMismatch, Degenerate, FormMismatch
from gbx.hyperquadric import (
    HyperquadricKind,
    abs_metric_arrays,
    constraint_arrays,
    constraint_gradient_arrays,
    inverse_arrays,
    metric_arrays,
)
from gbx.lie import TangentVector, basis_field_arrays

__all__ = [
    "CurveKind",
    "PlanarCurve",
    "TensorRule",
    "TensorSurface",
    "FundamentalForm",
    "HomomorphismReport",
    "FieldMatchReport",
    "CASE_TABLE",
    "permitted_kinds",
    "evaluate_surface",
    "evaluate_surface_arrays",
    "diagonal_curve",
    "diagonal_arrays",
    "homomorphism_check",
    "tangent_vectors",
    "tangent_arrays",
    "fundamental_form",
    "fundamental_form_arrays",
    "orthonormal_frame",
    "frame_arrays",
    "surface_field_match",
    "field_match_arrays",
    "identity_tangents",
    "tangent_tangency_arrays",
    "surface_constraint_arrays",
]


class CurveKind(enum.Enum):
    CIRCLE = "circle"
    LORENTZIAN_CIRCLE = "lorentzian-circle"
    SPIRAL = "spiral"
    HYPERBOLIC_SPIRAL = "hyperbolic-spiral"

    @classmethod
    def parse(cls, value) -> CurveKind:
        if isinstance(value, cls):
            return value
        text = str(value).lower().replace("_", "-")
        try:
            return cls(text)
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown curve kind {value!r}; expected one of {choices}") from None

    @property
    def metric_sign(self) -> float:
        lorentzian = self in (CurveKind.LORENTZIAN_CIRCLE, CurveKind.HYPERBOLIC_SPIRAL)
        return -1.0 if lorentzian else 1.0

    @property
    def is_circle(self) -> bool:
        return self in (CurveKind.CIRCLE, CurveKind.LORENTZIAN_CIRCLE)


@dataclass(frozen=True)
class PlanarCurve:
    """``e^(rate t) (cos t, sin t)`` or ``e^(rate t) (cosh t, sinh t)``.

    The plane carries the metric ``dx1^2 + metric_sign dx2^2``.
    """

    kind: CurveKind
    rate: float = 0.0

    def __post_init__(self):
        kind = CurveKind.parse(self.kind)
        rate = float(self.rate)
        if not np.isfinite(rate):
            raise ValueError(f"rate must be finite, got {rate!r}")
        if kind.is_circle and rate != 0.0:
            raise ValueError(f"a {kind.value} has rate 0, got {rate!r}; use the spiral kind")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "rate", rate)

    @property
    def metric_sign(self) -> float:
        return self.kind.metric_sign

    def evaluate(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        growth = np.exp(self.rate * t)
        if self.metric_sign > 0:
            return np.stack([growth * np.cos(t), growth * np.sin(t)], axis=-1)
        return np.stack([growth * np.cosh(t), growth * np.sinh(t)], axis=-1)

    def derivative(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        growth = np.exp(self.rate * t)
        a = self.rate
        if self.metric_sign > 0:
            c, s = np.cos(t), np.sin(t)
            return np.stack([growth * (a * c - s), growth * (a * s + c)], axis=-1)
        c, s = np.cosh(t), np.sinh(t)
        return np.stack([growth * (a * c + s), growth * (a * s + c)], axis=-1)

    def plane_metric(self, u, v) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        return u[..., 0] * v[..., 0] + self.metric_sign * (u[..., 1] * v[..., 1])


class TensorRule(enum.Enum):
    TI = "ti"
    TJ = "tj"
    TIJ = "tij"

    @classmethod
    def parse(cls, value) -> TensorRule:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown tensor rule {value!r}; expected one of {choices}") from None

    @property
    def hyperquadric(self) -> HyperquadricKind:
        return HyperquadricKind(self.value)

    @property
    def fields(self) -> tuple[int, int]:
        """Basis field indices matching ``d/dt`` and ``d/ds`` on unit surfaces."""
        return {TensorRule.TI: (4, 2), TensorRule.TJ: (4, 3), TensorRule.TIJ: (3, 2)}[self]

    def plane_weights(self, alpha: float, beta: float) -> tuple[float, float]:
        """Second weights of the plane metrics of gamma and delta."""
        if self is TensorRule.TI:
            return (-alpha * beta, alpha)
        if self is TensorRule.TJ:
            return (-alpha * beta, beta)
        return (beta, alpha)

    def combine(self, g, d, alpha: float, beta: float) -> np.ndarray:
        """Tensor product of curve values ``g`` and ``d`` (each ``(..., 2)``)."""
        g1, g2 = g[..., 0], g[..., 1]
        d1, d2 = d[..., 0], d[..., 1]
        if self is TensorRule.TI:
            comps = [g1 * d1, g1 * d2, -alpha * (g2 * d2), g2 * d1]
        elif self is TensorRule.TJ:
            comps = [g1 * d1, -beta * (g2 * d2), g1 * d2, g2 * d1]
        else:
            comps = [g1 * d1, g1 * d2, g2 * d1, g2 * d2]
        return np.stack(comps, axis=-1)


_E, _L = 1.0, -1.0

# (rule, alpha, beta) -> metric signs required of (gamma, delta)
CASE_TABLE = {
    (TensorRule.TI, 1.0, 1.0): (_L, _E),
    (TensorRule.TI, 1.0, -1.0): (_E, _E),
    (TensorRule.TI, -1.0, 1.0): (_E, _L),
    (TensorRule.TI, -1.0, -1.0): (_L, _L),
    (TensorRule.TJ, 1.0, 1.0): (_L, _E),
    (TensorRule.TJ, 1.0, -1.0): (_E, _L),
    (TensorRule.TJ, -1.0, 1.0): (_E, _E),
    (TensorRule.TJ, -1.0, -1.0): (_L, _L),
    (TensorRule.TIJ, 1.0, 1.0): (_E, _E),
    (TensorRule.TIJ, 1.0, -1.0): (_L, _E),
    (TensorRule.TIJ, -1.0, 1.0): (_E, _L),
    (TensorRule.TIJ, -1.0, -1.0): (_L, _L),
}


def _kinds_for_sign(sign: float) -> tuple[CurveKind, CurveKind]:
    if sign > 0:
        return (CurveKind.CIRCLE, CurveKind.SPIRAL)
    return (CurveKind.LORENTZIAN_CIRCLE, CurveKind.HYPERBOLIC_SPIRAL)


def permitted_kinds(rule, alpha: float, beta: float):
    """Curve kinds allowed for gamma and for delta, as two tuples."""
    rule = TensorRule.parse(rule)
    try:
        g_sign, d_sign = CASE_TABLE[(rule, float(alpha), float(beta))]
    except KeyError:
        raise ValueError(f"tensor surfaces need alpha, beta in {{+1, -1}}, got ({alpha}, {beta})") from None
    return _kinds_for_sign(g_sign), _kinds_for_sign(d_sign)


@dataclass(frozen=True)
class TensorSurface:
    """``gamma (x) delta`` under ``rule`` in the algebra ``params``.

    Raises:
        CaseMismatch: at construction, when a curve kind is not the one the
            case table requires for ``(rule, alpha, beta)``.
    """

    gamma: PlanarCurve
    delta: PlanarCurve
    rule: TensorRule
    params: AlgebraParams

    def __post_init__(self):
        rule = TensorRule.parse(self.rule)
        object.__setattr__(self, "rule", rule)
        p = self.params
        g_kinds, d_kinds = permitted_kinds(rule, p.alpha, p.beta)
        bad = []
        if self.gamma.kind not in g_kinds:
            bad.append(f"gamma is {self.gamma.kind.value}, expected one of {[k.value for k in g_kinds]}")
        if self.delta.kind not in d_kinds:
            bad.append(f"delta is {self.delta.kind.value}, expected one of {[k.value for k in d_kinds]}")
        if bad:
            raise CaseMismatch(
                f"rule {rule.value} with alpha={p.alpha:g}, beta={p.beta:g}: " + "; ".join(bad)
            )

    @property
    def kind(self) -> HyperquadricKind:
        return self.rule.hyperquadric

    @property
    def is_unit(self) -> bool:
        return self.gamma.rate == 0.0 and self.delta.rate == 0.0

    def _combine(self, g, d):
        return self.rule.combine(g, d, self.params.alpha, self.params.beta)

    def _plane_metrics(self):
        wg, wd = self.rule.plane_weights(self.params.alpha, self.params.beta)

        def g1(u, v):
            return u[..., 0] * v[..., 0] + wg * (u[..., 1] * v[..., 1])

        def g2(u, v):
            return u[..., 0] * v[..., 0] + wd * (u[..., 1] * v[..., 1])

        return g1, g2


@dataclass(frozen=True)
class FundamentalForm:
    g11: float
    g12: float
    g22: float

    @property
    def determinant(self) -> float:
        return self.g11 * self.g22 - self.g12 * self.g12


@dataclass(frozen=True)
class HomomorphismReport:
    passed: bool
    max_deviation: float
    product_deviation: float
    inverse_deviation: float


@dataclass(frozen=True)
class FieldMatchReport:
    passed: bool
    t_residual: float
    s_residual: float
    diagonal_residual: float


# -- evaluation --------------------------------------------------------------


def evaluate_surface_arrays(S: TensorSurface, t, s) -> np.ndarray:
    t, s = np.broadcast_arrays(np.asarray(t, dtype=float), np.asarray(s, dtype=float))
    return S._combine(S.gamma.evaluate(t), S.delta.evaluate(s))


def evaluate_surface(S: TensorSurface, t: float, s: float) -> GBCNumber:
    return GBCNumber.from_array(evaluate_surface_arrays(S, t, s))


def diagonal_arrays(S: TensorSurface, t) -> np.ndarray:
    return evaluate_surface_arrays(S, t, t)


def diagonal_curve(S: TensorSurface, t: float) -> GBCNumber:
    """The one-parameter subgroup ``f(t, t)``."""
    return evaluate_surface(S, t, t)


def homomorphism_check(S: TensorSurface, t1, t2, tol: float = 1e-9) -> HomomorphismReport:
    """Check ``phi(t1) phi(t2) = phi(t1 + t2)`` and ``phi(-t) = phi(t)^-1``.

    ``t1`` and ``t2`` may be arrays; they are broadcast together and the
    worst deviation is reported. Deviations are relative to the largest term
    magnitude of each product.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    p = S.params
    t1, t2 = np.broadcast_arrays(np.asarray(t1, dtype=float), np.asarray(t2, dtype=float))
    phi1 = diagonal_arrays(S, t1)
    phi2 = diagonal_arrays(S, t2)
    prod = product_arrays(phi1, phi2, p.alpha, p.beta)
    prod_dev = relative_deviation(prod, diagonal_arrays(S, t1 + t2), abs_product_scale(phi1, phi2, p.alpha, p.beta))

    inv_dev = []
    for t, phi in ((t1, phi1), (t2, phi2)):
        inv = inverse_arrays(phi, S.kind, p.alpha, p.beta)
        back = diagonal_arrays(S, -t)
        mag = np.maximum(np.abs(inv).max(axis=-1), np.abs(back).max(axis=-1))
        inv_dev.append(relative_deviation(inv, back, mag))
    prod_max = float(np.max(prod_dev))
    inv_max = float(max(np.max(d) for d in inv_dev))
    worst = max(prod_max, inv_max)
    return HomomorphismReport(bool(worst <= tol), worst, prod_max, inv_max)


def tangent_arrays(S: TensorSurface, t, s) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form ``(df/dt, df/ds)``, each ``(..., 4)``."""
    t, s = np.broadcast_arrays(np.asarray(t, dtype=float), np.asarray(s, dtype=float))
    g, dg = S.gamma.evaluate(t), S.gamma.derivative(t)
    d, dd = S.delta.evaluate(s), S.delta.derivative(s)
    return S._combine(dg, d), S._combine(g, dd)


def tangent_vectors(S: TensorSurface, t: float, s: float) -> tuple[TangentVector, TangentVector]:
    base = evaluate_surface(S, t, s)
    ft, fs = tangent_arrays(S, t, s)
    return TangentVector(tuple(ft.tolist()), base), TangentVector(tuple(fs.tolist()), base)


def fundamental_form_arrays(S: TensorSurface, t, s):
    """First fundamental form computed two independent ways.

    Returns:
        ``(ambient, product, scale)``, each of shape ``(..., 3)`` holding
        ``(g11, g12, g22)``. ``ambient`` applies the hyperquadric metric to
        the tangent vectors; ``product`` multiplies plane metrics of the
        curves; ``scale`` is the absolute-weight ambient metric, a bound on
        the term sizes.
    """
    p = S.params
    kind = S.kind
    t, s = np.broadcast_arrays(np.asarray(t, dtype=float), np.asarray(s, dtype=float))
    ft, fs = tangent_arrays(S, t, s)
    ambient = np.stack(
        [
            metric_arrays(ft, ft, kind, p.alpha, p.beta),
            metric_arrays(ft, fs, kind, p.alpha, p.beta),
            metric_arrays(fs, fs, kind, p.alpha, p.beta),
        ],
        axis=-1,
    )
    g1, g2 = S._plane_metrics()
    gam, dgam = S.gamma.evaluate(t), S.gamma.derivative(t)
    dlt, ddlt = S.delta.evaluate(s), S.delta.derivative(s)
    product = np.stack(
        [
            g1(dgam, dgam) * g2(dlt, dlt),
            g1(gam, dgam) * g2(dlt, ddlt),
            g1(gam, gam) * g2(ddlt, ddlt),
        ],
        axis=-1,
    )
    scale = np.stack(
        [
            abs_metric_arrays(ft, ft, kind, p.alpha, p.beta),
            abs_metric_arrays(ft, fs, kind, p.alpha, p.beta),
            abs_metric_arrays(fs, fs, kind, p.alpha, p.beta),
        ],
        axis=-1,
    )
    return ambient, product, scale


def fundamental_form(S: TensorSurface, t: float, s: float, tol: float = 1e-9) -> FundamentalForm:
    """First fundamental form at ``(t, s)``, cross-checked against the product formula.

    Raises:
        FormMismatch: if the two computations differ by more than ``tol``
            relative to the term magnitudes.
    """
    ambient, product, scale = fundamental_form_arrays(S, t, s)
    dev = np.abs(ambient - product) / np.maximum(scale, np.finfo(float).tiny)
    if dev.max() > tol:
        raise FormMismatch(
            f"ambient {ambient.tolist()} and product {product.tolist()} forms differ at (t={t}, s={s})"
        )
    return FundamentalForm(*ambient.tolist())


def frame_arrays(S: TensorSurface, t, s, tol: float = 1e-10):
    """Orthonormal frame ``(e1, e2)`` plus a mask of degenerate samples.

    A sample is degenerate when ``|g11|`` is below ``tol`` times the tangent
    scale or the determinant ``g11 g22 - g12^2`` is below ``tol`` times its
    square, the sizes their rounding errors grow with. Frame entries of
    degenerate samples are NaN.
    """
    ft, fs = tangent_arrays(S, t, s)
    ambient, _, scale = fundamental_form_arrays(S, t, s)
    g11, g12, g22 = np.moveaxis(ambient, -1, 0)
    size = np.maximum(scale[..., 0], scale[..., 2])
    det = g11 * g22 - g12 * g12
    denom = np.abs(g11 * det)
    degenerate = (np.abs(g11) <= tol * size) | (np.abs(det) <= tol * size**2)
    with np.errstate(divide="ignore", invalid="ignore"):
        e1 = ft / np.sqrt(np.abs(g11))[..., None]
        e2 = (g11[..., None] * fs - g12[..., None] * ft) / np.sqrt(denom)[..., None]
    e1 = np.where(degenerate[..., None], np.nan, e1)
    e2 = np.where(degenerate[..., None], np.nan, e2)
    return e1, e2, degenerate


def orthonormal_frame(S: TensorSurface, t: float, s: float, tol: float = 1e-10):
    """Orthonormal tangent frame at ``(t, s)``.

    Returns:
        ``(e1, e2)`` with ``|g(e1, e1)| = |g(e2, e2)| = 1`` and ``g(e1, e2) = 0``.

    Raises:
        Degenerate: when the tangent plane is (numerically) lightlike.
    """
    e1, e2, degenerate = frame_arrays(S, t, s, tol)
    if bool(degenerate):
        raise Degenerate(f"degenerate tangent plane at (t={t}, s={s})")
    base = evaluate_surface(S, t, s)
    return TangentVector(tuple(e1.tolist()), base), TangentVector(tuple(e2.tolist()), base)


def field_match_arrays(S: TensorSurface, t, s):
    """Residuals of the left-invariant field identification.

    Returns ``(t_res, s_res, diag_res)``: the gaps between ``df/dt`` and
    ``X_a(f)``, between ``df/ds`` and ``X_b(f)``, and between ``phi'(t)`` and
    ``(X_a + X_b)(phi(t))``, each relative to ``max(1, max|f|)``.
    """
    if not S.is_unit:
        raise ValueError("field identification applies to unit (circle) surfaces only")
    p = S.params
    a, b = S.rule.fields
    t, s = np.broadcast_arrays(np.asarray(t, dtype=float), np.asarray(s, dtype=float))
    f = evaluate_surface_arrays(S, t, s)
    ft, fs = tangent_arrays(S, t, s)
    size = np.maximum(1.0, np.abs(f).max(axis=-1))
    t_res = relative_deviation(ft, basis_field_arrays(a, f, p.alpha, p.beta), size)
    s_res = relative_deviation(fs, basis_field_arrays(b, f, p.alpha, p.beta), size)

    phi = diagonal_arrays(S, t)
    dt, ds = tangent_arrays(S, t, t)
    field = basis_field_arrays(a, phi, p.alpha, p.beta) + basis_field_arrays(b, phi, p.alpha, p.beta)
    diag_res = relative_deviation(dt + ds, field, np.maximum(1.0, np.abs(phi).max(axis=-1)))
    return t_res, s_res, diag_res


def surface_field_match(S: TensorSurface, t: float, s: float, tol: float = 1e-12) -> FieldMatchReport:
    """Check that the coordinate tangents are the designated basis fields.

    For a unit surface ``df/dt`` equals ``X_a`` and ``df/ds`` equals ``X_b``
    at ``f(t, s)``, where ``(a, b)`` is ``(4, 2)`` for TI, ``(4, 3)`` for TJ and
    ``(3, 2)`` for TIJ; the diagonal subgroup moves along ``X_a + X_b``.
    """
    t_res, s_res, diag_res = (float(r) for r in field_match_arrays(S, t, s))
    worst = max(t_res, s_res, diag_res)
    return FieldMatchReport(worst <= tol, t_res, s_res, diag_res)


def identity_tangents(S: TensorSurface) -> tuple[GBCNumber, GBCNumber]:
    """``df/dt`` and ``df/ds`` at the identity ``f(0, 0)``, as numbers."""
    ft, fs = tangent_arrays(S, 0.0, 0.0)
    return GBCNumber.from_array(ft), GBCNumber.from_array(fs)


def tangent_tangency_arrays(S: TensorSurface, t, s) -> tuple[np.ndarray, np.ndarray]:
    """Constraint directional derivatives along ``df/dt`` and ``df/ds``."""
    p = S.params
    f = evaluate_surface_arrays(S, t, s)
    grad = constraint_gradient_arrays(f, S.kind, p.alpha, p.beta)
    ft, fs = tangent_arrays(S, t, s)
    return (grad * ft).sum(axis=-1), (grad * fs).sum(axis=-1)


def surface_constraint_arrays(S: TensorSurface, t, s) -> np.ndarray:
    p = S.params
    return constraint_arrays(evaluate_surface_arrays(S, t, s), S.kind, p.alpha, p.beta)

