"""Left-invariant vector fields on the hyperquadric groups.

The field ``X_m`` at ``x`` is ``x`` times the m-th basis unit (1, i, j, ij for
m = 1..4). Because multiplication is linear, every ``X_m`` is a linear vector
field ``x -> A_m x`` whose coefficient matrix is the representation matrix of
the unit. The algebra is commutative, so all brackets vanish.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gbx.algebra import (
    ONE,
    UNIT_I,
    UNIT_IJ,
    UNIT_J,
    AlgebraParams,
    GBCNumber,
    product_arrays,
    rep_matrices,
)
from gbx.errors import IndexNotInBasis
from gbx.hyperquadric import (
    HyperquadricKind,
    HyperquadricPoint,
    constraint_gradient_arrays,
)

__all__ = [
    "TangentVector",
    "BASIS_UNITS",
    "lie_basis",
    "coefficient_matrix",
    "pushforward",
    "basis_field",
    "basis_field_arrays",
    "constraint_tangency",
    "tangency_arrays",
    "bracket",
    "identity_curve_arrays",
]

BASIS_UNITS = {1: ONE, 2: UNIT_I, 3: UNIT_J, 4: UNIT_IJ}

_FULL_BASIS = {
    HyperquadricKind.TI: (1, 2, 4),
    HyperquadricKind.TJ: (1, 3, 4),
    HyperquadricKind.TIJ: (1, 2, 3),
}


@dataclass(frozen=True)
class TangentVector:
    """Ambient components of a tangent vector at ``base``."""

    components: tuple[float, float, float, float]
    base: GBCNumber

    def __post_init__(self):
        comps = tuple(float(c) for c in self.components)
        if len(comps) != 4 or not np.isfinite(comps).all():
            raise ValueError(f"tangent components must be 4 finite reals, got {self.components!r}")
        object.__setattr__(self, "components", comps)

    def as_array(self) -> np.ndarray:
        return np.array(self.components)


def lie_basis(kind, unit: bool = False) -> tuple[int, ...]:
    """Indices of the basis fields spanning the Lie algebra of ``kind``.

    With ``unit=True`` the radial field ``X_1`` is dropped, leaving the basis
    of the unit subgroup.
    """
    indices = _FULL_BASIS[HyperquadricKind.parse(kind)]
    return indices[1:] if unit else indices


def _unit(m: int) -> GBCNumber:
    try:
        return BASIS_UNITS[m]
    except KeyError:
        raise IndexNotInBasis(f"basis index must be in 1..4, got {m!r}") from None


def coefficient_matrix(m: int, p: AlgebraParams) -> np.ndarray:
    """Constant 4x4 matrix ``A_m`` with ``X_m(x) = A_m @ x``."""
    return rep_matrices(_unit(m).as_array(), p.alpha, p.beta)


def pushforward(x: GBCNumber, zeta, p: AlgebraParams) -> TangentVector:
    """Push a tangent vector at the identity forward by left translation ``L_x``.

    Args:
        x: the translating group element.
        zeta: a :class:`TangentVector` based at the identity, or its four
            components.
        p: algebra parameters.
    """
    if isinstance(zeta, TangentVector):
        if zeta.base != ONE:
            raise ValueError(f"pushforward expects a vector at the identity, got base {zeta.base}")
        zeta = zeta.as_array()
    comps = product_arrays(x.as_array(), np.asarray(zeta, dtype=float), p.alpha, p.beta)
    return TangentVector(tuple(comps.tolist()), x)


def _check_index(kind, m: int) -> HyperquadricKind:
    kind = HyperquadricKind.parse(kind)
    if m not in _FULL_BASIS[kind]:
        raise IndexNotInBasis(
            f"X_{m} is not a field on M_{kind.value}; available: {_FULL_BASIS[kind]}"
        )
    return kind


def basis_field_arrays(m: int, x, alpha: float, beta: float) -> np.ndarray:
    """``X_m`` at every point of ``x``; shape ``(..., 4)``. No basis check."""
    return product_arrays(x, _unit(m).as_array(), alpha, beta)


def basis_field(k, m: int, x: GBCNumber, p: AlgebraParams) -> TangentVector:
    """Left-invariant field ``X_m`` of hyperquadric ``k`` evaluated at ``x``.

    Raises:
        IndexNotInBasis: if ``X_m`` is not tangent to that hyperquadric.
    """
    _check_index(k, m)
    return pushforward(x, _unit(m).as_array(), p)


def tangency_arrays(m: int, x, kind, alpha: float, beta: float) -> np.ndarray:
    """Directional derivative of the constraint along ``X_m``; shape ``(...)``."""
    grad = constraint_gradient_arrays(x, kind, alpha, beta)
    return (grad * basis_field_arrays(m, x, alpha, beta)).sum(axis=-1)


def constraint_tangency(k, m: int, x: HyperquadricPoint) -> float:
    """``grad(constraint) . X_m`` at ``x``; zero for every basis field on members."""
    kind = _check_index(k, m)
    p = x.params
    return float(tangency_arrays(m, x.value.as_array(), kind, p.alpha, p.beta))


def bracket(
    k,
    m: int,
    n: int,
    x: GBCNumber,
    p: AlgebraParams,
    h: float = 1e-5,
    method: str = "exact",
) -> TangentVector:
    """Lie bracket ``[X_m, X_n]`` at ``x``.

    ``method="exact"`` uses the constant coefficient matrices,
    ``[X_m, X_n](x) = (A_n A_m - A_m A_n) x``. ``method="finite_difference"``
    approximates the Jacobians of both fields with central differences of step
    ``h`` instead, as an independent check.
    """
    _check_index(k, m)
    _check_index(k, n)
    point = x.as_array()
    if method == "exact":
        a_m = coefficient_matrix(m, p)
        a_n = coefficient_matrix(n, p)
        comps = (a_n @ a_m - a_m @ a_n) @ point
    elif method == "finite_difference":
        if not h > 0:
            raise ValueError(f"step h must be positive, got {h!r}")

        def jacobian(idx):
            cols = []
            for e in np.eye(4):
                fwd = basis_field_arrays(idx, point + h * e, p.alpha, p.beta)
                bwd = basis_field_arrays(idx, point - h * e, p.alpha, p.beta)
                cols.append((fwd - bwd) / (2 * h))
            return np.stack(cols, axis=-1)

        x_m = basis_field_arrays(m, point, p.alpha, p.beta)
        x_n = basis_field_arrays(n, point, p.alpha, p.beta)
        comps = jacobian(n) @ x_m - jacobian(m) @ x_n
    else:
        raise ValueError(f"unknown bracket method {method!r}")
    return TangentVector(tuple(comps.tolist()), x)


def identity_curve_arrays(kind, zeta, t, alpha: float, beta: float) -> np.ndarray:
    """A curve ``b`` on the hyperquadric with ``b(0) = 1`` and ``b'(0) = zeta``.

    ``zeta`` must have a zero in the coordinate missing from the Lie basis
    (x3 for TI, x2 for TJ, x4 for TIJ). The curve is ``1 + t zeta`` with that
    coordinate re-solved from the constraint, which is linear in it with
    coefficient ``x1``; the correction is ``O(t^2)``. Shape ``(..., 4)`` for
    ``t`` of shape ``(...)``.
    """
    kind = HyperquadricKind.parse(kind)
    zeta = np.asarray(zeta, dtype=float)
    dropped = ({1, 2, 3, 4} - set(_FULL_BASIS[kind])).pop() - 1
    if zeta[..., dropped].any():
        raise IndexNotInBasis(f"zeta has a component along X_{dropped + 1}, which is not tangent to M_{kind.value}")
    t = np.asarray(t, dtype=float)[..., None]
    b = np.array([1.0, 0.0, 0.0, 0.0]) + t * zeta
    b1, b2, b3, b4 = np.moveaxis(b, -1, 0)
    if kind is HyperquadricKind.TI:
        b[..., 2] = -alpha * (b2 * b4) / b1
    elif kind is HyperquadricKind.TJ:
        b[..., 1] = -beta * (b3 * b4) / b1
    else:
        b[..., 3] = (b2 * b3) / b1
    return b
