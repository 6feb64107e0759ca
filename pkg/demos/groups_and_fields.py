"""Hyperquadric groups and their left-invariant vector fields.

Run with ``python3 demos/groups_and_fields.py``.
"""

import numpy as np

from gbx import (
    AlgebraParams,
    GBCNumber,
    NotOnHyperquadric,
    basis_field,
    bracket,
    constraint_tangency,
    group_inverse,
    group_product,
    lie_basis,
    membership,
    metric_form,
    multiply,
    pushforward,
    unit_membership,
)
from gbx.lie import BASIS_UNITS

p = AlgebraParams(1.0, 1.0)

for kind in ("ti", "tj", "tij"):
    form = metric_form(kind, p)
    print(f"{kind}: metric weights {form.weights}, index {form.index}, Lie basis X{lie_basis(kind)}")

print("\nMembers of the ti hyperquadric satisfy x1 x3 + alpha x2 x4 = 0.")
x = membership(GBCNumber(1.0, 1.0, 0.0, 0.0), "ti", p)
y = membership(GBCNumber(1.0, 0.0, 0.0, 5.0), "ti", p)
xy = group_product(x, y)
print("  x =", x.value.as_array(), "norm", x.norm)
print("  y =", y.value.as_array(), "norm", y.norm)
print("  x * y =", xy.value.as_array(), "norm", xy.norm, "(product of the norms)")
print("  y^-1 =", group_inverse(y).value.as_array())
print("  x is in the unit subgroup:", unit_membership(x))

try:
    membership(GBCNumber(1.0, 0.0, 0.0, 1.0), "ti", p)
except NotOnHyperquadric as exc:
    print("  1 + ij has zero norm and is rejected:", exc.reason)

print("\nLeft-invariant fields are pushforwards of the basis units:")
for m in lie_basis("ti"):
    field = basis_field("ti", m, xy.value, p)
    pushed = pushforward(xy.value, BASIS_UNITS[m].as_array(), p)
    print(f"  X{m}(xy) = {field.components}, equal to the pushforward: {field.components == pushed.components}")
    print(f"           tangency residual {constraint_tangency('ti', m, xy):g}")

print("\nThe algebra is commutative, so every bracket vanishes:")
for m in lie_basis("ti"):
    for n in lie_basis("ti"):
        if m < n:
            fd = bracket("ti", m, n, xy.value, p, h=1e-5, method="finite_difference").as_array()
            print(f"  [X{m}, X{n}] exact {bracket('ti', m, n, xy.value, p).components}, finite difference max {np.abs(fd).max():.1e}")

print("\nLeft invariance: X4(g x) = g X4(x)")
lhs = basis_field("ti", 4, multiply(x.value, y.value, p), p).as_array()
rhs = multiply(x.value, GBCNumber.from_array(basis_field("ti", 4, y.value, p).as_array()), p).as_array()
print("  ", lhs, rhs)
