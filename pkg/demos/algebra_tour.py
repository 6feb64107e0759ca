"""A short walk through the generalized bicomplex algebra.

Run with ``python3 demos/algebra_tour.py``.
"""

import numpy as np

from gbx import (
    AlgebraParams,
    GBCNumber,
    NotInvertible,
    conjugate,
    general_inverse,
    multiply,
    norm_form,
    rep_matrix,
)

p = AlgebraParams(2.0, 3.0)
i = GBCNumber(0, 1, 0, 0)
j = GBCNumber(0, 0, 1, 0)

print("With alpha = 2 and beta = 3:")
print("  i * i   =", multiply(i, i, p))
print("  j * j   =", multiply(j, j, p))
print("  ij * ij =", multiply(multiply(i, j, p), multiply(i, j, p), p))

x = GBCNumber(1.0, -2.0, 0.5, 3.0)
y = GBCNumber(0.25, 1.0, -1.0, 2.0)
xy = multiply(x, y, p)
print("\nThe product agrees with the matrix representation:")
print("  x * y           =", xy.as_array())
print("  rep(x) @ y      =", rep_matrix(x, p) @ y.as_array())
print("  rep(xy) - rep(x) rep(y) max entry:", np.abs(rep_matrix(xy, p) - rep_matrix(x, p) @ rep_matrix(y, p)).max())

print("\nEach conjugation turns x times its conjugate into a number with two vanishing components:")
for kind in ("ti", "tj", "tij"):
    nf = norm_form(x, kind, p)
    print(f"  {kind:3s}: x * x^{kind} = {multiply(x, conjugate(x, kind), p).as_array()}, scalar {nf.scalar:g}")

inv = general_inverse(x, p)
print("\nx^-1 =", inv.as_array())
print("x * x^-1 =", multiply(x, inv, p).as_array())

bicomplex = AlgebraParams(1.0, 1.0)
zero_divisor = GBCNumber(1.0, 0.0, 0.0, 1.0)
print("\nIn the bicomplex case 1 + ij is a zero divisor:")
print("  (1 + ij)(1 - ij) =", multiply(zero_divisor, GBCNumber(1, 0, 0, -1), bicomplex).as_array())
try:
    general_inverse(zero_divisor, bicomplex)
except NotInvertible as exc:
    print("  general_inverse raises NotInvertible:", exc)
