"""Tensor product surfaces, their diagonal subgroups, and mesh export.

Run with ``python3 demos/surfaces_and_mesh.py [output-directory]``.
"""

import sys
import tempfile
from pathlib import Path

import numpy as np

from gbx import (
    AlgebraParams,
    CaseMismatch,
    PlanarCurve,
    TensorSurface,
    diagonal_curve,
    evaluate_surface,
    export_mesh,
    fundamental_form,
    homomorphism_check,
    orthonormal_frame,
    permitted_kinds,
    surface_field_match,
)

p = AlgebraParams(1.0, 1.0)
gamma_kinds, delta_kinds = permitted_kinds("ti", 1.0, 1.0)
print("Curve kinds allowed for the ti rule when alpha = beta = 1:")
print("  gamma:", ", ".join(k.value for k in gamma_kinds))
print("  delta:", ", ".join(k.value for k in delta_kinds))
try:
    TensorSurface(PlanarCurve("circle"), PlanarCurve("circle"), "ti", p)
except CaseMismatch as exc:
    print("A Euclidean circle in the first slot is rejected:", exc)

S = TensorSurface(PlanarCurve("lorentzian-circle"), PlanarCurve("circle"), "ti", p)
print("\nUnit surface f(t, s) under the ti rule")
print("  f(0, 0)     =", evaluate_surface(S, 0.0, 0.0))
print("  f(0.4, 1.3) =", evaluate_surface(S, 0.4, 1.3).as_array())
print("  phi(0.7)    =", diagonal_curve(S, 0.7).as_array())

grid = np.linspace(-2.0, 2.0, 17)
t1, t2 = np.meshgrid(grid, grid)
report = homomorphism_check(S, t1, t2)
print(f"  phi(t1) phi(t2) = phi(t1 + t2) on a 17x17 grid: {report.passed} (max deviation {report.max_deviation:.1e})")
match = surface_field_match(S, 0.4, 1.3)
print(f"  tangents are the designated fields X4 and X2: {match.passed}")

form = fundamental_form(S, 0.4, 1.3)
e1, e2 = orthonormal_frame(S, 0.4, 1.3)
print(f"  first fundamental form g11={form.g11:g} g12={form.g12:g} g22={form.g22:g}")
print("  orthonormal frame e1 =", e1.components, "e2 =", e2.components)

spiral = TensorSurface(PlanarCurve("hyperbolic-spiral", 0.2), PlanarCurve("spiral", -0.1), "ti", p)
print("\nA spiral surface is not unit but its diagonal is still a subgroup:")
report = homomorphism_check(spiral, t1, t2)
print(f"  passed {report.passed}, max deviation {report.max_deviation:.1e}")

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp())
obj = export_mesh(S, out_dir / "ti_unit.obj", (-1, 1), (-np.pi, np.pi), 64, 64, "obj")
csv = export_mesh(spiral, out_dir / "ti_spiral.csv", (-1, 1), (-1, 1), 32, 32, "csv")
print(f"\nWrote {obj} and {csv}")
