"""Export sampled tensor product surfaces as CSV tables or OBJ meshes."""

from __future__ import annotations

import enum
import os
from pathlib import Path

import numpy as np

from gbx.errors import MeshExportError
from gbx.hyperquadric import constraint_arrays, metric_arrays
from gbx.surfaces import TensorSurface, evaluate_surface_arrays

__all__ = ["MeshFormat", "MeshGrid", "sample_grid", "export_mesh", "CSV_HEADER"]

CSV_HEADER = "t,s,x1,x2,x3,x4,constraint,norm"


class MeshFormat(enum.Enum):
    CSV = "csv"
    OBJ = "obj"

    @classmethod
    def parse(cls, value) -> MeshFormat:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown mesh format {value!r}; expected csv or obj") from None


class MeshGrid:
    """A regular ``nt x ns`` sample of a surface, flattened t-major."""

    def __init__(self, t, s, points, constraint, norm, nt, ns):
        self.t = t
        self.s = s
        self.points = points
        self.constraint = constraint
        self.norm = norm
        self.nt = nt
        self.ns = ns

    @property
    def n_vertices(self) -> int:
        return self.nt * self.ns

    def triangles(self) -> np.ndarray:
        """Zero-based vertex indices, two triangles per grid cell."""
        i, j = np.meshgrid(np.arange(self.nt - 1), np.arange(self.ns - 1), indexing="ij")
        a = (i * self.ns + j).ravel()
        b = a + self.ns
        c = b + 1
        d = a + 1
        return np.stack([np.stack([a, b, c], -1), np.stack([a, c, d], -1)], axis=1).reshape(-1, 3)


def sample_grid(S: TensorSurface, t_range=(0.0, 1.0), s_range=(0.0, 1.0), nt: int = 32, ns: int = 32) -> MeshGrid:
    if nt < 2 or ns < 2:
        raise ValueError(f"mesh needs nt, ns >= 2, got nt={nt}, ns={ns}")
    p = S.params
    tt, ss = np.meshgrid(np.linspace(*t_range, nt), np.linspace(*s_range, ns), indexing="ij")
    t, s = tt.ravel(), ss.ravel()
    points = evaluate_surface_arrays(S, t, s)
    constraint = constraint_arrays(points, S.kind, p.alpha, p.beta)
    norm = metric_arrays(points, points, S.kind, p.alpha, p.beta)
    return MeshGrid(t, s, points, constraint, norm, nt, ns)


def _fmt(v) -> str:
    return f"{v:.17g}"


def _csv_lines(grid: MeshGrid):
    yield CSV_HEADER
    for k in range(grid.n_vertices):
        row = [grid.t[k], grid.s[k], *grid.points[k], grid.constraint[k], grid.norm[k]]
        yield ",".join(_fmt(v) for v in row)


def _obj_lines(grid: MeshGrid):
    for x1, x2, x3, x4 in grid.points:
        yield f"# x4={_fmt(x4)}"
        yield f"v {_fmt(x1)} {_fmt(x2)} {_fmt(x3)}"
    for a, b, c in grid.triangles() + 1:
        yield f"f {a} {b} {c}"


def export_mesh(
    S: TensorSurface,
    path,
    t_range=(0.0, 1.0),
    s_range=(0.0, 1.0),
    nt: int = 32,
    ns: int = 32,
    fmt="obj",
) -> Path:
    """Sample ``S`` on a regular grid and write it to ``path``.

    CSV rows hold ``t, s, x1..x4``, the constraint residual and the metric
    norm. OBJ vertices are ``(x1, x2, x3)``, each preceded by a ``# x4=``
    comment carrying the dropped coordinate, with grid cells split into two
    triangles. Numbers are written with 17 significant digits and LF endings.

    Raises:
        MeshExportError: if the file cannot be written.
    """
    fmt = MeshFormat.parse(fmt)
    grid = sample_grid(S, t_range, s_range, nt, ns)
    lines = _csv_lines(grid) if fmt is MeshFormat.CSV else _obj_lines(grid)
    path = Path(os.fspath(path))
    try:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            for line in lines:
                fh.write(line)
                fh.write("\n")
    except OSError as exc:
        raise MeshExportError(f"cannot write mesh to {path}: {exc}") from exc
    return path
