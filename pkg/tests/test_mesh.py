import numpy as np
import pytest

from gbx.algebra import AlgebraParams
from gbx.errors import MeshExportError
from gbx.mesh import CSV_HEADER, MeshFormat, export_mesh, sample_grid
from gbx.surfaces import PlanarCurve, TensorRule, TensorSurface


@pytest.fixture
def tij_circles():
    return TensorSurface(PlanarCurve("circle"), PlanarCurve("circle"), TensorRule.TIJ, AlgebraParams(1.0, 1.0))


@pytest.fixture
def ti_spirals():
    return TensorSurface(
        PlanarCurve("hyperbolic-spiral", 0.2), PlanarCurve("spiral", -0.1), TensorRule.TI, AlgebraParams(1.0, 1.0)
    )


def read_obj(path):
    lines = path.read_text().split("\n")
    assert lines[-1] == ""
    vertices = [list(map(float, ln.split()[1:])) for ln in lines if ln.startswith("v ")]
    x4 = [float(ln.split("=")[1]) for ln in lines if ln.startswith("# x4=")]
    faces = [list(map(int, ln.split()[1:])) for ln in lines if ln.startswith("f ")]
    return np.array(vertices), np.array(x4), np.array(faces)


def test_minimal_grid(tmp_path, tij_circles):
    path = export_mesh(tij_circles, tmp_path / "m.obj", (0, 1), (0, 1), 2, 2, "obj")
    v, x4, f = read_obj(path)
    assert v.shape == (4, 3)
    assert x4.shape == (4,)
    assert f.tolist() == [[1, 3, 4], [1, 4, 2]]


def test_triangles_cover_every_cell(tij_circles):
    grid = sample_grid(tij_circles, (0, 1), (0, 2), 4, 3)
    tri = grid.triangles()
    assert tri.shape == (2 * 3 * 2, 3)
    assert tri.min() == 0 and tri.max() == grid.n_vertices - 1


def test_grid_is_t_major(tij_circles):
    grid = sample_grid(tij_circles, (0, 1), (10, 12), 2, 3)
    np.testing.assert_array_equal(grid.t, [0, 0, 0, 1, 1, 1])
    np.testing.assert_array_equal(grid.s, [10, 11, 12, 10, 11, 12])


def test_obj_vertices_carry_the_fourth_coordinate(tmp_path, ti_spirals):
    path = export_mesh(ti_spirals, tmp_path / "s.obj", (-1, 1), (-2, 2), 5, 7)
    v, x4, _ = read_obj(path)
    grid = sample_grid(ti_spirals, (-1, 1), (-2, 2), 5, 7)
    np.testing.assert_array_equal(np.column_stack([v, x4]), grid.points)


def test_unit_mesh_norms(tmp_path, tij_circles):
    path = export_mesh(tij_circles, tmp_path / "u.csv", (-3, 3), (-3, 3), 64, 64, MeshFormat.CSV)
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    assert data.shape == (4096, 8)
    assert np.abs(data[:, 7] - 1.0).max() <= 1e-12


def test_csv_layout(tmp_path, ti_spirals):
    path = export_mesh(ti_spirals, tmp_path / "s.csv", (-3, 3), (-3, 3), 9, 11, "csv")
    raw = path.read_bytes()
    assert b"\r" not in raw
    text = raw.decode("ascii")
    assert text.splitlines()[0] == CSV_HEADER
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    assert data.shape == (99, 8)
    row_max = np.abs(data[:, 2:6]).max(axis=1)
    assert (np.abs(data[:, 6]) <= 1e-12 * np.maximum(row_max, 1.0)).all()
    # 17 significant digits round-trip exactly
    grid = sample_grid(ti_spirals, (-3, 3), (-3, 3), 9, 11)
    np.testing.assert_array_equal(data[:, 2:6], grid.points)


def test_grid_needs_two_samples_per_side(tij_circles, tmp_path):
    with pytest.raises(ValueError):
        export_mesh(tij_circles, tmp_path / "x.obj", nt=1, ns=4)


def test_unknown_format(tij_circles, tmp_path):
    with pytest.raises(ValueError):
        export_mesh(tij_circles, tmp_path / "x.ply", fmt="ply")


def test_write_failure_names_the_path(tij_circles, tmp_path):
    target = tmp_path / "missing" / "x.obj"
    with pytest.raises(MeshExportError, match="missing"):
        export_mesh(tij_circles, target)
    with pytest.raises(OSError):
        export_mesh(tij_circles, target)
