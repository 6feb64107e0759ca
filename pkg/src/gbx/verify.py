"""Randomized verification suites and their structured reports.

Each suite draws its samples from a generator seeded by :class:`RunConfig`,
so identical configurations produce identical reports. A report holds one
:class:`CaseResult` per checked identity; a case passes iff its worst
deviation is within the case tolerance.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from gbx.algebra import (
    AlgebraParams,
    ConjugationKind,
    GBCNumber,
    NotInvertible,
    abs_product_arrays,
    abs_product_scale,
    conjugate_arrays,
    general_inverse,
    norm_form_arrays,
    product_arrays,
    relative_deviation,
    rep_matrices,
)
from gbx.hyperquadric import (
    HyperquadricKind,
    abs_metric_arrays,
    constraint_arrays,
    constraint_gradient_arrays,
    inverse_arrays,
    metric_arrays,
    sample_members,
)
from gbx.lie import (
    BASIS_UNITS,
    basis_field_arrays,
    bracket,
    coefficient_matrix,
    identity_curve_arrays,
    lie_basis,
    tangency_arrays,
)
from gbx.mesh import MeshFormat, export_mesh, sample_grid
from gbx.surfaces import (
    TensorRule,
    TensorSurface,
    evaluate_surface_arrays,
    field_match_arrays,
    frame_arrays,
    fundamental_form_arrays,
    homomorphism_check,
    tangent_arrays,
)

__all__ = [
    "ConfigError",
    "RunConfig",
    "CaseResult",
    "VerificationReport",
    "run_algebra_suite",
    "run_group_suite",
    "run_surface_suite",
    "run_mesh_export",
    "FD_STEP",
    "FD_TOL",
]

# central-difference step and tolerance for tangent and bracket cross-checks
FD_STEP = 1e-5
FD_TOL = 1e-6
# grid for the one-parameter subgroup checks
HOMOMORPHISM_GRID = np.linspace(-2.0, 2.0, 17)
# parameter box for random surface samples
SURFACE_DOMAIN = (-3.0, 3.0)
# coefficient box for random algebra samples
ALGEBRA_DOMAIN = (-10.0, 10.0)
# general inverse goes through an LU per sample, so it sees fewer samples
INVERSE_SAMPLES = 500
# curve parameters for the pushforward difference quotients
QUOTIENT_STEPS = (1e-2, 1e-3, 1e-4)


class ConfigError(ValueError):
    """Invalid run configuration."""


@dataclass(frozen=True)
class RunConfig:
    alpha: float = 1.0
    beta: float = 1.0
    seed: int = 0
    samples: int = 10_000
    tol_rel: float = 1e-9
    tol_abs: float = 1e-12
    output_path: str | None = None

    def __post_init__(self):
        try:
            AlgebraParams(self.alpha, self.beta)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if not isinstance(self.seed, (int, np.integer)) or not 0 <= int(self.seed) < 2**64:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        if not isinstance(self.samples, (int, np.integer)) or self.samples < 1:
            raise ConfigError(f"samples must be a positive integer, got {self.samples!r}")
        for name in ("tol_rel", "tol_abs"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ConfigError(f"{name} must be positive, got {value!r}")
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))
        object.__setattr__(self, "seed", int(self.seed))
        object.__setattr__(self, "samples", int(self.samples))

    @property
    def params(self) -> AlgebraParams:
        return AlgebraParams(self.alpha, self.beta)

    def rng(self, stream: int = 0) -> np.random.Generator:
        return np.random.default_rng([self.seed, stream])


@dataclass(frozen=True)
class CaseResult:
    name: str
    passed: bool
    max_deviation: float
    samples: int
    tolerance: float


@dataclass
class VerificationReport:
    suite: str
    cases: list[CaseResult]
    config_echo: dict
    paper_anchor: str
    context: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "cases": [asdict(c) for c in self.cases],
            "config_echo": self.config_echo,
            "paper_anchor": self.paper_anchor,
            "context": self.context,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        data = json.loads(text)
        cases = [CaseResult(**c) for c in data["cases"]]
        return cls(data["suite"], cases, data["config_echo"], data["paper_anchor"], data.get("context", {}))

    def summary(self) -> str:
        label = self.suite
        if "kind" in self.context:
            label += f" kind={self.context['kind']}"
        if "rule" in self.context:
            ctx = self.context
            label += f" rule={ctx['rule']} gamma={ctx['gamma']['kind']} delta={ctx['delta']['kind']}"
        lines = [f"[{'PASS' if self.passed else 'FAIL'}] {label}: {self.paper_anchor}"]
        for c in self.cases:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(
                f"  {mark} {c.name:<34} max_dev={c.max_deviation:.3e} tol={c.tolerance:.1e} n={c.samples}"
            )
        return "\n".join(lines)


def _case(name: str, deviations, tol: float) -> CaseResult:
    dev = np.asarray(deviations, dtype=float).ravel()
    worst = float(dev.max()) if dev.size else 0.0
    if not math.isfinite(worst) or np.isnan(dev).any():
        worst = math.inf
    return CaseResult(name, bool(worst <= tol), worst, int(dev.size), float(tol))


def _echo(config: RunConfig) -> dict:
    return asdict(config)


def _max_abs(x) -> np.ndarray:
    return np.abs(x).max(axis=-1)


# -- algebra -----------------------------------------------------------------


def run_algebra_suite(config: RunConfig) -> VerificationReport:
    """Real-algebra axioms, conjugation laws, norm forms and the matrix representation."""
    a, b = config.alpha, config.beta
    n = config.samples
    rng = config.rng(1)
    lo, hi = ALGEBRA_DOMAIN
    x, y, z = (rng.uniform(lo, hi, size=(n, 4)) for _ in range(3))
    lam, dlt = rng.uniform(lo, hi, size=(2, n, 1))
    tr, ta = config.tol_rel, config.tol_abs

    def mul(u, v):
        return product_arrays(u, v, a, b)

    def absmul(u, v):
        return abs_product_arrays(u, v, a, b)

    cases = []
    xy = mul(x, y)
    cases.append(_case("commutativity", _max_abs(xy - mul(y, x)), 0.0))

    scale3 = absmul(absmul(x, y), z).max(axis=-1)
    cases.append(_case("associativity", relative_deviation(mul(xy, z), mul(x, mul(y, z)), scale3), tr))

    dist_scale = absmul(x, np.abs(y) + np.abs(z)).max(axis=-1)
    cases.append(_case("distributivity", relative_deviation(mul(x, y + z), xy + mul(x, z), dist_scale), tr))

    bil_scale = np.abs(lam[..., 0]) * absmul(x, y).max(axis=-1)
    lxy = lam * xy
    dev = np.maximum(
        relative_deviation(mul(lam * x, y), lxy, bil_scale),
        relative_deviation(mul(x, lam * y), lxy, bil_scale),
    )
    cases.append(_case("scalar_bilinearity", dev, tr))

    one = np.array([1.0, 0.0, 0.0, 0.0])
    cases.append(_case("unit_element", _max_abs(mul(one, x) - x), 0.0))

    lin, inv, mult = [], [], []
    for kind in ConjugationKind:
        combo = lam * x + dlt * y
        lin_scale = _max_abs(np.abs(lam * x) + np.abs(dlt * y))
        lin.append(
            relative_deviation(
                conjugate_arrays(combo, kind),
                lam * conjugate_arrays(x, kind) + dlt * conjugate_arrays(y, kind),
                lin_scale,
            )
        )
        inv.append(_max_abs(conjugate_arrays(conjugate_arrays(x, kind), kind) - x))
        mult.append(
            relative_deviation(
                conjugate_arrays(xy, kind),
                mul(conjugate_arrays(x, kind), conjugate_arrays(y, kind)),
                absmul(x, y).max(axis=-1),
            )
        )
    cases.append(_case("conjugation_linearity", np.max(lin, axis=0), tr))
    cases.append(_case("conjugation_involution", np.max(inv, axis=0), 0.0))
    cases.append(_case("conjugation_multiplicativity", np.max(mult, axis=0), tr))

    # x * conj(x): two exact zeros, the other two match the explicit expansions
    x1, x2, x3, x4 = np.moveaxis(x, -1, 0)
    expansions = {
        ConjugationKind.TI: (x1**2 + a * x2**2 - b * x3**2 - a * b * x4**2, 2 * (x1 * x3 + a * x2 * x4), (1, 3)),
        ConjugationKind.TJ: (x1**2 - a * x2**2 + b * x3**2 - a * b * x4**2, 2 * (x1 * x2 + b * x3 * x4), (2, 3)),
        ConjugationKind.TIJ: (x1**2 + a * x2**2 + b * x3**2 + a * b * x4**2, 2 * (x1 * x4 - x2 * x3), (1, 2)),
    }
    zeros, matches = [], []
    for kind, (scalar_ref, residual_ref, zero_slots) in expansions.items():
        full = mul(x, conjugate_arrays(x, kind))
        zeros.append(np.abs(full[:, list(zero_slots)]).max(axis=-1))
        scalar, residual = norm_form_arrays(x, kind, a, b)
        scale = absmul(x, x).max(axis=-1)
        matches.append(np.maximum(np.abs(scalar - scalar_ref), np.abs(residual - residual_ref)) / scale)
    cases.append(_case("norm_form_vanishing_components", np.max(zeros, axis=0), ta))
    cases.append(_case("norm_form_expansions", np.max(matches, axis=0), tr))

    rx, ry = rep_matrices(x, a, b), rep_matrices(y, a, b)
    mat_prod = rx @ ry
    mat_scale = (np.abs(rx) @ np.abs(ry)).max(axis=(-2, -1))
    iso = np.abs(rep_matrices(xy, a, b) - mat_prod).max(axis=(-2, -1)) / mat_scale
    cases.append(_case("matrix_isomorphism", iso, tr))
    cases.append(_case("matrix_product_oracle", relative_deviation(xy, mat_prod[..., :, 0], absmul(x, y).max(axis=-1)), tr))
    additive = np.abs(rep_matrices(x + y, a, b) - (rx + ry)).max(axis=(-2, -1))
    homog = np.abs(rep_matrices(lam * x, a, b) - lam[..., None] * rx).max(axis=(-2, -1))
    lin_mat_scale = np.maximum(np.abs(rx).max(axis=(-2, -1)), 1.0) * np.maximum(1.0, np.abs(lam[..., 0]))
    lin_mat_scale = lin_mat_scale + np.abs(ry).max(axis=(-2, -1))
    cases.append(_case("matrix_linearity", np.maximum(additive, homog) / lin_mat_scale, tr))

    p = config.params
    inv_dev = []
    for row in x[: min(n, INVERSE_SAMPLES)]:
        u = GBCNumber.from_array(row)
        try:
            v = general_inverse(u, p).as_array()
        except NotInvertible:
            continue
        inv_dev.append(relative_deviation(mul(row, v), one, abs_product_scale(row, v, a, b)))
    cases.append(_case("general_inverse", inv_dev, tr))

    return VerificationReport(
        "algebra",
        cases,
        _echo(config),
        "generalized bicomplex algebra: real-algebra axioms, conjugation laws, matrix isomorphism",
    )


# -- hyperquadric groups -----------------------------------------------------


def _unit_members(rng, n, kind, a, b) -> np.ndarray:
    found = np.empty((0, 4))
    while found.shape[0] < n:
        x = sample_members(rng, 2 * n, kind, a, b)
        norm = metric_arrays(x, x, kind, a, b)
        x = x[norm > 0] / np.sqrt(norm[norm > 0])[:, None]
        found = np.concatenate([found, x])
    return found[:n]


def run_group_suite(config: RunConfig, kind) -> VerificationReport:
    """Group laws, unit subgroup and Lie algebra checks on one hyperquadric."""
    kind = HyperquadricKind.parse(kind)
    a, b = config.alpha, config.beta
    n = config.samples
    rng = config.rng(2)
    tr, ta = config.tol_rel, config.tol_abs

    def mul(u, v):
        return product_arrays(u, v, a, b)

    def norm(u):
        return metric_arrays(u, u, kind, a, b)

    def abs_norm(u):
        return abs_metric_arrays(u, u, kind, a, b)

    def constraint_dev(u):
        return np.abs(constraint_arrays(u, kind, a, b)) / np.maximum(1.0, _max_abs(u) ** 2)

    x = sample_members(rng, n, kind, a, b, min_norm=ta)
    y = sample_members(rng, n, kind, a, b, min_norm=ta)
    z = sample_members(rng, n, kind, a, b, min_norm=ta)
    one = np.array([1.0, 0.0, 0.0, 0.0])
    cases = [
        _case("member_generation_constraint", constraint_dev(x), tr),
        _case("member_generation_norm_nonzero", (np.abs(norm(x)) <= ta).astype(float), 0.0),
    ]

    xy = mul(x, y)
    cases.append(_case("closure_constraint", constraint_dev(xy), tr))
    cases.append(_case("closure_norm_nonzero", (np.abs(norm(xy)) <= ta).astype(float), 0.0))

    mult_scale = np.maximum(abs_norm(xy), abs_norm(x) * abs_norm(y))
    cases.append(_case("norm_multiplicativity", np.abs(norm(xy) - norm(x) * norm(y)) / mult_scale, tr))

    scale3 = abs_product_arrays(abs_product_arrays(x, y, a, b), z, a, b)
    cases.append(_case("associativity", relative_deviation(mul(xy, z), mul(x, mul(y, z)), scale3.max(axis=-1)), tr))
    cases.append(_case("identity", _max_abs(mul(one, x) - x), 0.0))

    x_inv = inverse_arrays(x, kind, a, b)
    cases.append(_case("inverse_right", _max_abs(mul(x, x_inv) - one), tr))
    cases.append(_case("inverse_left", _max_abs(mul(x_inv, x) - one), tr))
    cases.append(_case("inverse_membership", constraint_dev(x_inv), tr))

    u = _unit_members(rng, n, kind, a, b)
    v = _unit_members(rng, n, kind, a, b)
    uv = mul(u, v)
    unit_dev = np.maximum(
        np.abs(norm(uv) - 1.0) / np.maximum(1.0, abs_norm(uv)),
        np.abs(norm(inverse_arrays(u, kind, a, b)) - 1.0) / np.maximum(1.0, abs_norm(u)),
    )
    cases.append(_case("unit_subgroup_closure", unit_dev, tr))
    cases.append(_case("unit_subgroup_constraint", constraint_dev(uv), tr))

    # basis fields against the explicit component formulas
    x1, x2, x3, x4 = np.moveaxis(x, -1, 0)
    formulas = {
        1: np.stack([x1, x2, x3, x4], -1),
        2: np.stack([-a * x2, x1, -a * x4, x3], -1),
        3: np.stack([-b * x3, -b * x4, x1, x2], -1),
        4: np.stack([a * b * x4, -b * x3, -a * x2, x1], -1),
    }
    basis = lie_basis(kind)
    field_dev = [_max_abs(basis_field_arrays(m, x, a, b) - formulas[m]) for m in basis]
    cases.append(_case("basis_fields_match_formulas", np.max(field_dev, axis=0), 0.0))
    push_dev = [_max_abs(basis_field_arrays(m, x, a, b) - mul(x, BASIS_UNITS[m].as_array())) for m in basis]
    cases.append(_case("basis_fields_equal_pushforward", np.max(push_dev, axis=0), 0.0))

    tangency = [np.abs(tangency_arrays(m, x, kind, a, b)) / (1.0 + _max_abs(x) ** 2) for m in basis]
    cases.append(_case("basis_field_tangency", np.max(tangency, axis=0), tr))

    w = np.array([metric_arrays(e, e, kind, a, b) for e in np.eye(4)])
    level = []
    for m in lie_basis(kind, unit=True):
        field_m = basis_field_arrays(m, x, a, b)
        level.append(np.abs((2 * w * x * field_m).sum(-1)) / (2 * (np.abs(w) * np.abs(x) * np.abs(field_m)).sum(-1)))
    cases.append(_case("unit_basis_preserves_norm", np.max(level, axis=0), tr))

    left = []
    for m in basis:
        lhs = basis_field_arrays(m, xy, a, b)
        rhs = mul(x, basis_field_arrays(m, y, a, b))
        left_scale = abs_product_scale(x, y, a, b) * max(1.0, abs(a), abs(b), abs(a * b))
        left.append(relative_deviation(lhs, rhs, left_scale))
    cases.append(_case("left_invariance", np.max(left, axis=0), ta))

    p = config.params
    comm = [0.0]
    fields_at_x = [0.0]
    for i, m in enumerate(basis):
        for k in basis[i:]:
            am, ak = coefficient_matrix(m, p), coefficient_matrix(k, p)
            c = ak @ am - am @ ak
            comm.append(np.abs(c).max())
            fields_at_x.append(np.abs(x @ c.T).max())
    cases.append(_case("bracket_coefficient_matrices", comm, 0.0))
    cases.append(_case("bracket_fields_at_members", fields_at_x, 0.0))

    fd = []
    for row in x[: min(n, 100)]:
        point = GBCNumber.from_array(row)
        for i, m in enumerate(basis):
            for k in basis[i + 1 :]:
                br = bracket(kind, m, k, point, p, h=FD_STEP, method="finite_difference")
                fd.append(np.abs(br.as_array()).max() / max(1.0, np.abs(row).max()))
    cases.append(_case("bracket_finite_difference", fd, FD_TOL))

    # (x * b(t) - x) / t -> x * zeta with first-order error along identity curves
    zeta = np.zeros((n, 4))
    zeta[:, [m - 1 for m in basis]] = rng.uniform(0.5, 1.5, size=(n, 3)) * rng.choice([-1.0, 1.0], size=(n, 3))
    target = mul(x, zeta)
    quotient_scale = abs_product_scale(x, zeta, a, b) * max(1.0, abs(a), abs(b))
    errors = []
    for step in QUOTIENT_STEPS:
        curve = identity_curve_arrays(kind, zeta, np.full(n, step), a, b)
        errors.append(relative_deviation((mul(x, curve) - x) / step, target, quotient_scale))
    errors = np.array(errors)
    quotient_tol = 10 * max(1.0, abs(a), abs(b)) * QUOTIENT_STEPS[-1]
    cases.append(_case("pushforward_difference_quotient", errors[-1], quotient_tol))
    order = np.log10(errors[0] / errors[-1]) / np.log10(QUOTIENT_STEPS[0] / QUOTIENT_STEPS[-1])
    cases.append(_case("pushforward_first_order_convergence", np.abs(order - 1.0), 0.1))

    return VerificationReport(
        "group",
        cases,
        _echo(config),
        "hyperquadric Lie groups, unit subgroups and left-invariant fields",
        {"kind": kind.value, "lie_basis": list(basis), "unit_lie_basis": list(lie_basis(kind, unit=True))},
    )


# -- surfaces ----------------------------------------------------------------


def _surface_context(S: TensorSurface) -> dict:
    return {
        "rule": S.rule.value,
        "gamma": {"kind": S.gamma.kind.value, "rate": S.gamma.rate},
        "delta": {"kind": S.delta.kind.value, "rate": S.delta.rate},
        "hyperquadric": S.kind.value,
    }


def run_surface_suite(config: RunConfig, S: TensorSurface) -> VerificationReport:
    """Subgroup, membership, metric, frame and field checks on one tensor surface."""
    p = S.params
    if (p.alpha, p.beta) != (config.alpha, config.beta):
        raise ConfigError(f"surface algebra {p} does not match config ({config.alpha}, {config.beta})")
    a, b = p.alpha, p.beta
    kind = S.kind
    n = config.samples
    rng = config.rng(3)
    tr, ta = config.tol_rel, config.tol_abs
    t, s = rng.uniform(*SURFACE_DOMAIN, size=(2, n))
    cases = []

    t1, t2 = np.meshgrid(HOMOMORPHISM_GRID, HOMOMORPHISM_GRID, indexing="ij")
    hom = homomorphism_check(S, t1, t2, tr)
    cases.append(CaseResult("one_parameter_subgroup", hom.passed, hom.max_deviation, t1.size, tr))

    f = evaluate_surface_arrays(S, t, s)
    cases.append(
        _case(
            "membership_constraint",
            np.abs(constraint_arrays(f, kind, a, b)) / np.maximum(1.0, _max_abs(f) ** 2),
            ta,
        )
    )
    nf = metric_arrays(f, f, kind, a, b)
    cases.append(_case("membership_norm_nonzero", (np.abs(nf) <= ta).astype(float), 0.0))

    g1, g2 = S._plane_metrics()
    gam, dlt = S.gamma.evaluate(t), S.delta.evaluate(s)
    abs_nf = abs_metric_arrays(f, f, kind, a, b)
    cases.append(_case("norm_factorization", np.abs(nf - g1(gam, gam) * g2(dlt, dlt)) / abs_nf, tr))
    if S.is_unit:
        cases.append(_case("unit_norm", np.abs(nf - 1.0) / np.maximum(1.0, abs_nf), ta))

    ambient, product, scale = fundamental_form_arrays(S, t, s)
    cases.append(_case("form_consistency", (np.abs(ambient - product) / scale).max(axis=-1), tr))

    e1, e2, degenerate = frame_arrays(S, t, s)
    ok = ~degenerate
    e1, e2 = e1[ok], e2[ok]
    frame_dev = np.stack(
        [
            np.abs(np.abs(metric_arrays(e1, e1, kind, a, b)) - 1.0),
            np.abs(np.abs(metric_arrays(e2, e2, kind, a, b)) - 1.0),
            np.abs(metric_arrays(e1, e2, kind, a, b)),
        ],
        axis=-1,
    )
    cases.append(_case("frame_orthonormality", frame_dev.max(axis=-1) if frame_dev.size else [], tr))

    m = min(n, 1000)
    ft, fs = tangent_arrays(S, t[:m], s[:m])
    h = FD_STEP
    fd_t = (evaluate_surface_arrays(S, t[:m] + h, s[:m]) - evaluate_surface_arrays(S, t[:m] - h, s[:m])) / (2 * h)
    fd_s = (evaluate_surface_arrays(S, t[:m], s[:m] + h) - evaluate_surface_arrays(S, t[:m], s[:m] - h)) / (2 * h)
    cases.append(_case("tangent_finite_difference", np.maximum(_max_abs(ft - fd_t), _max_abs(fs - fd_s)), FD_TOL))

    ft, fs = tangent_arrays(S, t, s)
    grad = constraint_gradient_arrays(f, kind, a, b)
    tang = np.maximum(
        np.abs((grad * ft).sum(-1)) / np.maximum((np.abs(grad) * np.abs(ft)).sum(-1), 1.0),
        np.abs((grad * fs).sum(-1)) / np.maximum((np.abs(grad) * np.abs(fs)).sum(-1), 1.0),
    )
    cases.append(_case("tangents_are_tangent", tang, tr))

    ut, us = tangent_arrays(S, 0.0, 0.0)
    left = np.maximum(
        relative_deviation(ft, product_arrays(f, ut, a, b), abs_product_scale(f, ut, a, b)),
        relative_deviation(fs, product_arrays(f, us, a, b), abs_product_scale(f, us, a, b)),
    )
    cases.append(_case("tangents_left_invariant", left, ta))

    if S.is_unit:
        t_res, s_res, diag_res = field_match_arrays(S, t, s)
        cases.append(_case("coordinate_fields_match_basis", np.maximum(t_res, s_res), ta))
        cases.append(_case("diagonal_field_match", diag_res, ta))

    context = _surface_context(S)
    if S.rule is TensorRule.TI and a == -1.0 and b == -1.0:
        # the tensor rule gives +sinh t sinh s in the third slot here; report how
        # far the sign-flipped variant sits from the hyperquadric
        flipped = f.copy()
        flipped[:, 2] = -flipped[:, 2]
        off = np.abs(constraint_arrays(flipped, kind, a, b)) / np.maximum(1.0, _max_abs(flipped) ** 2)
        context["third_component_sign"] = {
            "used": "from the tensor rule",
            "flipped_variant_max_constraint_residual": float(off.max()),
        }

    return VerificationReport(
        "surface",
        cases,
        _echo(config),
        "tensor product surfaces as Lie subgroups of the hyperquadrics",
        context,
    )


def run_mesh_export(
    config: RunConfig,
    S: TensorSurface,
    t_range=(-1.0, 1.0),
    s_range=(-1.0, 1.0),
    nt: int = 64,
    ns: int = 64,
    fmt="obj",
) -> VerificationReport:
    """Write the mesh to ``config.output_path`` and report on the sampled vertices."""
    if config.output_path is None:
        raise ConfigError("mesh export needs an output path")
    fmt = MeshFormat.parse(fmt)
    export_mesh(S, config.output_path, t_range, s_range, nt, ns, fmt)
    grid = sample_grid(S, t_range, s_range, nt, ns)
    cases = [
        _case("mesh_constraint", np.abs(grid.constraint) / np.maximum(1.0, _max_abs(grid.points)), config.tol_abs)
    ]
    if S.is_unit:
        cases.append(_case("mesh_unit_norm", np.abs(grid.norm - 1.0), config.tol_abs))
    context = _surface_context(S)
    context.update(
        {
            "format": fmt.value,
            "nt": nt,
            "ns": ns,
            "t_range": list(map(float, t_range)),
            "s_range": list(map(float, s_range)),
            "vertices": grid.n_vertices,
            "triangles": int(grid.triangles().shape[0]),
        }
    )
    return VerificationReport(
        "surface-mesh",
        cases,
        _echo(config),
        "tensor product surfaces as Lie subgroups of the hyperquadrics",
        context,
    )

