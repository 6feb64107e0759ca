"""``gbx verify algebra|group|surface``: run verification suites from the shell.

Each suite prints one JSON record on stdout and a readable summary on stderr.
The exit status is 0 iff every case of every suite passed, 1 on a failed case
and 2 on a usage or configuration error.
"""

from __future__ import annotations

import argparse
import os
import sys

from gbx.algebra import AlgebraParams, ConjugationKind
from gbx.errors import CaseMismatch, MeshExportError
from gbx.surfaces import CurveKind, PlanarCurve, TensorRule, TensorSurface, permitted_kinds
from gbx.verify import (
    ConfigError,
    RunConfig,
    run_algebra_suite,
    run_group_suite,
    run_mesh_export,
    run_surface_suite,
)

__all__ = ["main", "build_parser"]

SEED_ENV = "GBX_SEED"


def _range(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO,HI, got {text!r}") from None
    return lo, hi


def _common(p: argparse.ArgumentParser):
    p.add_argument("--alpha", type=float, default=1.0, help="square of i is -alpha (default 1)")
    p.add_argument("--beta", type=float, default=1.0, help="square of j is -beta (default 1)")
    p.add_argument("--samples", type=int, default=10_000, help="random samples per case (default 10000)")
    p.add_argument("--seed", type=int, default=None, help=f"PRNG seed (default ${SEED_ENV} or 0)")
    p.add_argument("--tol-rel", type=float, default=1e-9, help="relative tolerance (default 1e-9)")
    p.add_argument("--tol-abs", type=float, default=1e-12, help="absolute tolerance (default 1e-12)")
    p.add_argument("--out", default=None, help="mesh path for --action mesh; otherwise reports are also written here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gbx", description="Verify generalized bicomplex identities numerically.")
    commands = parser.add_subparsers(dest="command", required=True)
    verify = commands.add_parser("verify", help="run a verification suite")
    suites = verify.add_subparsers(dest="suite", required=True)

    algebra = suites.add_parser("algebra", help="algebra axioms, conjugations, matrix representation")
    _common(algebra)

    group = suites.add_parser("group", help="hyperquadric groups and their Lie algebras")
    _common(group)
    group.add_argument("--kind", choices=[k.value for k in ConjugationKind], help="hyperquadric (default: all three)")

    surface = suites.add_parser("surface", help="tensor product surfaces")
    _common(surface)
    kinds = [k.value for k in CurveKind]
    surface.add_argument("--rule", choices=[r.value for r in TensorRule], default="ti")
    surface.add_argument("--curve-gamma", choices=kinds, help="kind of gamma (default: permitted circle kind)")
    surface.add_argument("--curve-delta", choices=kinds, help="kind of delta (default: permitted circle kind)")
    surface.add_argument("--rate-a", type=float, default=0.0, help="growth rate of gamma")
    surface.add_argument("--rate-b", type=float, default=0.0, help="growth rate of delta")
    surface.add_argument("--action", choices=["verify", "mesh"], default="verify")
    surface.add_argument("--mesh-nt", type=int, default=64)
    surface.add_argument("--mesh-ns", type=int, default=64)
    surface.add_argument("--format", choices=["obj", "csv"], default="obj")
    surface.add_argument("--t-range", type=_range, default=(-1.0, 1.0), metavar="LO,HI")
    surface.add_argument("--s-range", type=_range, default=(-1.0, 1.0), metavar="LO,HI")
    return parser


def _seed(args, parser) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is None or env.strip() == "":
        return 0
    try:
        return int(env)
    except ValueError:
        parser.error(f"{SEED_ENV} must be an integer, got {env!r}")


def _curve(kind_name, rate: float, default_kinds) -> PlanarCurve:
    if kind_name is None:
        circle, spiral = default_kinds
        kind_name = spiral if rate != 0.0 else circle
    return PlanarCurve(CurveKind.parse(kind_name), rate)


def _surface(args) -> TensorSurface:
    p = AlgebraParams(args.alpha, args.beta)
    g_kinds, d_kinds = permitted_kinds(args.rule, p.alpha, p.beta)
    gamma = _curve(args.curve_gamma, args.rate_a, g_kinds)
    delta = _curve(args.curve_delta, args.rate_b, d_kinds)
    return TensorSurface(gamma, delta, TensorRule.parse(args.rule), p)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    mesh = args.suite == "surface" and args.action == "mesh"
    try:
        config = RunConfig(
            alpha=args.alpha,
            beta=args.beta,
            seed=_seed(args, parser),
            samples=args.samples,
            tol_rel=args.tol_rel,
            tol_abs=args.tol_abs,
            output_path=args.out,
        )
        if args.suite == "algebra":
            reports = [run_algebra_suite(config)]
        elif args.suite == "group":
            kinds = [args.kind] if args.kind else list(ConjugationKind)
            reports = [run_group_suite(config, k) for k in kinds]
        else:
            S = _surface(args)
            if mesh:
                reports = [
                    run_mesh_export(
                        config, S, args.t_range, args.s_range, args.mesh_nt, args.mesh_ns, args.format
                    )
                ]
            else:
                reports = [run_surface_suite(config, S)]
    except CaseMismatch as exc:
        parser.error(f"case mismatch: {exc}")
    except (ConfigError, ValueError) as exc:
        parser.error(str(exc))
    except MeshExportError as exc:
        print(f"gbx: {exc}", file=sys.stderr)
        return 2

    lines = [r.to_json() for r in reports]
    for line in lines:
        print(line)
    for r in reports:
        print(r.summary(), file=sys.stderr)
    if args.out and not mesh:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
