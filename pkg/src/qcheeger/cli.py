"""Command-line entry point.

Exit status: 0 when every check in the report holds, 1 when some check fails
(the failing rows are listed on stderr), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import experiments as ex
from .config import DEFAULT_CONFIG, QuadratureConfig
from .euclid_cheeger import cheeger_bracket
from .euclid_indexes import fraenkel_alpha, oscillation_beta_sq, riesz_zeta
from .experiments import ExperimentRow, ExperimentTable
from .gauss1d import (
    IntervalSet,
    alpha_gamma,
    barycenter,
    beta_gamma,
    cheeger_1d,
    gauss_measure,
    gauss_perimeter,
    halfline_cheeger,
)
from .serialization import SchemaError, load, shape_from_dict
from .verify import lemma_suite


class UsageError(Exception):
    pass


def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _tol_pair(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    try:
        return name.strip(), float(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad tolerance value in {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-quad", type=float, help="quadrature tolerance")
    common.add_argument("--tol-root", type=float, help="root-finding residual tolerance")
    common.add_argument("--tol", type=_tol_pair, action="append", default=[], metavar="NAME=VALUE",
                        help=f"override any tolerance ({', '.join(DEFAULT_CONFIG.table())})")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="output path (default: stdout)")

    p = argparse.ArgumentParser(prog="qcheeger", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="measures, indexes and Cheeger bounds of one set")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--shape", help="shape or interval-set JSON file")
    src.add_argument("--family", choices=("flower", "annulus", "omega-T"))
    c.add_argument("--j", type=int, default=5)
    c.add_argument("--eps", type=float, default=0.1)
    c.add_argument("--T", type=float, default=4.0)
    c.add_argument("--no-alpha", action="store_true", help="skip the Fraenkel asymmetry (slowest index)")

    sub.add_parser("verify", parents=[common], help="lemma checks with margins")

    r = sub.add_parser("reproduce", help="explicit constructions")
    rsub = r.add_subparsers(dest="family", required=True)
    rf = rsub.add_parser("flower", parents=[common])
    rf.add_argument("--j", type=_int_list, default=[5, 10, 15, 20])
    rf.add_argument("--eps", type=float, default=0.1)
    ra = rsub.add_parser("annulus", parents=[common])
    ra.add_argument("--j", type=_int_list, default=[4, 10, 50])
    rg = rsub.add_parser("gauss-sharpness", parents=[common])
    rg.add_argument("--T", type=_float_list, default=[3, 4, 5, 6, 7, 8])

    s = sub.add_parser("sweep", help="randomized constant estimates")
    ssub = s.add_subparsers(dest="family", required=True)
    sz = ssub.add_parser("zeta", parents=[common])
    sz.add_argument("--seed", type=int, required=True)
    sz.add_argument("--samples", type=int, default=200)
    sz.add_argument("--workers", type=int, default=1)
    sg = ssub.add_parser("gauss", parents=[common])
    sg.add_argument("--seed", type=int, required=True)
    sg.add_argument("--samples", type=int, default=300)
    sg.add_argument("--bins", type=_float_list, default=[0.3, 0.5, 0.7])
    sg.add_argument("--workers", type=int, default=1)
    return p


def config_from_args(args) -> QuadratureConfig:
    overrides = {}
    if args.tol_quad is not None:
        overrides["quad"] = args.tol_quad
    if args.tol_root is not None:
        overrides["root"] = args.tol_root
    for name, value in args.tol:
        overrides[name] = value
    try:
        return DEFAULT_CONFIG.with_overrides(**overrides)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc.args[0] if exc.args else exc)) from exc


def compute_report(obj, config: QuadratureConfig, with_alpha: bool = True) -> ExperimentTable:
    slack = config.inequality_slack
    if isinstance(obj, IntervalSet):
        m = gauss_measure(obj)
        values = {"set": obj.to_json(), "measure": m, "perimeter": gauss_perimeter(obj), "barycenter": barycenter(obj)}
        checks = {"measure_in_unit_interval": 0.0 <= m <= 1.0}
        if m > 0:
            sol = cheeger_1d(obj, config=config)
            values.update(h_gamma=sol.h, minimizer=sol.minimizer.to_json())
        if 0.0 < m < 1.0:
            h_half = halfline_cheeger(obj)
            values.update(h_halfline=h_half, alpha_gamma=alpha_gamma(obj).value, beta_gamma=beta_gamma(obj).value)
            checks["cheeger_above_halfline"] = values["h_gamma"] >= h_half - slack
            checks["beta_gamma_le_1"] = values["beta_gamma"] <= 1.0
        return ExperimentTable("compute", [ExperimentRow("intervals", "input", values, checks)], {}, {}, config.table())

    bounds = cheeger_bracket(obj)
    values = {"area": obj.area(), "perimeter": obj.perimeter(config.tol_quad),
              "h_lower": bounds.lower, "h_upper": bounds.upper, "h_exact": bounds.exact, "witness": bounds.witness}
    checks = {"bounds_ordered": bounds.lower <= bounds.upper}
    reports = [riesz_zeta(obj, config), oscillation_beta_sq(obj, config)]
    if with_alpha:
        reports.insert(0, fraenkel_alpha(obj, config))
    for rep in reports:
        values[rep.name] = rep.value
        values[f"{rep.name}_y"] = list(rep.center)
        values[f"{rep.name}_status"] = rep.status
        values[f"{rep.name}_evaluations"] = rep.evaluations
        checks[f"{rep.name}_nonnegative"] = rep.value >= -slack
    return ExperimentTable("compute", [ExperimentRow("shape", "input", values, checks)], {}, {}, config.table())


def _load_input(args):
    if args.shape:
        try:
            return load(args.shape)
        except OSError as exc:
            raise UsageError(f"cannot read {args.shape}: {exc.strerror}") from exc
    if args.family == "flower":
        return shape_from_dict({"kind": "flower", "j": args.j, "eps": args.eps})
    if args.family == "annulus":
        return shape_from_dict({"kind": "annulus_family", "j": args.j})
    return shape_from_dict({"kind": "omega_T", "T": args.T})


def run(args) -> ExperimentTable:
    config = config_from_args(args)
    if args.command == "compute":
        return compute_report(_load_input(args), config, with_alpha=not args.no_alpha)
    if args.command == "verify":
        return lemma_suite(config)
    if args.command == "reproduce":
        if args.family == "flower":
            return ex.reproduce_flower(args.j, args.eps, config)
        if args.family == "annulus":
            return ex.reproduce_annulus(args.j, config)
        return ex.reproduce_gauss_sharpness(args.T, config)
    if args.samples < 1 or args.workers < 1:
        raise UsageError("--samples and --workers must be positive")
    if args.family == "zeta":
        return ex.sweep_zeta_constant(args.samples, args.seed, args.workers, config)
    return ex.sweep_gauss_constants(args.samples, args.seed, tuple(args.bins), workers=args.workers, config=config)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        table = run(args)
    except (UsageError, SchemaError, ValueError) as exc:
        print(f"qcheeger: error: {exc}", file=sys.stderr)
        return 2
    text = ex.to_json(table) if args.format == "json" else ex.to_csv(table)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failures = table.failures()
    for f in failures:
        print(f"FAILED {f}", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
