"""Command-line surface over the JSON matrix format.

Subcommands: ``julia``, ``halmos``, ``power``, ``check``, ``intertwine``,
``gen``, ``suite``.  Exit status 0 means every check passed, 1 means a
verification failed, 2 means a usage or input error.  The environment
variable ``DILATEKIT_TOL`` overrides the default base tolerance; ``--tol``
overrides both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .dilation import (
    NotAContractionError,
    contraction,
    flip,
    halmos,
    intertwining_residual,
    intertwining_residual_from_split,
    julia,
    julia_column_switched,
    verify_julia,
)
from .generate import KINDS, GeneratorSpec, gen_contraction
from .jsonio import (
    SchemaError,
    block2x2_from_json,
    block2x2_to_json,
    matrix_from_json,
    matrix_to_json,
    power_dilation_from_json,
    power_dilation_to_json,
    read_json,
    report_to_json,
    write_json,
)
from .linalg import DEFAULT_BASE_TOL, ShapeError, frobenius
from .powerdil import power_dilation
from .report import ResidualCheck, ResidualReport
from .suite import SuiteConfig, run_suite

USAGE_ERROR = 2
VERIFICATION_ERROR = 1


def _default_base_tol() -> float:
    value = os.environ.get("DILATEKIT_TOL")
    if value is None:
        return DEFAULT_BASE_TOL
    try:
        tol = float(value)
    except ValueError as exc:
        raise SchemaError("DILATEKIT_TOL", f"expected a float, got {value!r}") from exc
    if tol <= 0:
        raise SchemaError("DILATEKIT_TOL", f"tolerance must be > 0, got {tol}")
    return tol


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dilatekit",
        description="Construct and verify Julia operators, Halmos dilations, "
        "and unitary power dilations of complex contraction matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, out_required=False):
        p.add_argument("--in", dest="in_path", required=True, help="input matrix JSON")
        if out_required:
            p.add_argument("--out", dest="out_path", required=True, help="output JSON path")
        p.add_argument("--report", dest="report_path", help="residual report JSON path")
        p.add_argument("--tol", type=float, help="base tolerance override")

    p = sub.add_parser("julia", help="build the Julia operator of a contraction")
    add_common(p, out_required=True)

    p = sub.add_parser("halmos", help="build the Halmos dilation of a square contraction")
    add_common(p, out_required=True)

    p = sub.add_parser("power", help="build a finite unitary power dilation")
    add_common(p, out_required=True)
    p.add_argument("--n", type=int, required=True, help="power horizon n_steps")

    p = sub.add_parser("check", help="verify a stored matrix, block operator, or dilation")
    add_common(p)

    p = sub.add_parser("intertwine", help="intertwining residual of a contraction")
    add_common(p)

    p = sub.add_parser("gen", help="generate a seeded random contraction")
    p.add_argument("--kind", choices=KINDS, default="generic")
    p.add_argument("--dim-h", type=int, required=True, help="codomain dimension (rows)")
    p.add_argument("--dim-k", type=int, required=True, help="domain dimension (columns)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", dest="out_path", required=True)

    p = sub.add_parser("suite", help="run the randomized verification suite")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--min-dim", type=int, default=1)
    p.add_argument("--max-dim", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=KINDS, action="append",
                   help="restrict to a kind (repeatable; default: all kinds)")
    p.add_argument("--n", type=int, default=4, help="power-dilation horizon per trial")
    p.add_argument("--tol", type=float, help="base tolerance override")
    p.add_argument("--report", dest="report_path", help="suite report JSON path")

    return parser


def _load_contraction(path):
    return contraction(matrix_from_json(read_json(path)))


def _emit_report(report: ResidualReport, report_path: str | None) -> None:
    for c in report.checks:
        status = "pass" if c.passed else "FAIL"
        print(f"{c.name}: residual={c.residual:.3e} tolerance={c.tolerance:.3e} {status}")
    if report_path:
        write_json(report_path, report_to_json(report))


def _cmd_julia(args, base: float) -> int:
    a = _load_contraction(args.in_path)
    write_json(args.out_path, block2x2_to_json(julia(a)))
    report = verify_julia(a, base=base)
    _emit_report(report, args.report_path)
    return 0 if report.passed else VERIFICATION_ERROR


def _cmd_halmos(args, base: float) -> int:
    a = _load_contraction(args.in_path)
    write_json(args.out_path, block2x2_to_json(halmos(a)))
    report = verify_julia(a, base=base)
    _emit_report(report, args.report_path)
    return 0 if report.passed else VERIFICATION_ERROR


def _cmd_power(args, base: float) -> int:
    from .powerdil import dilation_residuals

    a = _load_contraction(args.in_path)
    d = power_dilation(a, args.n)
    write_json(args.out_path, power_dilation_to_json(d))
    report = dilation_residuals(d, a, base=base)
    _emit_report(report, args.report_path)
    return 0 if report.passed else VERIFICATION_ERROR


def _unitarity_report(m: np.ndarray, base: float) -> ResidualReport:
    size = m.shape[0]
    eye = np.eye(size, dtype=np.complex128)
    tol = size * base * (1.0 + frobenius(m))
    return ResidualReport(checks=(
        ResidualCheck("isometry", frobenius(m.conj().T @ m - eye), tol),
        ResidualCheck("coisometry", frobenius(m @ m.conj().T - eye), tol),
    ))


def _cmd_check(args, base: float) -> int:
    obj = read_json(args.in_path)
    if isinstance(obj, dict) and "splits" in obj:
        block = block2x2_from_json(obj)
        report = _unitarity_report(block.to_matrix(), base)
    elif isinstance(obj, dict) and "n_steps" in obj:
        d = power_dilation_from_json(obj)
        report = _unitarity_report(d.u, base)
    else:
        a = contraction(matrix_from_json(obj))
        checks = list(verify_julia(a, base=base).checks)
        n = a.dim_h + a.dim_k
        direct = intertwining_residual(a)
        checks.append(ResidualCheck("intertwining", direct, n * base))
        checks.append(
            ResidualCheck(
                "intertwining_path_agreement",
                abs(direct - intertwining_residual_from_split(a)),
                1e-13,
            )
        )
        switched = julia_column_switched(a).to_matrix()
        factor = julia(a).to_matrix() @ flip(a.dim_h, a.dim_k).to_matrix()
        checks.append(
            ResidualCheck(
                "switched_factorization",
                float(np.max(np.abs(switched - factor))),
                1e-14,
            )
        )
        if a.dim_h == a.dim_k:
            diff = halmos(a).to_matrix() - factor
            checks.append(
                ResidualCheck("halmos_factorization", float(np.max(np.abs(diff))), 1e-14)
            )
        report = ResidualReport(checks=tuple(checks))
    _emit_report(report, args.report_path)
    return 0 if report.passed else VERIFICATION_ERROR


def _cmd_intertwine(args, base: float) -> int:
    a = _load_contraction(args.in_path)
    n = a.dim_h + a.dim_k
    direct = intertwining_residual(a)
    report = ResidualReport(checks=(
        ResidualCheck("intertwining", direct, n * base),
        ResidualCheck(
            "intertwining_path_agreement",
            abs(direct - intertwining_residual_from_split(a)),
            1e-13,
        ),
    ))
    _emit_report(report, args.report_path)
    return 0 if report.passed else VERIFICATION_ERROR


def _cmd_gen(args) -> int:
    spec = GeneratorSpec(dim_h=args.dim_h, dim_k=args.dim_k, kind=args.kind, seed=args.seed)
    a = gen_contraction(spec)
    write_json(args.out_path, matrix_to_json(a.matrix))
    print(f"generated {args.kind} contraction {a.dim_h}x{a.dim_k}, norm={a.norm:.12g}")
    return 0


def _cmd_suite(args, base: float) -> int:
    cfg = SuiteConfig(
        trials=args.trials,
        min_dim=args.min_dim,
        max_dim=args.max_dim,
        kinds=tuple(args.kind) if args.kind else KINDS,
        seed=args.seed,
        base_tol=base,
        n_steps=args.n,
        report_path=args.report_path,
    )
    report = run_suite(cfg)
    for entry in report["checks"]:
        status = "pass" if entry["pass"] else "FAIL"
        print(
            f"{entry['name']}: trials={entry['trials']} "
            f"max_residual={entry['max_residual']:.3e} {status}"
        )
    print(f"suite: {'pass' if report['pass'] else 'FAIL'} ({cfg.trials} trials)")
    return 0 if report["pass"] else VERIFICATION_ERROR


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        return int(exc.code or 0)
    try:
        base = args.tol if getattr(args, "tol", None) else _default_base_tol()
        if base <= 0:
            print("error: --tol must be > 0", file=sys.stderr)
            return USAGE_ERROR
        if args.command == "julia":
            return _cmd_julia(args, base)
        if args.command == "halmos":
            return _cmd_halmos(args, base)
        if args.command == "power":
            return _cmd_power(args, base)
        if args.command == "check":
            return _cmd_check(args, base)
        if args.command == "intertwine":
            return _cmd_intertwine(args, base)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "suite":
            return _cmd_suite(args, base)
        raise AssertionError(f"unhandled command {args.command!r}")
    except (
        SchemaError,
        NotAContractionError,
        ShapeError,
        ValueError,
        OSError,
        json.JSONDecodeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
