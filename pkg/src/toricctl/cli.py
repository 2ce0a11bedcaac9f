"""toricctl: command-line front end.

Subcommands: check-fan, wps, classify-case1, verify-sl2, reproduce-paper.
Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input error.
JSON output carries a top-level ``"schema": 1`` and is deterministic, so two
runs of the same command produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cones import FanFormatError, load_fan, save_fan
from .reference import run_reference_suite
from .sl2 import (
    DEFAULT_SPOT_CHECK_SEED,
    quadric_family_sanity,
    quotient_images_sign_invariant,
    rep_weights,
    verify_invariant_ideal,
)
from .varieties import analyze, build_wps_fan, classify_case1

SCHEMA_VERSION = 1


class UsageError(Exception):
    """Input problems that should exit with status 2."""


def _emit(payload: dict, lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _spot_check_seed() -> int:
    raw = os.environ.get("TORICCTL_SEED")
    if raw is None:
        return DEFAULT_SPOT_CHECK_SEED
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"TORICCTL_SEED must be an integer, got {raw!r}") from exc


def cmd_check_fan(args) -> int:
    try:
        fan = load_fan(args.path)
    except OSError as exc:
        raise UsageError(f"cannot read fan file: {exc}") from exc
    except FanFormatError as exc:
        raise UsageError(f"bad fan file: {exc}") from exc
    report = analyze(fan)
    payload = {"schema": SCHEMA_VERSION, "command": "check-fan", "report": report.to_dict()}
    _emit(payload, report.text_lines(), args.format)
    return 0 if report.valid else 1


def _parse_weights(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise UsageError(f"expected 4 comma-separated weights, got {text!r}")
    try:
        weights = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"weights must be integers, got {text!r}") from exc
    if any(w < 1 for w in weights):
        raise UsageError(f"weights must be positive, got {weights}")
    return weights


def cmd_wps(args) -> int:
    weights = _parse_weights(args.weights)
    try:
        fan = build_wps_fan(*weights)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = analyze(fan)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "wps",
        "weights": list(weights),
        "report": report.to_dict(),
    }
    lines = report.text_lines()
    if args.emit_fan:
        try:
            save_fan(fan, args.emit_fan)
        except OSError as exc:
            raise UsageError(f"cannot write fan file: {exc}") from exc
        payload["emitted"] = args.emit_fan
        lines.append(f"fan written to {args.emit_fan}")
    _emit(payload, lines, args.format)
    return 0 if report.valid else 1


def cmd_classify_case1(args) -> int:
    if args.bound < 2:
        raise UsageError(f"--bound must be >= 2, got {args.bound}")
    records = classify_case1(args.bound)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "classify-case1",
        "bound": args.bound,
        "solutions": [record.solution.to_dict() for record in records],
        "records": [record.to_dict() for record in records],
    }
    lines = [f"linking solutions with n <= {args.bound}: {len(records)}"]
    for record in records:
        s = record.solution
        lines.append(
            f"  n={s.n} m={s.m} mu={s.mu} nu={s.nu}: ray v={tuple(record.ray)}, "
            f"singularities {list(record.singularities)}"
        )
        verdict = record.equivalent_to if record.equivalent_to else "no match"
        lines.append(f"    lattice-equivalent to {verdict}; consistent: {record.ok}")
    _emit(payload, lines, args.format)
    return 0 if all(record.ok for record in records) else 1


def cmd_verify_sl2(args) -> int:
    if args.sample_points < 0:
        raise UsageError("--sample-points must be nonnegative")
    if not 1 <= args.generators <= 6:
        raise UsageError("--generators must be between 1 and 6")
    seed = _spot_check_seed()
    verification = verify_invariant_ideal(
        seed=seed, samples=args.sample_points, limit=args.generators
    )
    symmetric = quotient_images_sign_invariant()
    quadric_ok = quadric_family_sanity()
    weight_rows = [rep_weights(k).to_dict() for k in range(7)]
    all_ok = verification.all_vanish and symmetric and quadric_ok
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "verify-sl2",
        "verification": verification.to_dict(),
        "images_sign_invariant": symmetric,
        "quadric_family_ok": quadric_ok,
        "rep_weights": weight_rows,
        "all_ok": all_ok,
    }
    vanished = sum(1 for c in verification.checks if c.passed)
    lines = [
        f"{vanished}/{len(verification.checks)} generators vanish under the quotient substitution",
        f"numeric spot-check: {verification.samples} points per generator (seed {seed})",
        f"images invariant under (x,y,z) -> (-x,-y,-z): {'yes' if symmetric else 'no'}",
        f"quadric family sanity checks: {'pass' if quadric_ok else 'FAIL'}",
        "torus weights:",
    ]
    for row in weight_rows:
        lines.append(
            f"  k={row['k']}: weights {row['weights']}, fixed dim {row['fixed_dim']}"
        )
    _emit(payload, lines, args.format)
    return 0 if all_ok else 1


def cmd_reproduce_paper(args) -> int:
    seed = _spot_check_seed()
    report = run_reference_suite(seed)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "reproduce-paper",
        "report": report.to_dict(),
    }
    lines = []
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        lines.append(f"{status}  {check.name}: {check.detail}")
    lines.append(
        f"{sum(c.passed for c in report.checks)}/{len(report.checks)} reference checks passed"
    )
    if not report.all_passed:
        first = next(c.name for c in report.checks if not c.passed)
        lines.append(f"first failing check: {first}")
    _emit(payload, lines, args.format)
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricctl",
        description=(
            "Exact computations with 3-dimensional simplicial toric fans, "
            "cyclic quotient singularities, and SL2-invariant identities."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )

    p = sub.add_parser("check-fan", help="validate and analyze a fan file")
    p.add_argument("path", help="path to a fan JSON file")
    add_format(p)
    p.set_defaults(func=cmd_check_fan)

    p = sub.add_parser("wps", help="build and analyze a weighted projective space fan")
    p.add_argument("weights", help="four comma-separated positive weights, e.g. 1,1,2,3")
    p.add_argument("--emit-fan", metavar="PATH", help="also write the fan file")
    add_format(p)
    p.set_defaults(func=cmd_wps)

    p = sub.add_parser(
        "classify-case1",
        help="solve the linking equations and reconstruct the matching fan",
    )
    p.add_argument("--bound", type=int, required=True, help="search bound for n (>= 2)")
    add_format(p)
    p.set_defaults(func=cmd_classify_case1)

    p = sub.add_parser("verify-sl2", help="verify the invariant-ideal identities")
    p.add_argument(
        "--generators",
        type=int,
        default=6,
        help="verify only the first N generators (default all 6)",
    )
    p.add_argument(
        "--sample-points",
        type=int,
        default=100,
        help="number of numeric spot-check points per generator",
    )
    add_format(p)
    p.set_defaults(func=cmd_verify_sl2)

    p = sub.add_parser(
        "reproduce-paper",
        help="run every built-in reference computation and assert its expected result",
    )
    add_format(p)
    p.set_defaults(func=cmd_reproduce_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
