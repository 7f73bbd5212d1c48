"""Command-line front end: batch analyses emitted as reproducible JSON/CSV.

Every command wraps its result in a report envelope {command, params,
payload, version} whose JSON serialization is byte-identical across runs
(sorted keys, no timestamps).  Exit codes: 0 success, 1 analysis failure
(such as a determinism violation), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from ._budget import BudgetExceeded
from .boolfn import TruthTable, is_linear, truth_table_csv
from .gf2 import BitVec
from .contextuality import analyze_instance
from .lulc import DataIntegrityError, and_protocol, load_data, verify_lu_family
from .mbqc import DeterminismViolation, instance_from_dict, truth_table
from .oracle import MAX_QUBITS, dense_expectation, dense_state
from .phasestate import CorrelationContext, expectation
from .reedmuller import ax_check, rm_dim
from .rmfamily import (
    FamilyParams,
    PromiseViolation,
    build,
    closed_form,
    closed_form_table,
    determinism_exact,
    example2_report,
    phase_diagram,
    phase_diagram_csv,
    sufficient_condition,
)

__all__ = ["Report", "emit_report", "dispatch", "main"]


@dataclass(frozen=True)
class Report:
    command: str
    params: Dict[str, object]
    payload: object
    version: str = __version__
    csv: Optional[str] = None  # tabular rendering, when the payload has one

    def to_dict(self) -> Dict[str, object]:
        return {
            "command": self.command,
            "params": self.params,
            "payload": self.payload,
            "version": self.version,
        }


class _CsvUnsupported(ValueError):
    pass


def _table_payload(tt: TruthTable) -> Dict[str, object]:
    return {
        "n_in": tt.n_in,
        "n_out": tt.n_out,
        "rows": [
            {"input": str(BitVec(tt.n_in, x)), "output": str(tt.rows[x])}
            for x in range(1 << tt.n_in)
        ],
    }


def emit_report(report: Report, fmt: str, destination) -> None:
    """Serialize a report; csv only for tabular payloads."""
    if fmt == "json":
        destination.write(
            json.dumps(report.to_dict(), sort_keys=True, separators=(",", ":")) + "\n"
        )
        return
    if fmt == "csv":
        if report.csv is None:
            raise _CsvUnsupported(f"command {report.command} has no tabular form")
        destination.write(report.csv)
        return
    raise _CsvUnsupported(f"unknown format {fmt!r}")


def _parse_bits(s: str, expected: int, parser: argparse.ArgumentParser) -> BitVec:
    if len(s) != expected or any(c not in "01" for c in s):
        parser.error(f"--input must be {expected} bits of 0/1, got {s!r}")
    return BitVec.from_string(s)


def _family_params(args, parser: argparse.ArgumentParser) -> FamilyParams:
    try:
        return FamilyParams(args.r, args.t, args.m, args.chi)
    except ValueError as exc:
        parser.error(str(exc))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rmqc",
        description="Exact analysis of deterministic measurement-based computation "
        "on Reed-Muller and phase-coset stabilizer states.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    pd = sub.add_parser("phase-diagram", help="classify resource-state cells")
    pd.add_argument("--rmax", type=int, required=True)
    pd.add_argument("--mmax", type=int, required=True)
    _add_format(pd, default="csv")

    fam = sub.add_parser("family", help="four-parameter computation family")
    fam_sub = fam.add_subparsers(dest="family_command", required=True)
    for name in ("eval", "table", "check"):
        fp = fam_sub.add_parser(name)
        fp.add_argument("--r", type=int, required=True)
        fp.add_argument("--t", type=int, required=True)
        fp.add_argument("--m", type=int, required=True)
        fp.add_argument("--chi", type=int, required=True)
        if name == "eval":
            fp.add_argument("--input", type=str, required=True)
        if name == "table":
            _add_format(fp, default="json")
        else:
            _add_format(fp, default="json", json_only=True)

    e1 = sub.add_parser("example1", help="4-qubit GHZ instance truth table")
    _add_format(e1, default="json")
    e2 = sub.add_parser("example2", help="32-qubit family member analysis")
    _add_format(e2, default="json", json_only=True)

    lu = sub.add_parser("lulc", help="35-qubit local-unitary pair")
    lu_sub = lu.add_subparsers(dest="lulc_command", required=True)
    lv = lu_sub.add_parser("verify")
    _add_format(lv, default="json", json_only=True)
    la = lu_sub.add_parser("and")
    la.add_argument("--a", type=int, required=True, choices=(0, 1))
    la.add_argument("--b", type=int, required=True, choices=(0, 1))
    _add_format(la, default="json", json_only=True)

    hv = sub.add_parser("hvm", help="hidden-variable-model analysis of an instance file")
    hv.add_argument("--instance", type=str, required=True)
    _add_format(hv, default="json", json_only=True)

    oc = sub.add_parser("oracle-compare", help="exact engine vs dense statevector")
    oc.add_argument("--instance", type=str, required=True)
    _add_format(oc, default="json", json_only=True)

    ax = sub.add_parser("ax", help="weight-divisibility exponent of R(r,m)")
    ax.add_argument("--r", type=int, required=True)
    ax.add_argument("--m", type=int, required=True)
    _add_format(ax, default="json", json_only=True)
    return parser


def _add_format(p: argparse.ArgumentParser, default: str, json_only: bool = False) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--json", dest="fmt", action="store_const", const="json", default=default
    )
    if not json_only:
        group.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    p.add_argument("-o", "--output", type=str, default=None, help="write to file")


def _cmd_phase_diagram(args) -> Report:
    cells = phase_diagram(args.rmax, args.mmax)
    payload = {
        "cells": [
            {
                "r": c.r,
                "m": c.m,
                "class": c.klass,
                "chi_max": c.chi_max,
                "witness_t": c.witness_t,
            }
            for c in cells
        ]
    }
    return Report(
        "phase-diagram",
        {"rmax": args.rmax, "mmax": args.mmax},
        payload,
        csv=phase_diagram_csv(cells),
    )


def _cmd_family(args, parser) -> Report:
    p = _family_params(args, parser)
    params = {"r": p.r, "t": p.t, "m": p.m, "chi": p.chi}
    if args.family_command == "eval":
        i = _parse_bits(args.input, rm_dim(p.t, p.m), parser)
        out = closed_form(p, i)
        payload = {"input": str(i), "output": str(out)}
        return Report("family-eval", {**params, "input": str(i)}, payload)
    if args.family_command == "table":
        tt = truth_table(build(p))
        return Report("family-table", params, _table_payload(tt), csv=truth_table_csv(tt))
    det = determinism_exact(p)
    payload: Dict[str, object] = {
        "deterministic": det.deterministic,
        "sufficient": sufficient_condition(p),
        "linear": None,
    }
    if det.deterministic:
        verdict = is_linear(closed_form_table(p))
        payload["linear"] = verdict.linear
    else:
        ce = det.counterexample
        payload["counterexample"] = {
            "c": str(ce.c),
            "q": str(ce.q),
            "z": str(ce.z),
            "condition": ce.condition,
        }
    return Report("family-check", params, payload)


def _cmd_example1(args) -> Report:
    from .mbqc import example1_instance

    tt = truth_table(example1_instance())
    return Report("example1", {}, _table_payload(tt), csv=truth_table_csv(tt))


def _cmd_lulc(args) -> Report:
    if args.lulc_command == "verify":
        data = load_data()
        checks = []
        for a in (0, 1):
            for b in (0, 1):
                checks.append({"a": a, "b": b, "ok": bool(verify_lu_family(a, b, data))})
        return Report("lulc-verify", {}, {"checks": checks})
    o = and_protocol(args.a, args.b)
    return Report(
        "lulc-and", {"a": args.a, "b": args.b}, {"a": args.a, "b": args.b, "o": o.to_bits()}
    )


def _load_instance(path: str):
    with open(path) as fh:
        return instance_from_dict(json.load(fh))


def _cmd_hvm(args) -> Report:
    inst = _load_instance(args.instance)
    verdict = analyze_instance(inst)
    payload: Dict[str, object] = {"kind": verdict.kind}
    if verdict.assignment is not None:
        c, d = verdict.assignment
        payload["assignment"] = {"c": str(c), "d": str(d)}
    if verdict.witness is not None:
        payload["witness"] = [
            {"z": str(ctx.z), "q": str(ctx.q), "o": ctx.parity} for ctx in verdict.witness
        ]
    return Report("hvm", {"instance": args.instance}, payload)


def _cmd_oracle_compare(args) -> Report:
    inst = _load_instance(args.instance)
    if inst.n > MAX_QUBITS:
        raise ValueError(f"instance has {inst.n} qubits; dense oracle tops out at {MAX_QUBITS}")
    st = dense_state(inst.state)
    from .mbqc import _input_q_words

    q_words = _input_q_words(inst)
    worst = 0.0
    n_ctx = 0
    for x in range(1 << inst.n_inputs):
        q = BitVec(inst.n, int(q_words[x]))
        for z in inst.z_matrix.rows:
            ctx = CorrelationContext(z, q)
            exact = expectation(inst.state, inst.angles, ctx).value()
            dense = dense_expectation(st, inst.angles, ctx)
            worst = max(worst, abs(exact - dense))
            n_ctx += 1
    payload = {
        "contexts": n_ctx,
        "max_abs_deviation": worst,
        "within_tolerance": worst < 1e-9,
    }
    return Report("oracle-compare", {"instance": args.instance}, payload)


def _cmd_ax(args, parser) -> Report:
    try:
        exponent, sharp = ax_check(args.r, args.m)
    except ValueError as exc:
        parser.error(str(exc))
    return Report(
        "ax",
        {"r": args.r, "m": args.m},
        {"r": args.r, "m": args.m, "divisor_exponent": exponent, "sharp": sharp},
    )


def dispatch(argv: Sequence[str]) -> int:
    """Route a command line; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "phase-diagram":
            report = _cmd_phase_diagram(args)
        elif args.command == "family":
            report = _cmd_family(args, parser)
        elif args.command == "example1":
            report = _cmd_example1(args)
        elif args.command == "example2":
            report = Report("example2", {}, example2_report())
        elif args.command == "lulc":
            report = _cmd_lulc(args)
        elif args.command == "hvm":
            report = _cmd_hvm(args)
        elif args.command == "oracle-compare":
            report = _cmd_oracle_compare(args)
        elif args.command == "ax":
            report = _cmd_ax(args, parser)
        else:  # pragma: no cover - argparse enforces the choices
            parser.error(f"unknown command {args.command!r}")
    except SystemExit as exc:
        return int(exc.code or 0)
    except (
        DeterminismViolation,
        PromiseViolation,
        BudgetExceeded,
        DataIntegrityError,
        FileNotFoundError,
        json.JSONDecodeError,
        ValueError,
    ) as exc:
        print(f"rmqc: analysis failed: {exc}", file=sys.stderr)
        return 1
    fmt = getattr(args, "fmt", "json")
    out_path = getattr(args, "output", None)
    try:
        if out_path:
            with open(out_path, "w", newline="") as fh:
                emit_report(report, fmt, fh)
        else:
            emit_report(report, fmt, sys.stdout)
    except _CsvUnsupported as exc:
        print(f"rmqc: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
