"""Batch interface: audit scenario files, sweep overlap grids, run searches.

Exit status contract (stable):
  0  audit verdict Conserved / search or sweep completed
  1  usage, parse, or file errors
  2  internal invariant failure
  3  audit verdict IncreaseViolation (copying would create information)
  4  audit verdict DecreaseViolation (deleting would destroy information)
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from .audit import AuditReport, InternalAuditError, Verdict, audit
from .scenario_io import (
    ScenarioFile,
    ScenarioFileError,
    build_scenario,
    parse_scenario_file,
)
from .scenarios import (
    Scenario,
    classical_copy_scenario,
    cloning_scenario,
    deleting_scenario,
)
from .search import DEFAULT_ITERATIONS, DEFAULT_RESTARTS, DEFAULT_SEED, minimize_error
from .states import pure_state

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 2
EXIT_INCREASE = 3
EXIT_DECREASE = 4

SEED_ENV_VAR = "INFOLEDGER_SEED"

SWEEP_HEADER = "c,s_in_bits,s_out_bits,delta_bits,gram_preserved"

_VERDICT_EXIT = {
    Verdict.CONSERVED: EXIT_OK,
    Verdict.INCREASE_VIOLATION: EXIT_INCREASE,
    Verdict.DECREASE_VIOLATION: EXIT_DECREASE,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the exit contract reserves
    # 2 for internal failures, so route usage problems through status 1.
    def error(self, message):
        raise _UsageError(message)


def _fmt9(value: float) -> str:
    text = f"{value:.9f}"
    return "0.000000000" if text == "-0.000000000" else text


def _overlap_pair(c: float):
    psi1 = pure_state([1.0, 0.0])
    psi2 = pure_state([c, math.sqrt(max(0.0, 1.0 - c * c))])
    return psi1, psi2


def _grid(start: float, stop: float, step: float) -> list[float]:
    if step <= 0.0:
        raise _UsageError("--step must be > 0")
    if start < 0.0 or stop > 1.0:
        raise _UsageError("overlap grid must lie within [0, 1]")
    points = []
    k = 0
    while True:
        c = start + k * step
        if c > stop + 1e-12:
            break
        points.append(min(c, 1.0))
        k += 1
    if not points:
        raise _UsageError(f"empty grid: from {start} to {stop} step {step}")
    return points


def _sweep_scenario(kind: str, c: float) -> Scenario:
    psi1, psi2 = _overlap_pair(c)
    if kind == "cloning":
        return cloning_scenario(psi1, psi2)
    return deleting_scenario(psi1, psi2)


def _print_report(label: str, report: AuditReport):
    print(f"scenario:       {label}")
    print(report.to_text())


def _write_record(path: str | None, record: dict):
    if path:
        Path(path).write_text(json.dumps(record, sort_keys=True, indent=2) + "\n")


def cmd_audit(path: str, record: str | None = None) -> int:
    sf = parse_scenario_file(Path(path).read_text())
    scenario = build_scenario(sf)
    report = audit(scenario)
    _print_report(sf.label or scenario.label, report)
    _write_record(record, report.to_record())
    return _VERDICT_EXIT[report.verdict]


def cmd_sweep(kind: str, start: float, stop: float, step: float, out: str) -> int:
    rows = [SWEEP_HEADER]
    for c in _grid(start, stop, step):
        report = audit(_sweep_scenario(kind, c))
        rows.append(
            ",".join(
                (
                    _fmt9(c),
                    _fmt9(report.s_in),
                    _fmt9(report.s_out),
                    _fmt9(report.delta),
                    "true" if report.gram_preserved else "false",
                )
            )
        )
    with open(out, "w", newline="\n") as handle:
        handle.write("\n".join(rows) + "\n")
    print(f"wrote {len(rows) - 1} rows to {out}")
    return EXIT_OK


def _resolve_seed(flag_seed: int | None, sf: ScenarioFile) -> int:
    if flag_seed is not None:
        return flag_seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _UsageError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from None
    if sf.search is not None:
        return sf.search.seed
    return DEFAULT_SEED


def cmd_search(
    path: str,
    restarts: int | None = None,
    iterations: int | None = None,
    seed: int | None = None,
    record: str | None = None,
) -> int:
    sf = parse_scenario_file(Path(path).read_text())
    scenario = build_scenario(sf)
    budget_restarts = restarts if restarts is not None else (
        sf.search.restarts if sf.search else DEFAULT_RESTARTS
    )
    budget_iterations = iterations if iterations is not None else (
        sf.search.iterations if sf.search else DEFAULT_ITERATIONS
    )
    result = minimize_error(
        scenario,
        restarts=budget_restarts,
        iterations=budget_iterations,
        seed=_resolve_seed(seed, sf),
    )
    print(f"scenario:   {sf.label or scenario.label}")
    print(f"best_error: {result.best_error:.6f}")
    print(f"restarts:   {result.restarts_used}")
    print(f"iterations: {result.iterations_per_restart}")
    print(f"seed:       {result.seed}")
    _write_record(
        record,
        {
            "best_error": result.best_error,
            "best_params": [float(x) for x in result.best_params],
            "restarts": result.restarts_used,
            "iterations": result.iterations_per_restart,
            "seed": result.seed,
        },
    )
    return EXIT_OK


def _canonical_scenarios() -> list[tuple[str, Scenario]]:
    zero = pure_state([1.0, 0.0])
    one = pure_state([0.0, 1.0])
    plus = pure_state([1.0, 1.0])
    return [
        ("cloning", cloning_scenario(zero, plus)),
        ("deleting", deleting_scenario(zero, plus)),
        ("classical", classical_copy_scenario(zero, one)),
    ]


def cmd_demo(only: str | None = None) -> int:
    runs = _canonical_scenarios()
    if only is not None:
        runs = [entry for entry in runs if entry[0] == only]
    status = EXIT_OK
    for i, (name, scenario) in enumerate(runs):
        if i:
            print()
        report = audit(scenario)
        _print_report(scenario.label, report)
        code = _VERDICT_EXIT[report.verdict]
        print(f"exit_status:    {code}")
        status = code
    return status if only is not None else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="infoledger", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_audit = sub.add_parser("audit", help="audit one scenario file")
    p_audit.add_argument("file")
    p_audit.add_argument("--record", help="write a JSON record of the report")

    p_sweep = sub.add_parser("sweep", help="audit a grid of source overlaps into a CSV table")
    p_sweep.add_argument("--kind", required=True, choices=("cloning", "deleting"))
    p_sweep.add_argument("--from", dest="start", type=float, required=True)
    p_sweep.add_argument("--to", dest="stop", type=float, required=True)
    p_sweep.add_argument("--step", type=float, required=True)
    p_sweep.add_argument("--out", required=True)

    p_search = sub.add_parser("search", help="search the unitary orbit for the target map")
    p_search.add_argument("file")
    p_search.add_argument("--restarts", type=int)
    p_search.add_argument("--iterations", type=int)
    p_search.add_argument("--seed", type=int)
    p_search.add_argument("--record", help="write a JSON record of the result")

    p_demo = sub.add_parser("demo", help="audit the three canonical scenarios")
    p_demo.add_argument("--only", choices=("cloning", "deleting", "classical"))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "audit":
            return cmd_audit(args.file, record=args.record)
        if args.command == "sweep":
            return cmd_sweep(args.kind, args.start, args.stop, args.step, args.out)
        if args.command == "search":
            return cmd_search(
                args.file,
                restarts=args.restarts,
                iterations=args.iterations,
                seed=args.seed,
                record=args.record,
            )
        return cmd_demo(only=args.only)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ScenarioFileError, FileNotFoundError, PermissionError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalAuditError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
