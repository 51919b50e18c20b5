"""``thermacorr`` command line.

Exit codes: 0 success, 2 invalid arguments, 3 verification disagreement,
4 frontier or feasibility error. ``THERMACORR_TOL`` overrides the oracle
match tolerance used by ``verify``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

from . import bounds
from .cases import CaseParams, build_case
from .entangler import FIGURE_PLAN, UnitaryPlan, apply_entangler, marginal_temperatures
from .criteria import negativity
from .figures import DEFAULT_GRID, figure_csv
from .protocol import FrontierError, run_protocol
from .verify import SUITES, run_suite

EXIT_OK, EXIT_ARGS, EXIT_DISAGREE, EXIT_FRONTIER = 0, 2, 3, 4
DEFAULT_MATCH_TOL = 1e-6


def _jsonable(obj):
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else str(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "item"):
        return _jsonable(obj.item())
    return obj


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(report), indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("key", "value"))
    for k in sorted(report):
        v = _jsonable(report[k])
        w.writerow((k, json.dumps(v) if isinstance(v, (list, dict)) else v))
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _match_tol() -> float:
    raw = os.environ.get("THERMACORR_TOL")
    if raw is None:
        return DEFAULT_MATCH_TOL
    value = float(raw)
    if not value > 0:
        raise ValueError("THERMACORR_TOL must be positive")
    return value


def cmd_figure(args) -> int:
    if args.format != "csv":
        raise ValueError("figures are written as CSV only")
    _emit(figure_csv(args.n, args.grid), args.out)
    return EXIT_OK


def cmd_case(args) -> int:
    report = build_case(CaseParams(args.case_id, args.p, args.q, args.betaE))
    _emit(_render(report.to_dict(), args.format), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    rc = bounds.classify(args.p)
    report = {"p": rc.p, "class": rc.label, "radius": rc.radius,
              "p_star": bounds.symmetric_threshold().p_star}
    _emit(_render(report, args.format), args.out)
    return EXIT_OK


def cmd_thresholds(args) -> int:
    th = bounds.symmetric_threshold()
    report = {"p_star": th.p_star, "betaE_star": th.betaE_star, "kT_over_E": th.kT_over_E}
    if args.d is not None:
        report["d"] = args.d
        report["qudit_betaE_bound"] = bounds.qudit_betaE_bound(args.d)
    _emit(_render(report, args.format), args.out)
    return EXIT_OK


def cmd_marginals(args) -> int:
    plan = UnitaryPlan(args.theta, FIGURE_PLAN)
    bA, bB = marginal_temperatures(plan, args.p)
    neg = negativity(apply_entangler(plan, args.p), 2, 2)
    report = {"p": args.p, "theta": args.theta, "plan": plan.describe(),
              "betaE_A": bA, "betaE_B": bB, "negativity": neg, "entangled": neg > 1e-12}
    _emit(_render(report, args.format), args.out)
    return EXIT_OK


def cmd_protocol(args) -> int:
    ledger = run_protocol(args.beta1E, args.beta2E, args.betaE)
    _emit(_render(ledger.to_dict(), args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suite(args.suite, seed=args.seed, samples=args.samples,
                        grid=args.grid or 50, match_tol=_match_tol())
    report = {"seed": args.seed, "suites": [r.to_dict() for r in results],
              "ok": all(r.ok for r in results)}
    _emit(_render(report, args.format), args.out)
    return EXIT_OK if report["ok"] else EXIT_DISAGREE


def _common(p: argparse.ArgumentParser, fmt: str = "json") -> None:
    p.add_argument("--out", help="write to this file instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default=fmt, help=f"output format (default {fmt})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thermacorr",
                                     description="Entanglement and correlations from thermal qubits.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("figure", help="write figure data as CSV")
    p.add_argument("n", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--grid", type=int,
                   help="steps per axis for figures 1-3, d_max for figure 4 "
                        f"(defaults {DEFAULT_GRID})")
    _common(p, "csv")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("case", help="analyse one of the five catalogued correlated states")
    p.add_argument("case_id", type=int, choices=(1, 2, 3, 4, 5))
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--q", type=float, default=0.0, help="second weight, cases 3 and 5 (default 0)")
    p.add_argument("--betaE", type=float, default=0.0, help="inverse temperature times gap (default 0)")
    _common(p)
    p.set_defaults(func=cmd_case)

    p = sub.add_parser("classify", help="free or resource thermal qubit")
    p.add_argument("--p", type=float, required=True, help="ground-state weight in [1/2, 1]")
    _common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("thresholds", help="critical temperatures")
    p.add_argument("--d", type=int, help="also report the qudit bound for this dimension")
    _common(p)
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("marginals", help="marginal temperatures of the unequal-temperature entangler")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    _common(p)
    p.set_defaults(func=cmd_marginals)

    p = sub.add_parser("protocol", help="cost ledger of the cool-entangle-teleport protocol")
    p.add_argument("--beta1E", type=float, required=True)
    p.add_argument("--beta2E", type=float, required=True)
    p.add_argument("--betaE", type=float, default=None,
                   help="cooled inverse temperature for equal targets (default beta1E + 1)")
    _common(p)
    p.set_defaults(func=cmd_protocol)

    p = sub.add_parser("verify", help="cross-check analytic verdicts against oracles")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=2000, help="Haar draws per spectrum (default 2000)")
    p.add_argument("--grid", type=int, help="points per axis for case grids (default 50)")
    _common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FrontierError as exc:
        print(f"thermacorr: {exc}", file=sys.stderr)
        return EXIT_FRONTIER
    except (ValueError, OSError) as exc:
        print(f"thermacorr: {exc}", file=sys.stderr)
        return EXIT_ARGS


if __name__ == "__main__":
    sys.exit(main())
