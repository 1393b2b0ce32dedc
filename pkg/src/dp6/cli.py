"""Command line entry point: ``dp6 construct | verify | selftest``.

Exit codes: 0 all checks pass, 1 some check failed, 2 input error.
"""
from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from .brauer3 import Brauer3Group, decompose3, direct_sum_report, documented_involutions
from .dp6core import galois_hexagon_action, picard_check, triangle_field
from .errors import Dp6Error
from .runner import CHECK_ORDER, InapplicableCheck, ScenarioRun, overall
from .scenario import REPORT_SCHEMA, SURFACE_SCHEMA, Scenario, dumps, load_scenario

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
SELFTEST_SCHEMA = "dp6-selftest/1"

# built-in corpus, in report order
CORPUS = ("split_rational.json", "cyclic_cubic.json", "quadratic_swap_qi.json",
          "corrupted_descent.json", "pure_cubic_s3.json", "pure_cubic_s3_quadratic.json",
          "biquadratic_qi.json")


def corpus_paths() -> list[Path]:
    base = resources.files("dp6") / "data"
    return [Path(str(base / name)) for name in CORPUS]


def surface_json(sc: Scenario) -> dict:
    run = ScenarioRun(sc)
    S = run.S
    hx = galois_hexagon_action(S)
    F = S.field
    return {
        "schema": SURFACE_SCHEMA,
        "scenario": sc.name,
        "field": {"modulus": [str(c) for c in F.modulus],
                  "automorphisms": [img.to_json() for img in F.images]},
        "subgroup": list(S.subgroup),
        "L": triangle_field(S).to_json(),
        "P": [p.to_json() for p in S.P],
        "Q": [q.to_json() for q in S.Q],
        "aux": S.aux.to_json(),
        "aux_y": S.aux_y.to_json(),
        "phi": S.phi.to_json(),
        "psi": S.psi.to_json(),
        "ideal": {"generators": S.generators_text(), "reduced": S.reduced_text(),
                  "matrices": [[[x.to_json() for x in r] for r in G] for G in S.forms]},
        "hexagon": hx.to_json(),
    }


def verify_report(sc: Scenario, checks: list[str] | None = None, timing: bool = False) -> dict:
    run = ScenarioRun(sc)
    run.S  # construction errors are input errors
    results = run.run(checks, timing)
    return {"schema": REPORT_SCHEMA, "scenario": sc.name,
            "checks": [r.to_json(timing) for r in results], "status": overall(results)}


def _summary_lines(report: dict) -> list[str]:
    lines = [f"scenario {report['scenario']}"]
    for c in report["checks"]:
        lines.append(f"  {c['status'].upper():<13} {c['check']:<10} [{c['ref']}]")
    lines.append(f"overall: {report['status']}")
    return lines


def _scenario_expectations(sc: Scenario) -> dict[str, str]:
    return {str(k): str(v) for k, v in sc.expect.items()}


def selftest_report(timing: bool = False) -> dict:
    entries = []
    for path in corpus_paths():
        sc = load_scenario(path)
        rep = verify_report(sc, timing=timing)
        expect = _scenario_expectations(sc)
        got = {c["check"]: c["status"] for c in rep["checks"]}
        met = all(k in got for k in expect) and all(st == expect.get(k, "pass") for k, st in got.items())
        entries.append({"scenario": sc.name, "file": path.name, "expected": expect,
                        "checks": rep["checks"], "status": "pass" if met else "fail"})
    pic = picard_check()
    suites = [{"suite": "picard", "status": "pass" if pic["ok"] else "fail",
               "KK": pic["KK"], "count": pic["count"]}]
    b3 = []
    for n in range(1, 5):
        for name, sig in documented_involutions(n).items():
            G = Brauer3Group(n, sig)
            bad = 0
            for x in G.elements():
                p, m = decompose3(x, G)
                if G.add(p, m) != x or G.sigma(p) != p or G.sigma(m) != G.scale(-1, m):
                    bad += 1
            ok = bad == 0 and direct_sum_report(G)["ok"]
            b3.append({"rank": n, "involution": name, "ok": ok})
    suites.append({"suite": "brauer3", "status": "pass" if all(e["ok"] for e in b3) else "fail", "cases": b3})
    allok = all(e["status"] == "pass" for e in entries + suites)
    return {"schema": SELFTEST_SCHEMA, "scenarios": entries, "suites": suites,
            "status": "pass" if allok else "fail"}


def _selftest_lines(rep: dict) -> list[str]:
    lines = []
    for e in rep["scenarios"]:
        note = f"expected {e['expected']}" if e["expected"] else "all checks pass"
        lines.append(f"{e['status'].upper():<5} scenario {e['scenario']:<20} ({len(e['checks'])} checks, {note})")
    for s in rep["suites"]:
        lines.append(f"{s['status'].upper():<5} suite {s['suite']}")
    lines.append(f"selftest: {rep['status']}")
    return lines


def _parse_checks(raw: str | None) -> list[str] | None:
    if raw is None:
        return None
    names = [c.strip() for c in raw.split(",") if c.strip()]
    unknown = [c for c in names if c not in CHECK_ORDER]
    if unknown or not names:
        raise argparse.ArgumentTypeError(f"unknown checks {unknown}; choose from {', '.join(CHECK_ORDER)}")
    return names


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dp6", description="Degree-6 Del Pezzo surfaces over number fields.")
    sub = ap.add_subparsers(dest="command", required=True)
    c = sub.add_parser("construct", help="build the surface of a scenario and print it as JSON")
    c.add_argument("file")
    c.add_argument("-o", "--output", help="write to this file instead of stdout")
    v = sub.add_parser("verify", help="run verification checks on a scenario")
    v.add_argument("file")
    v.add_argument("--checks", help="comma-separated subset of: " + ", ".join(CHECK_ORDER))
    v.add_argument("--json", action="store_true", help="print the JSON report only")
    v.add_argument("--timing", action="store_true", help="include per-check timings")
    s = sub.add_parser("selftest", help="run the built-in corpus and suites")
    s.add_argument("--json", action="store_true")
    s.add_argument("--timing", action="store_true")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "construct":
            text = dumps(surface_json(load_scenario(args.file)))
            if args.output:
                Path(args.output).write_text(text)
            else:
                sys.stdout.write(text)
            return EXIT_OK
        if args.command == "verify":
            try:
                checks = _parse_checks(args.checks)
            except argparse.ArgumentTypeError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_INPUT
            rep = verify_report(load_scenario(args.file), checks, args.timing)
            if args.json:
                sys.stdout.write(dumps(rep))
            else:
                print("\n".join(_summary_lines(rep)))
            return EXIT_FAIL if rep["status"] == "fail" else EXIT_OK
        rep = selftest_report(args.timing)
        if args.json:
            sys.stdout.write(dumps(rep))
        else:
            print("\n".join(_selftest_lines(rep)))
        return EXIT_OK if rep["status"] == "pass" else EXIT_FAIL
    except (Dp6Error, InapplicableCheck) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
