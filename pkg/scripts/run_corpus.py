"""Verify every packaged scenario (or the given files) and print a status table.

    python3 scripts/run_corpus.py [scenario.json ...] [--json out.json]
"""
from __future__ import annotations

import argparse
import json
import time
from pathlib import Path

from dp6.cli import corpus_paths, verify_report
from dp6.scenario import load_scenario


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("files", nargs="*", type=Path)
    ap.add_argument("--json", type=Path, help="also write all reports (with timings) here")
    args = ap.parse_args()
    reports = []
    for path in args.files or corpus_paths():
        t0 = time.perf_counter()
        rep = verify_report(load_scenario(path), timing=True)
        elapsed = time.perf_counter() - t0
        reports.append(rep)
        statuses = " ".join(f"{c['check']}={c['status']}" for c in rep["checks"])
        print(f"{rep['scenario']:<26} {rep['status']:<13} {elapsed:6.2f}s  {statuses}")
    if args.json:
        args.json.write_text(json.dumps(reports, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
