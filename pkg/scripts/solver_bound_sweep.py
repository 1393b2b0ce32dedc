"""Round-trip status as a function of the witness-search cap.

Shows which packaged scenarios need the bounded searches at all, and from
which cap on the comparison is decisive.

    python3 scripts/solver_bound_sweep.py [--bounds 1 2 5 20 200]
"""
from __future__ import annotations

import argparse
import time

from dp6.cli import corpus_paths
from dp6.dp6core import dp6_construct, extract_data_triple, input_data_triple, roundtrip_compare
from dp6.scenario import load_scenario


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--bounds", type=int, nargs="+", default=[1, 2, 5, 20, 200])
    args = ap.parse_args()
    print("scenario".ljust(26) + "".join(f"{b:>15}" for b in args.bounds))
    for path in corpus_paths():
        sc = load_scenario(path)
        S = dp6_construct(sc.field, sc.points, sc.aux, sc.subgroup)
        a, b = input_data_triple(sc.field, sc.points, S.subgroup), extract_data_triple(S)
        cells = []
        for bound in args.bounds:
            t0 = time.perf_counter()
            status = roundtrip_compare(a, b, bound).status
            cells.append(f"{status} {time.perf_counter() - t0:4.1f}s")
        print(sc.name.ljust(26) + "".join(f"{c:>15}" for c in cells))


if __name__ == "__main__":
    main()
