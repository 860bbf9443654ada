#!/usr/bin/env python3
"""Run the oracle-equivalence and bound suites and print a summary."""

import argparse
import sys
import time

from mist.verify import CLASSES, run_verification


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=200,
                    help="instances per class (default 200)")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--classes", nargs="*", default=list(CLASSES),
                    choices=list(CLASSES))
    args = ap.parse_args()

    start = time.perf_counter()
    report = run_verification(trials=args.trials, seed=args.seed,
                              classes=tuple(args.classes),
                              stop_on_first=False)
    elapsed = time.perf_counter() - start
    print(f"checked {report.checked} instances in {elapsed:.1f}s")
    if report.ok:
        print("all checks passed")
        return 0
    for f in report.failures[:10]:
        print(f"FAIL [{f.cls}] seed={f.seed} {f.check}: {f.detail}")
    print(f"{len(report.failures)} failure(s)")
    return 3


if __name__ == "__main__":
    sys.exit(main())
