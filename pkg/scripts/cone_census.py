#!/usr/bin/env python3
"""Sweep staircase specs and certify every cone's halfspace description.

Prints one summary row per step count p and a final verdict. The sweep
range matches the acceptance gate by default (p <= 4, entries <= 3).
"""

import argparse
import time
from itertools import product

from fusscat.cone import verify_h_representation
from fusscat.polyomino import StairSpec, format_stair_spec


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-p", type=int, default=4)
    parser.add_argument("--max-entry", type=int, default=3)
    args = parser.parse_args()

    entries = range(1, args.max_entry + 1)
    failures = []
    for p in range(1, args.max_p + 1):
        start = time.perf_counter()
        count = 0
        dims = set()
        for u in product(entries, repeat=p):
            for r in product(entries, repeat=p):
                spec = StairSpec(u, r)
                report = verify_h_representation(spec)
                count += 1
                dims.add(report["checks"]["dimension"]["rank"])
                if not report["all_passed"]:
                    failures.append(format_stair_spec(spec))
        print(f"p={p}: {count:5d} specs certified in "
              f"{time.perf_counter() - start:6.1f}s, "
              f"cone dimensions {min(dims)}..{max(dims)}")
    if failures:
        print("FAILED specs:", ", ".join(failures))
        raise SystemExit(1)
    print("all halfspace descriptions certified")


if __name__ == "__main__":
    main()
