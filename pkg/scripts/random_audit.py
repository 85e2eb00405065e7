"""Run the full analysis on seeded random pairs and tally depth classes and failures.

    python scripts/random_audit.py --seeds 40
"""

import argparse
import collections
import sys

from sallymod.invariants import sally_data
from sallymod.random_ideals import random_fixture


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=30)
    ap.add_argument("--start", type=int, default=0)
    args = ap.parse_args()

    classes = collections.Counter()
    failures = 0
    for seed in range(args.start, args.start + args.seeds):
        I, J = random_fixture(seed)
        rep = sally_data(I, J)
        classes[(rep.d, rep.depth_class.value)] += 1
        if not rep.ok:
            failures += 1
            print(f"seed {seed}: {rep.failures}")
    for (d, cls), k in sorted(classes.items()):
        print(f"d={d} {cls:16s} {k}")
    print(f"{failures} failing reports")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
