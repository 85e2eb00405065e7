"""Step lengths λ(I^n/J I^(n-1)) of the graph ideals, to see how far they stay at 1.

    python scripts/graph_steps.py 2 --upto 8
"""

import argparse
import time

from sallymod.families import graph_ideal
from sallymod.field import FieldSpec
from sallymod.invariants import pair_data


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("n", type=int)
    ap.add_argument("--upto", type=int, default=6)
    ap.add_argument("--field", default="p:32003")
    args = ap.parse_args()

    g = graph_ideal(args.n, FieldSpec.parse(args.field))
    pd = pair_data(g.I, g.J)
    t0 = time.perf_counter()
    print(f"n={args.n} d={g.d} colength(I)={pd.len_power(1)} colength(J)={pd.len_j()}")
    for k in range(1, args.upto + 1):
        step = pd.step_length(k)
        print(f"k={k:2d}  λ(I^k/JI^(k-1)) = {step:4d}   λ(R/I^k) = {pd.len_power(k):7d}"
              f"   [{time.perf_counter() - t0:6.1f}s]", flush=True)
        if step == 0:
            print(f"reduction number {k - 1}")
            break


if __name__ == "__main__":
    main()
