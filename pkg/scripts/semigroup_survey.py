"""Survey small numerical semigroups: reduction number, depth class, theorem flags.

Every flag whose hypotheses hold must agree with the computed depth class; the
script exits nonzero on the first disagreement.

    python scripts/semigroup_survey.py --max-gen 12 --embdim 3
"""

import argparse
import itertools
import sys
from math import gcd
from functools import reduce

from sallymod.invariants import sally_data
from sallymod.semigroup import NumericalSemigroup, sg_is_symmetric


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-gen", type=int, default=11)
    ap.add_argument("--embdim", type=int, default=3)
    args = ap.parse_args()

    seen = set()
    tally: dict[str, int] = {}
    for gens in itertools.combinations(range(3, args.max_gen + 1), args.embdim):
        if reduce(gcd, gens) != 1:
            continue
        S = NumericalSemigroup(gens)
        mg = tuple(S.minimal_generators())
        if len(mg) != args.embdim or mg in seen:
            continue
        seen.add(mg)
        m = S.maximal()
        rep = sally_data(m, S.ideal([S.multiplicity]))
        flags = {k: f for k, f in rep.theorem_flags.items() if f.applies}
        tally[rep.depth_class.value] = tally.get(rep.depth_class.value, 0) + 1
        print(f"{str(mg):22s} sym={sg_is_symmetric(S)!s:5s} r={rep.r} e={rep.e} "
              f"{rep.depth_class.value:15s} applies={','.join(flags) or '-'}")
        if not rep.ok or not all(f.consistent for f in rep.theorem_flags.values()):
            print("inconsistent report:", rep.failures, file=sys.stderr)
            return 1
    print(tally)
    return 0


if __name__ == "__main__":
    sys.exit(main())
