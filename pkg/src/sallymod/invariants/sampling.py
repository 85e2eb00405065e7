"""Random minimal reductions and the constancy of the lengths that do not depend on J."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .pair import colength, pair_data, is_reduction


@dataclass
class ReductionSample:
    index: int
    generators: list
    r: int | None
    len_I_over_J: int | None = None
    sally: dict = dc_field(default_factory=dict)        # n -> λ(I^n/J^(n-1)I)
    colon_colength: int | None = None                   # λ(R/(J:I))
    steps: dict = dc_field(default_factory=dict)        # n -> λ(I^n/J I^(n-1))
    cap: dict = dc_field(default_factory=dict)          # n -> λ(R/(J ∩ I^n)), None when undecided

    @property
    def valid(self) -> bool:
        return self.r is not None


@dataclass
class IndependenceReport:
    seed: int
    trials: int
    n_max: int
    samples: list
    constant: dict          # quantity -> bool (asserted)
    cap_varies: bool | None  # reported, never asserted
    depth_hypothesis: bool
    inconclusive: bool

    @property
    def ok(self) -> bool:
        return self.inconclusive or all(self.constant.values())


def _random_reduction(I, rng: random.Random):
    fld = I.field
    if I.engine == "semigroup":
        vals = I.minimal_values()
        sg = I.semigroup
        z = sg.ring.zero()
        for v in vals:
            z = z + sg.element(v, fld.random_element(rng))
        return I.ideal_from_elements([z]) if z else None
    gens = list(I.generator_elements())
    low = min(g.degree() for g in gens)
    gens = [g for g in gens if g.degree() == low]
    out = []
    for _ in range(I.dim):
        h = I.ring.zero()
        for g in gens:
            h = h + g.scale(fld.random_element(rng))
        out.append(h)
    return I.ideal_from_elements(out)


def _measure(I, J, idx: int, n_max: int, bound: int, with_steps: bool) -> ReductionSample:
    if J is None or J.is_zero:
        return ReductionSample(idx, [], None)
    if I.engine == "semigroup" and J.least != I.least:
        return ReductionSample(idx, J.generator_elements(), None)
    if I.engine != "semigroup" and J.num_generators() != I.dim:
        return ReductionSample(idx, J.generator_elements(), None)
    pd = pair_data(I, J)
    r = is_reduction(J, I, bound, pd)
    smp = ReductionSample(idx, J.generator_elements(), r)
    if r is None:
        return smp
    smp.len_I_over_J = pd.len_j() - pd.len_power(1)
    smp.sally = {n: pd.sally_length(n) for n in range(2, n_max + 1)}
    smp.colon_colength = colength(J.colon(I))
    if with_steps:
        smp.steps = {n: pd.step_length(n) for n in range(1, n_max + 1)}
    for n in range(1, n_max + 1):
        try:
            smp.cap[n] = pd.len_j_cap_power(n)
        except Exception:
            smp.cap[n] = None
    return smp


def sample_reductions(I, trials: int, seed: int, include=None, n_max: int | None = None,
                      depth_at_least_d_minus_1: bool = False, bound: int = 25) -> IndependenceReport:
    """Sample random minimal reductions and compare the J-independent lengths.

    ``include`` (a known reduction) becomes sample 0.  Step lengths are
    compared only under ``depth_at_least_d_minus_1``.
    """
    fld = I.field
    if not fld.is_rational and fld.p < 100:
        raise ValueError(f"residue field GF({fld.p}) is too small for generic reductions")
    rng = random.Random(seed)
    cands = ([include] if include is not None else []) + [
        _random_reduction(I, rng) for _ in range(trials)]
    if n_max is None:
        first = next((c for c in cands if c is not None), None)
        r0 = is_reduction(first, I, bound) if first is not None else None
        n_max = (r0 or 1) + 1
    samples = [_measure(I, J, i, n_max, bound, depth_at_least_d_minus_1)
               for i, J in enumerate(cands)]
    valid = [s for s in samples if s.valid]
    inconclusive = len(valid) < 2

    def same(get):
        vals = [get(s) for s in valid]
        return all(v == vals[0] for v in vals)

    constant = {}
    if not inconclusive:
        constant["len(I/J)"] = same(lambda s: s.len_I_over_J)
        constant["len(I^n/J^(n-1)I)"] = same(lambda s: s.sally)
        constant["colength(J:I)"] = same(lambda s: s.colon_colength)
        if depth_at_least_d_minus_1:
            constant["len(I^n/JI^(n-1))"] = same(lambda s: s.steps)
    caps = [s.cap for s in valid if all(v is not None for v in s.cap.values())]
    cap_varies = None if len(caps) < 2 else any(c != caps[0] for c in caps)
    return IndependenceReport(seed, trials, n_max, samples, constant, cap_varies,
                              depth_at_least_d_minus_1, inconclusive)
