"""Ratliff-Rush closures of powers and the power-ideal rescaling audit."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .hilbert import HilbertData, HilbertFitError, fit_hilbert
from .pair import PairData, colength, pair_data, reduction_number


@dataclass
class RatliffRushResult:
    closures: dict            # k -> ideal, or None when the chain did not settle
    settled_at: dict          # k -> j at which I^(k+j):I^j = I^(k+j+1):I^(j+1)
    powers_closed: dict       # k -> whether I^k equals its closure
    contains_power: dict      # k -> I^k ⊆ closure
    terms: dict               # k -> λ(closure_k / J closure_(k-1))
    e1_sum: int | None
    notes: list = dc_field(default_factory=list)

    @property
    def stabilized(self) -> bool:
        return all(v is not None for v in self.closures.values())


def _chain_limit(pd: PairData, k: int, j_max: int):
    prev = None
    for j in range(1, j_max + 1):
        c = pd.power(k + j)
        for _ in range(j):
            c = c.colon(pd.I)
        if prev is not None and c.equals(prev):
            return prev, j - 1
        prev = c
    return None, None


def ratliff_rush(I, J, k_max: int, j_max: int = 10, pair: PairData | None = None) -> RatliffRushResult:
    """Closures of I^k for k = 1..k_max as the settled value of I^(k+j) : I^j.

    ``e1_sum`` is the sum of λ(closure_k / J closure_(k-1)) over k = 1..k_max,
    reported only when every chain settled and the last term is zero.
    """
    pd = pair if pair is not None else pair_data(I, J)
    closures, settled, closed, contains, terms = {}, {}, {}, {}, {}
    for k in range(1, k_max + 1):
        c, j = _chain_limit(pd, k, j_max)
        closures[k], settled[k] = c, j
        if c is not None:
            contains[k] = c.contains(pd.power(k))
            closed[k] = colength(c) == pd.len_power(k) and contains[k]
    res = RatliffRushResult(closures, settled, closed, contains, terms, None)
    if not res.stabilized:
        res.notes.append(f"chain did not settle within j_max={j_max}; e1 audit skipped")
        return res
    prev = None
    for k in range(1, k_max + 1):
        lower = J if prev is None else J * prev
        terms[k] = colength(lower) - colength(closures[k])
        prev = closures[k]
    if terms[k_max] != 0:
        res.notes.append(f"term at k={k_max} is nonzero; raise k_max for the e1 sum")
    else:
        res.e1_sum = sum(terms.values())
    return res


@dataclass
class NaritaAudit:
    q: int
    e: tuple
    e_tilde: tuple
    s0_tilde: int
    reduction_number_one: bool | None
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _fit_powers(pd: PairData, step: int, d: int, start_N: int, max_N: int) -> HilbertData:
    N = start_N
    while True:
        vals = [pd.len_power(step * n) for n in range(N + 1)]
        try:
            return fit_hilbert(vals, d)
        except HilbertFitError:
            if N >= max_N:
                raise
            N += 1


def narita_rescale_check(I, q: int, J=None, max_N: int = 12) -> NaritaAudit:
    """Compare the Hilbert coefficients of I^q with the rescaling identities (d = 2)."""
    d = I.dim
    if d != 2:
        raise ValueError(f"the rescaling audit is implemented for d = 2 only (d = {d})")
    pd = pair_data(I, J)
    start = d + 3
    if J is not None:
        start = max(start, reduction_number(J, I, pair=pd) + d + 3)
    hd = _fit_powers(pd, 1, d, start, max_N)
    if q < max(hd.postulation, 1):
        raise ValueError(f"q={q} is below the postulation index {hd.postulation}")
    hq = _fit_powers(pd, q, d, d + 3, max_N)
    e, et = hd.coefficients, hq.coefficients
    lam_q = pd.len_power(q)
    s0t = et[1] - et[0] + lam_q
    checks = {
        "e0~==q^2*e0": et[0] == q * q * e[0],
        "2*e1~==2q*e1+q^2*e0-q*e0": 2 * et[1] == 2 * q * e[1] + q * q * e[0] - q * e[0],
        "e2~==e2": et[2] == e[2],
        "e2>=0": e[2] >= 0,
        "s0~==e2": s0t == e[2],
    }
    red1 = None
    if J is not None and getattr(J, "monomial", True):
        Jq = I.ideal_from_elements([g ** q for g in J.generator_elements()])
        Iq = pd.power(q)
        red1 = colength(Jq * Iq) == pd.len_power(2 * q)
        checks["s0~==0<=>reduction_number_one"] = (s0t == 0) == red1
    return NaritaAudit(q, e, et, s0t, red1, checks)
