"""Sally-module lengths, depth classification and the consistency audit.

Everything here works on either engine: the functions only use lengths,
sums, products, intersections and colons of ideals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from typing import Any

from .hilbert import HilbertData, HilbertFitError, binomial, fit_binomial, fit_hilbert
from .pair import (BudgetExceeded, PairData, ReductionError, default_power_budget, pair_data,
                   reduction_number)


class DepthClass(str, enum.Enum):
    CohenMacaulay = "CohenMacaulay"
    ExactlyDMinus1 = "ExactlyDMinus1"
    AtMostDMinus2 = "AtMostDMinus2"
    Undetermined = "Undetermined"

    @property
    def at_least_d_minus_1(self) -> bool:
        return self in (DepthClass.CohenMacaulay, DepthClass.ExactlyDMinus1)


@dataclass
class AnalysisConfig:
    bound_reduction: int = 25
    # largest power of I an analysis may form; None picks an engine default
    power_budget: int | None = None
    N: int | None = None
    oracle: bool = False
    ratliff_j_max: int = 10
    scan: int = 3


@dataclass
class Check:
    """One asserted identity or inequality with both sides recorded."""

    name: str
    lhs: Any
    rhs: Any
    holds: bool
    relation: str = "=="

    def as_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs,
                "relation": self.relation, "holds": self.holds}


def _check(name, lhs, rhs, relation="=="):
    ops = {"==": lambda a, b: a == b, "<=": lambda a, b: a <= b, ">=": lambda a, b: a >= b,
           "<=>": lambda a, b: bool(a) == bool(b)}
    return Check(name, lhs, rhs, ops[relation](lhs, rhs), relation)


@dataclass
class TheoremFlag:
    name: str
    applies: bool
    hypotheses: dict
    conclusion: str
    consistent: bool
    n: int | None = None

    def as_dict(self) -> dict:
        return {"name": self.name, "applies": self.applies, "n": self.n,
                "hypotheses": self.hypotheses, "conclusion": self.conclusion,
                "consistent": self.consistent}


@dataclass
class SallyReport:
    engine: str
    d: int
    r: int
    N: int
    colength_I: int
    colength_J: int
    values: dict[int, int]
    step_lengths: dict[int, int]
    sally_lengths: dict[int, int]
    sally_formula: dict[int, int]
    vv_flags: dict[int, bool] | None
    hilbert: HilbertData | None = None
    e: tuple[int, ...] | None = None
    s: tuple[int, ...] | None = None
    depth_class: DepthClass = DepthClass.Undetermined
    depth_routes: dict = dc_field(default_factory=dict)
    hp_numerator: tuple[int, ...] | None = None
    theorem_flags: dict[str, TheoremFlag] = dc_field(default_factory=dict)
    checks: list[Check] = dc_field(default_factory=list)
    notes: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks) and all(
            t.consistent for t in self.theorem_flags.values())

    @property
    def failures(self) -> list[str]:
        out = [c.name for c in self.checks if not c.holds]
        out += [f"theorem:{t.name}" for t in self.theorem_flags.values() if not t.consistent]
        return out

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


# -- Valabrega-Valla -------------------------------------------------------------

def vv_check(I, J, k_max: int, route: str = "length", pair: PairData | None = None) -> dict[int, bool]:
    """Per-k flags for J ∩ I^k = J I^(k-1), k = 1..k_max."""
    pd = pair if pair is not None else pair_data(I, J)
    return {k: pd.vv(k, route) for k in range(1, k_max + 1)}


def _vv_available(J) -> bool:
    return getattr(J, "monomial", True)


# -- depth -------------------------------------------------------------------

def depth_routes(I, J, r: int, e1: int | None = None, vv: dict[int, bool] | None = None,
                 pair: PairData | None = None) -> dict:
    """Evidence from the three independent routes.

    ``valabrega_valla``: VV for k <= r (equivalent to a CM associated graded ring);
    ``huckaba``: e1 against the sum of step lengths (needs e1);
    ``certificate``: some n >= 1 with VV through n and λ(I^(n+1)/J I^n) <= 1.
    """
    pd = pair if pair is not None else pair_data(I, J)
    d = I.dim
    routes: dict[str, Any] = {}
    if vv is None and _vv_available(J):
        vv = vv_check(I, J, max(r, 1), pair=pd)
    if vv is not None:
        routes["valabrega_valla"] = all(vv.get(k, True) for k in range(1, r + 1))
    steps = sum(pd.step_length(n) for n in range(1, r + 1))
    if e1 is not None:
        routes["huckaba"] = {"e1": e1, "step_sum": steps, "equal": e1 == steps}
    if d == 1:
        routes["trivial"] = "depth >= d-1 = 0 holds for every ideal of a one-dimensional CM ring"
    if vv is not None:
        cert = None
        for n in range(1, max(r, 1) + 1):
            if all(vv.get(k, True) for k in range(1, n + 1)) and pd.step_length(n + 1) <= 1:
                cert = n
                break
        routes["certificate"] = cert
    return routes


def classify_depth(I, routes: dict) -> DepthClass:
    if routes.get("valabrega_valla"):
        return DepthClass.CohenMacaulay
    h = routes.get("huckaba")
    if h is not None:
        return DepthClass.ExactlyDMinus1 if h["equal"] else DepthClass.AtMostDMinus2
    if routes.get("certificate") is not None or I.dim == 1:
        return DepthClass.ExactlyDMinus1 if "valabrega_valla" in routes else DepthClass.Undetermined
    return DepthClass.Undetermined


def depth_class(I, J, e1: int | None = None, r: int | None = None,
                pair: PairData | None = None, route: str = "length") -> DepthClass:
    pd = pair if pair is not None else pair_data(I, J)
    if r is None:
        r = reduction_number(J, I, pair=pd)
    vv = vv_check(I, J, max(r, 1), route=route, pair=pd) if _vv_available(J) else None
    return classify_depth(I, depth_routes(I, J, r, e1, vv, pd))


@dataclass
class DepthScan:
    depth_class: DepthClass
    vv: dict            # k -> bool, computed lazily
    steps: dict         # n -> λ(I^n/J I^(n-1))
    certificate: int | None
    vv_failure: int | None
    r: int | None


def depth_scan(I, J, k_limit: int = 8, pair: PairData | None = None) -> DepthScan:
    """Classify depth with the fewest powers of I.

    Scans k = 1, 2, ... computing VV(k) and λ(I^k/J I^(k-1)).  Stops on CM
    (VV holds up to the reduction number), or on a VV failure together with
    a depth certificate: VV through n and λ(I^(n+1)/J I^n) <= 1.
    """
    pd = pair if pair is not None else pair_data(I, J)
    vv, steps = {}, {}
    cert = fail = None
    for k in range(1, k_limit + 1):
        vv[k] = pd.vv(k)
        steps[k] = pd.step_length(k)
        if not vv[k] and fail is None:
            fail = k
        through = fail is None or fail > k - 1
        if cert is None and k >= 2 and steps[k] <= 1 and all(vv[j] for j in range(1, k)):
            cert = k - 1
        if steps[k] == 0 and through:
            return DepthScan(DepthClass.CohenMacaulay, vv, steps, cert, fail, k - 1)
        if fail is not None and cert is not None:
            return DepthScan(DepthClass.ExactlyDMinus1, vv, steps, cert, fail, None)
        if steps[k] == 0:
            # reduction number reached with a VV failure and no certificate
            cls = DepthClass.ExactlyDMinus1 if I.dim == 1 else DepthClass.Undetermined
            return DepthScan(cls, vv, steps, cert, fail, k - 1)
    return DepthScan(DepthClass.Undetermined, vv, steps, cert, fail, None)


# -- Hilbert-Poincare numerator ------------------------------------------------------

def hp_numerator(step_lengths: dict[int, int], colength_I: int, r: int,
                 depth: DepthClass) -> tuple[int, ...]:
    """Coefficients of p(t) = λ(R/I) + sum_n [λ(I^n/JI^(n-1)) - λ(I^(n+1)/JI^n)] t^n."""
    if not depth.at_least_d_minus_1:
        raise ValueError(f"the numerator formula needs depth >= d-1; depth class is {depth.value}")
    coeffs = [colength_I]
    for n in range(1, r + 1):
        coeffs.append(step_lengths[n] - step_lengths.get(n + 1, 0))
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def series_from_numerator(p: tuple[int, ...], d: int, upto: int) -> list[int]:
    """Coefficients of p(t)/(1-t)^d for t^0..t^upto."""
    return [sum(p[i] * binomial(n - i + d - 1, d - 1) for i in range(min(len(p), n + 1)))
            for n in range(upto + 1)]


# -- theorem flags -----------------------------------------------------------------

def cm_and_theorem_flags(I, J, r: int, vv: dict[int, bool] | None, depth: DepthClass,
                         pair: PairData | None = None) -> dict[str, TheoremFlag]:
    """Evaluate the hypothesis sets of the criteria and audit their conclusions."""
    from .form import v_dimension

    pd = pair if pair is not None else pair_data(I, J)
    flags: dict[str, TheoremFlag] = {}
    if vv is None:
        return flags
    cm = depth == DepthClass.CohenMacaulay

    def vv_through(n):
        return all(vv.get(k, True) for k in range(1, n + 1))

    # gr CM iff VV through n, I^(n+1) not in J, I^(n+2) = J I^(n+1), given λ(I^(n+1)/JI^n) = 1
    ns = [n for n in range(0, r + 1) if pd.step_length(n + 1) == 1]
    if ns:
        n = ns[0]
        cond = vv_through(n) and not pd.in_j(n + 1) and pd.step_length(n + 2) == 0
        consistent = all(
            (vv_through(m) and not pd.in_j(m + 1) and pd.step_length(m + 2) == 0) == cm for m in ns)
        flags["cm_criterion"] = TheoremFlag(
            "cm_criterion", True,
            {"step_length_one_at": ns, "vv_through_n": vv_through(n),
             "power_not_in_J": not pd.in_j(n + 1), "next_step_zero": pd.step_length(n + 2) == 0},
            f"associated graded ring CM iff condition holds (condition={cond})", consistent, n)
    else:
        flags["cm_criterion"] = TheoremFlag("cm_criterion", False, {"step_length_one_at": []},
                                            "not applicable", True)

    # VV through n, dim V >= 2, λ(I^(n+1)/JI^n) = 1, n >= 1 imply CM
    hit = None
    hyp: dict = {}
    for n in [m for m in ns if m >= 1]:
        dv = v_dimension(I, J, n, pair=pd) if _vv_available(J) else None
        hyp = {"n": n, "vv_through_n": vv_through(n), "dim_V": dv}
        if vv_through(n) and dv is not None and dv >= 2:
            hit = n
            break
    flags["form_criterion"] = TheoremFlag(
        "form_criterion", hit is not None, hyp,
        "associated graded ring CM" if hit is not None else "not applicable",
        (not (hit is not None)) or cm, hit)

    # Gorenstein ring, I = m, λ(m^3/J m^2) = 1 imply CM
    is_max = I.equals(I.maximal_ideal()) if getattr(I, "monomial", True) else False
    gor = I.ring_is_gorenstein
    s3 = pd.step_length(3)
    applies = gor and is_max and s3 == 1
    flags["gorenstein_m3"] = TheoremFlag(
        "gorenstein_m3", applies, {"gorenstein": gor, "I_is_maximal": is_max, "step_length_3": s3},
        "associated graded ring CM" if applies else "not applicable", (not applies) or cm)

    # VV through n and λ(I^(n+1)/JI^n) <= 1 for some n >= 1 imply depth >= d-1
    cert = next((n for n in range(1, max(r, 1) + 1)
                 if vv_through(n) and pd.step_length(n + 1) <= 1), None)
    flags["depth_criterion"] = TheoremFlag(
        "depth_criterion", cert is not None,
        {"n": cert, "step_length_next": pd.step_length(cert + 1) if cert else None},
        "depth >= d-1" if cert is not None else "not applicable",
        cert is None or depth.at_least_d_minus_1, cert)

    s2 = pd.step_length(2)
    applies = s2 == 1
    flags["i2_ji_one"] = TheoremFlag(
        "i2_ji_one", applies, {"step_length_2": s2},
        "depth >= d-1" if applies else "not applicable", (not applies) or depth.at_least_d_minus_1, 1)
    return flags


# -- the report --------------------------------------------------------------------

def _minimal_reduction_check(I, J) -> None:
    d = I.dim
    if not _vv_available(J):
        return  # principal non-monomial element of a one-dimensional ring
    k = J.num_generators()
    if k != d:
        raise ReductionError(f"a minimal reduction needs d={d} generators, J has {k}")


def sally_data(I, J, N: int | None = None, config: AnalysisConfig | None = None) -> SallyReport:
    """All lengths, fitted coefficients, flags and audits for the pair (I, J)."""
    cfg = config or AnalysisConfig()
    if N is None:
        N = cfg.N
    pd = pair_data(I, J)
    d = I.dim
    _minimal_reduction_check(I, J)
    budget = cfg.power_budget if cfg.power_budget is not None else default_power_budget(I)
    r = reduction_number(J, I, cfg.bound_reduction, pd, power_budget=budget)
    need = r + d + 3
    notes: list[str] = []
    fit = True
    if N is None:
        if need > budget:
            fit = False
            N = max(r + 2, 2)
            if N > budget:
                raise BudgetExceeded(f"the report needs I^{N}, beyond the power budget {budget}", N)
            notes.append(f"Hilbert-Samuel fit skipped: it needs powers up to {need}, "
                         f"budget is {budget}")
        else:
            N = need
    elif N < need:
        notes.append(f"N raised from {N} to {need} (reduction number {r})")
        N = need

    lam_I, lam_J = pd.len_power(1), pd.len_j()
    values = {n: pd.len_power(n) for n in range(0, N + 1)}
    steps = {n: pd.step_length(n) for n in range(1, N + 1)}
    sally = {n: pd.sally_length(n) for n in range(2, N + 1)}
    e0_formula = lam_J
    formula = {n: e0_formula * binomial(n + d - 2, d) + lam_I * binomial(n + d - 2, d - 1) - values[n]
               for n in range(2, N + 1)}

    vv = None
    if _vv_available(J):
        vv = vv_check(I, J, max(r, 1), pair=pd)
    else:
        notes.append("J is not a monomial ideal: Valabrega-Valla checks are not decided by valuations")

    rep = SallyReport(I.engine, d, r, N, lam_I, lam_J, values, steps, sally, formula, vv, notes=notes)
    ck = rep.checks

    if cfg.oracle and vv is not None:
        vv2 = vv_check(I, J, max(r, 1), route="eliminate", pair=pd)
        ck.append(_check("vv_length_route==elimination_route", vv, vv2))

    for n in range(2, N + 1):
        ck.append(_check(f"sally_closed_formula[n={n}]", sally[n], formula[n]))
    for n in range(r + 1, N + 1):
        ck.append(_check(f"step_length_vanishes[n={n}]", steps[n], 0))

    e = s = None
    if fit:
        try:
            hd = fit_hilbert([values[n] for n in range(N + 1)], d)
            s_coeffs, _ = fit_binomial({n: sally[n] for n in range(2, N + 1)}, d - 1)
        except HilbertFitError as exc:
            notes.append(f"fit failed: {exc}")
            hd = None
        if hd is not None:
            rep.hilbert = hd
            e = rep.e = hd.coefficients
            s = rep.s = s_coeffs
            ck.append(_check("e0==colength(J)", e[0], lam_J))
            ck.append(_check("e1==len(I/J)+s0", e[1], lam_J - lam_I + s[0]))
            for i in range(2, d + 1):
                ck.append(_check(f"e{i}==s{i - 1}", e[i], s[i - 1]))

    e1 = e[1] if e is not None else None
    routes = depth_routes(I, J, r, e1, vv, pd)
    rep.depth_routes = routes
    rep.depth_class = classify_depth(I, routes)
    if "huckaba" in routes and routes.get("certificate") is not None:
        ck.append(_check("certificate_implies_huckaba_equality",
                         routes["huckaba"]["equal"], True))
    if d == 1 and "huckaba" in routes:
        ck.append(_check("huckaba_equality_in_dimension_one", routes["huckaba"]["equal"], True))

    # inequality audit
    if e is not None:
        e0, e1 = e[0], e[1]
        ck.append(_check("northcott:e0-e1<=colength(I)", e0 - e1, lam_I, "<="))
        ck.append(_check("huneke_ooishi:equality<=>I^2==JI",
                         e0 - e1 == lam_I, steps[2] == 0, "<=>"))
        lower = sum(lam_J - pd.len_j_plus_power(n) for n in range(1, r + 1)) if vv is not None else None
        upper = sum(steps[n] for n in range(1, r + 1))
        if lower is not None:
            ck.append(_check("sandwich_lower:sum_len((I^n+J)/J)<=e1", lower, e1, "<="))
        ck.append(_check("sandwich_upper:e1<=sum_step_lengths", e1, upper, "<="))
        if rep.depth_class is not DepthClass.Undetermined and "valabrega_valla" in routes:
            ck.append(_check("sandwich_equality<=>depth>=d-1", e1 == upper,
                             rep.depth_class.at_least_d_minus_1, "<=>"))
        ck.append(_check("e1>=2e0-colength(I^2)", e1, 2 * e0 - values[2], ">="))
        if d >= 2:
            ck.append(_check("narita:e2>=0", e[2], 0, ">="))

    if rep.depth_class.at_least_d_minus_1:
        p = hp_numerator(steps, lam_I, r, rep.depth_class)
        rep.hp_numerator = p
        ck.append(_check("hp:p(1)==e0", sum(p), e[0] if e is not None else lam_J))
        if e is not None:
            ck.append(_check("hp:p'(1)==e1", sum(i * c for i, c in enumerate(p)), e[1]))
        top = r + d + 2
        if N >= top + 1:
            direct = [values[n + 1] - values[n] for n in range(top + 1)]
            ck.append(_check("hp:series==len(I^n/I^(n+1))", series_from_numerator(p, d, top), direct))
        else:
            notes.append(f"HP series check skipped: needs λ(R/I^n) up to n={top + 1}")

    rep.theorem_flags = cm_and_theorem_flags(I, J, r, vv, rep.depth_class, pd)
    return rep
