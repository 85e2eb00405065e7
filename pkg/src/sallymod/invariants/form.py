"""The vector space V = (I + J:I^n)/(J:I^n), its multilinear form, and the
principal-or-stable dichotomy for powers once λ(I^(n+1)/J I^n) = 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..linalg import RowReducer, rank
from .pair import PairData, colength, pair_data


class HypothesisError(ValueError):
    """A precondition of a construction fails; ``hypothesis`` names which one."""

    def __init__(self, hypothesis: str, detail: str = ""):
        super().__init__(f"hypothesis fails: {hypothesis}" + (f" ({detail})" if detail else ""))
        self.hypothesis = hypothesis


def _colon_by_power(pd: PairData, n: int):
    return pd._memo(("jcolon", n), lambda: pd.J.colon(pd.power(n)))


def v_dimension(I, J, n: int, pair: PairData | None = None) -> int:
    """dim V = λ(R/(J:I^n)) - λ(R/(I + J:I^n))."""
    pd = pair if pair is not None else pair_data(I, J)
    K = _colon_by_power(pd, n)
    return colength(K) - colength(I + K)


def ring_type(J, m) -> int:
    """type(R) = λ((J:m)/J) for a minimal reduction J generated by a regular sequence."""
    return colength(J) - colength(J.colon(m))


@dataclass
class VDimensionAudit:
    dim_V: int
    multiplicity: int
    embedding_dimension: int
    type: int
    via_multiplicity: int       # e - 1 - type
    via_embedding: int          # mu - d + 1 - type
    embedding_formula_applies: bool   # e = mu - d + 2

    @property
    def ok(self) -> bool:
        if self.dim_V != self.via_multiplicity:
            return False
        return (not self.embedding_formula_applies) or self.dim_V == self.via_embedding


def v_dimension_audit(m, J) -> VDimensionAudit:
    """Cross-check dim(m/(J:m)) for I = m, n = 1.

    dim V = e - 1 - type always; it also equals mu(m) - d + 1 - type when
    e = mu(m) - d + 2.
    """
    d = m.dim
    pd = pair_data(m, J)
    dv = v_dimension(m, J, 1, pd)
    e = colength(J)
    mu = m.embedding_dimension
    t = ring_type(J, m)
    return VDimensionAudit(dv, e, mu, t, e - 1 - t, mu - d + 1 - t, e == mu - d + 2)


@dataclass
class FormTable:
    n: int
    basis: list            # elements of I whose classes form a basis of V
    alpha: object
    tensor: dict           # index tuple -> residue-field scalar
    symmetric: bool
    nondegenerate: bool
    alpha_I_in_JI: bool | None   # checked when dim V >= 2

    @property
    def dim(self) -> int:
        return len(self.basis)


def _scalar_multiple(a, b, fld):
    """c with a = c*b (b nonzero), or None when a is not a multiple of b."""
    if not a:
        return fld.zero
    mono, cb = b.terms[0]
    ca = dict(a.terms).get(mono)
    if ca is None:
        return None
    c = fld.div(ca, cb)
    return c if not (a - b.scale(c)) else None


def multilinear_form(I, J, n: int, pair: PairData | None = None) -> FormTable:
    """Tabulate f(i_1,...,i_{n+1}) defined by i_1...i_{n+1} - f α ∈ J."""
    pd = pair if pair is not None else pair_data(I, J)
    if n < 1:
        raise HypothesisError("n >= 1", f"n={n}")
    if pd.step_length(n + 1) != 1:
        raise HypothesisError("λ(I^(n+1)/J I^n) = 1", f"it is {pd.step_length(n + 1)}")
    if pd.in_j(n + 1):
        raise HypothesisError("I^(n+1) ⊄ J", f"I^{n + 1} ⊆ J")
    for k in range(2, n + 1):
        if not pd.vv(k):
            raise HypothesisError("J ∩ I^k = J I^(k-1) for k <= n", f"fails at k={k}")

    fld = I.field
    gens = I.generator_elements()
    K = _colon_by_power(pd, n)

    # V is spanned by the classes of the generators of I
    red = RowReducer(fld)
    basis = []
    for g in gens:
        v = {m: c for m, c in K.nf(g).terms}
        if v and red.add(v, len(basis)) is None:
            basis.append(g)
    dim = len(basis)
    if dim != v_dimension(I, J, n, pd):
        raise AssertionError("basis of V disagrees with the colon-length dimension")

    # α: the first product of n+1 generators (in generator order) outside J
    alpha = None
    for combo in itertools.combinations_with_replacement(range(len(gens)), n + 1):
        prod = gens[combo[0]]
        for i in combo[1:]:
            prod = prod * gens[i]
        if pd.J.nf(prod):
            alpha = prod
            break
    if alpha is None:
        raise AssertionError("no product of generators lies outside J although I^(n+1) ⊄ J")
    a_nf = pd.J.nf(alpha)
    span = I.ideal_from_elements([alpha]) + pd.J
    if colength(span) != colength(pd.power(n + 1) + pd.J):
        raise AssertionError("I^(n+1) is not inside (α) + J")

    tensor = {}
    for idx in itertools.product(range(dim), repeat=n + 1):
        prod = basis[idx[0]]
        for i in idx[1:]:
            prod = prod * basis[i]
        c = _scalar_multiple(pd.J.nf(prod), a_nf, fld)
        if c is None:
            raise AssertionError(f"product {idx} is not a multiple of α modulo J")
        tensor[idx] = c

    symmetric = all(tensor[idx] == tensor[tuple(sorted(idx))] for idx in tensor)
    nondeg = True
    for slot in range(n + 1):
        rows = []
        for i in range(dim):
            row = {}
            for idx, c in tensor.items():
                if idx[slot] == i and c:
                    row[idx[:slot] + idx[slot + 1:]] = c
            rows.append(row)
        if rank(rows, fld) != dim:
            nondeg = False
    alpha_ok = None
    if dim >= 2:
        target = pd.j_times_power(n + 1)
        alpha_ok = all(target.contains_element(alpha * g) for g in gens)
    return FormTable(n, basis, alpha, tensor, symmetric, nondeg, alpha_ok)


@dataclass
class Lemma37Result:
    kind: str                   # "principal" or "stabilizes"
    z: object | None
    checked_through: int
    step_lengths: dict

    @property
    def ok(self) -> bool:
        return all(v <= 1 for v in self.step_lengths.values())


def lemma37_witness(I, J, n: int, scan: int = 3, pair: PairData | None = None) -> Lemma37Result:
    """Either some z has I^(t+1) = J I^t + (z^(t+1)) for t >= n, or I^(n+2) = J I^(n+1).

    The principal branch is verified for t = n..n+scan; both branches check
    λ(I^(t+1)/J I^t) <= 1 on that range.
    """
    pd = pair if pair is not None else pair_data(I, J)
    if pd.step_length(n + 1) != 1:
        raise HypothesisError("λ(I^(n+1)/J I^n) = 1", f"it is {pd.step_length(n + 1)}")
    steps = {t: pd.step_length(t + 1) for t in range(n, n + scan + 1)}
    cands = [g for g in I.generator_elements() if pd.J.nf(g)]
    target = pd.j_times_power(n)
    for z in cands:
        if target.contains_element(z ** (n + 1)):
            continue
        for t in range(n, n + scan + 1):
            rhs = pd.j_times_power(t) + I.ideal_from_elements([z ** (t + 1)])
            if colength(rhs) != pd.len_power(t + 1):
                raise AssertionError(f"I^{t + 1} != J I^{t} + (z^{t + 1}) for z={z}")
        return Lemma37Result("principal", z, n + scan, steps)
    if pd.step_length(n + 2) != 0:
        raise AssertionError("neither branch holds: every z^(n+1) lies in J I^n "
                             "but I^(n+2) != J I^(n+1)")
    return Lemma37Result("stabilizes", None, n + 1, steps)


@dataclass
class SocleLengthResult:
    applies: bool
    lhs: int | None     # λ(m/(J : m^n))
    rhs: int | None     # λ((m^n + J)/(m^(n+1) + J))

    @property
    def ok(self) -> bool:
        return (not self.applies) or self.lhs == self.rhs


def socle_length_check(m, J, n: int) -> SocleLengthResult:
    """For Gorenstein R with (m^(n+1)+J)/J the socle of R/J:
    λ(m/(J:m^n)) = λ((m^n+J)/(m^(n+1)+J))."""
    pd = pair_data(m, J)
    socle = J.colon(m)
    top = pd.power(n + 1) + J
    applies = m.ring_is_gorenstein and socle.equals(top)
    K = _colon_by_power(pd, n)
    lhs = colength(K) - 1
    rhs = colength(top) - colength(pd.power(n) + J)
    return SocleLengthResult(applies, lhs, rhs)
