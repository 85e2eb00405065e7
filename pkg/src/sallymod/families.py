"""Example rings and ideals: the graph-ideal family, the two semigroup rings,
and the evidence battery for the open question on the graph family."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .field import FieldSpec
from .ideal import Ideal
from .poly import RingSpec
from .semigroup import NumericalSemigroup

QUESTION_BUDGET = 4


@dataclass
class GraphIdeal:
    n: int
    ring: RingSpec
    I: Ideal
    J: Ideal
    M: Ideal
    f: object

    @property
    def d(self) -> int:
        return 2 * self.n + 1


def graph_ideal(n: int, field: FieldSpec | None = None) -> GraphIdeal:
    """R = k[x_1..x_{n+2}, y_1..y_{n-1}], J = squares, I = (J, M^3, f).

    f sums the cycle x_1 x_2 + ... + x_{n+1} x_{n+2} + x_{n+2} x_1 and the
    whiskers x_i y_i for i < n.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    fld = field or FieldSpec.default()
    names = [f"x{i}" for i in range(1, n + 3)] + [f"y{i}" for i in range(1, n)]
    ring = RingSpec(tuple(names), fld)
    x = [ring.var(f"x{i}") for i in range(1, n + 3)]
    y = [ring.var(f"y{i}") for i in range(1, n)]
    f = ring.zero()
    for i in range(n + 1):
        f = f + x[i] * x[i + 1]
    f = f + x[n + 1] * x[0]
    for i in range(n - 1):
        f = f + x[i] * y[i]
    gens = list(ring.gens())
    J = Ideal(ring, [g * g for g in gens], name="J")
    M = Ideal(ring, gens, name="M")
    cubes = (M ** 3).generators
    I = Ideal(ring, list(J.generators) + list(cubes) + [f], name="I")
    return GraphIdeal(n, ring, I, J, M, f)


@dataclass
class QuestionRow:
    n: int
    vv: dict                    # k -> J ∩ I^k == J I^(k-1)
    step_next: int              # λ(I^(n+1)/J I^n)
    power_in_J: bool            # I^(n+1) ⊆ J
    partial: bool = False
    note: str = ""

    @property
    def a(self) -> bool:
        return all(self.vv.values())

    @property
    def b(self) -> bool:
        return self.step_next == 1

    @property
    def c(self) -> bool:
        return self.power_in_J


def question44(n: int, field: FieldSpec | None = None, force: bool = False) -> QuestionRow:
    """(a) VV through n, (b) λ(I^(n+1)/J I^n) = 1, (c) I^(n+1) ⊆ J for the graph ideal."""
    from .groebner import DegreeCapExceeded
    from .invariants.pair import pair_data

    if n > QUESTION_BUDGET and not force:
        raise ValueError(f"n={n} exceeds the default budget {QUESTION_BUDGET}; pass force=True")
    g = graph_ideal(n, field)
    pd = pair_data(g.I, g.J)
    vv = {}
    try:
        for k in range(1, n + 1):
            vv[k] = pd.vv(k)
        step = pd.step_length(n + 1)
        inj = pd.in_j(n + 1)
    except DegreeCapExceeded as exc:
        return QuestionRow(n, vv, -1, False, partial=True, note=str(exc))
    return QuestionRow(n, vv, step, inj)


# -- expected tables -------------------------------------------------------------

@dataclass
class Expected:
    name: str
    value: object


@dataclass
class PaperExample:
    id: str
    engine: str
    I: object
    J: object
    expected: list = dc_field(default_factory=list)
    heavy: bool = False


EXAMPLE_IDS = ("Semigroup5_6_9", "Semigroup6_7_9_17", "Graph_n1", "Graph_n2", "Graph_n3")


def _graph_expected(n: int) -> list[Expected]:
    E = Expected
    if n == 1:
        return [E("colength(I)", 6), E("colength(J)", 8), E("len(I/J)", 2), E("len(I^2/JI)", 1),
                E("I^2 in J", True), E("J cap I^2 == I^2", True), E("J cap I^2 == JI", False),
                E("depth_class", "ExactlyDMinus1")]
    if n == 2:
        return [E("colength(I)", 15), E("colength(J)", 32), E("len(I/J)", 17), E("len(I^2/JI)", 2),
                E("J cap I^2 == JI", True), E("len(I^3/JI^2)", 1), E("I^3 in J", True),
                E("J cap I^3 == JI^2", False), E("depth_class", "ExactlyDMinus1")]
    if n == 3:
        return [E("colength(I)", 28), E("colength(J)", 128), E("len(I/J)", 100),
                E("len(I^2/JI)", 30), E("J cap I^2 == JI", True), E("len(I^3/JI^2)", 2),
                E("J cap I^3 == JI^2", True), E("len(I^4/JI^3)", 1), E("I^4 in J", True),
                E("J cap I^4 == JI^3", False), E("depth_class", "ExactlyDMinus1")]
    raise ValueError(n)


def paper_example(id: str, field: FieldSpec | None = None) -> PaperExample:
    if id == "Semigroup5_6_9":
        S = NumericalSemigroup([5, 6, 9], field=field)
        return PaperExample(id, "semigroup", S.maximal(), S.ideal([5]), [
            Expected("symmetric", True), Expected("len(m^3/Jm^2)", 1),
            Expected("gorenstein_m3 applies", True), Expected("depth_class", "CohenMacaulay"),
            Expected("r", 3)])
    if id == "Semigroup6_7_9_17":
        S = NumericalSemigroup([6, 7, 9, 17], field=field)
        return PaperExample(id, "semigroup", S.maximal(), S.ideal([6]), [
            Expected("symmetric", False), Expected("len(m^3/Jm^2)", 1),
            Expected("CohenMacaulay", False)])
    if id.startswith("Graph_n") and id[7:].isdigit() and id in EXAMPLE_IDS:
        n = int(id[7:])
        g = graph_ideal(n, field)
        return PaperExample(id, "groebner", g.I, g.J, _graph_expected(n), heavy=n >= 3)
    raise KeyError(f"unknown example id {id!r}; known: {', '.join(EXAMPLE_IDS)}")
