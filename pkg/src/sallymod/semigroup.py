"""Numerical semigroup rings k[[t^S]] and their ideals as valuation sets.

A set of integers below the truncation bound ``B`` is a Python int used as a
bitmask.  Every ideal handled here contains ``t^v0 * R`` for its least value
``v0``, so its valuation set holds every integer from ``v0 + F + 1`` on
(``F`` the Frobenius number); construction refuses ideals for which that
threshold is not below ``B``, which makes all set arithmetic below ``B`` exact.

Lengths use ``λ(a/b) = #(v(a) \\ v(b))`` for ``b ⊆ a``, valid for any ideals of
these rings.  Sums, intersections and colons are exact for monomial ideals;
a principal ideal generated by a non-monomial element is supported for
products, lengths and colons it is contained in.
"""

from __future__ import annotations

from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .field import FieldSpec
from .poly import Polynomial, RingSpec

DEFAULT_N_MAX = 30


class SemigroupError(ValueError):
    pass


class TruncationError(SemigroupError):
    def __init__(self, bound: int, required: int):
        super().__init__(f"truncation bound {bound} too small; need at least {required} "
                         "(raise n_max when building the semigroup)")
        self.bound, self.required = bound, required


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class NumericalSemigroup:
    """The semigroup generated by positive integers with gcd 1, tabulated below ``bound``."""

    def __init__(self, generators: Iterable[int], n_max: int = DEFAULT_N_MAX,
                 field: FieldSpec | None = None):
        gens = sorted(set(int(g) for g in generators))
        if not gens or gens[0] <= 0:
            raise SemigroupError("generators must be positive integers")
        if reduce(gcd, gens) != 1:
            raise SemigroupError(f"gcd of {gens} is {reduce(gcd, gens)}, not 1; the semigroup is not cofinite")
        self.generators = tuple(gens)
        self.field = field or FieldSpec.default()
        a1, ak = gens[0], gens[-1]
        # Frobenius number is below (a1-1)(ak-1), so this table decides it
        probe = max((a1 - 1) * (ak - 1), 1) + ak + 1
        table = self._table(probe)
        gaps = [v for v in range(probe) if not table[v]]
        self.frobenius = gaps[-1] if gaps else -1
        self.n_max = n_max
        self.bound = self.frobenius + (n_max + 2) * ak + 1
        table = self._table(self.bound)
        self.members = sum(1 << v for v in range(self.bound) if table[v])
        self.full = (1 << self.bound) - 1
        self.maximal_mask = self.members & ~1
        self.ring = RingSpec(("t",), self.field)

    def _table(self, size: int) -> list[bool]:
        t = [False] * size
        if size:
            t[0] = True
        for v in range(1, size):
            t[v] = any(v >= g and t[v - g] for g in self.generators)
        return t

    def __contains__(self, v: int) -> bool:
        if v < 0:
            return False
        if v >= self.bound:
            return True
        return bool(self.members >> v & 1)

    def __repr__(self):
        return f"NumericalSemigroup({list(self.generators)})"

    def __eq__(self, other):
        return (isinstance(other, NumericalSemigroup) and self.members == other.members
                and self.bound == other.bound and self.field == other.field)

    def __hash__(self):
        return hash((self.members, self.bound))

    @property
    def multiplicity(self) -> int:
        return self.minimal_generators()[0]

    def gaps(self) -> list[int]:
        return [v for v in range(self.frobenius + 1) if v not in self]

    def minimal_generators(self) -> list[int]:
        """Elements of S\\{0} that are not sums of two nonzero elements."""
        m = self.maximal_mask
        twice = sumset(m, m, self.full)
        return _bits(m & ~twice)

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators())

    def apery_set(self, n: int | None = None) -> list[int]:
        """Ap(S, n) = {s in S : s - n not in S}, by default for n the multiplicity."""
        n = self.multiplicity if n is None else n
        return [v for v in range(self.frobenius + n + 1) if v in self and (v - n) not in self]

    def pseudo_frobenius(self) -> list[int]:
        """Gaps g with g + s in S for every nonzero s in S (``[-1]`` when S = N)."""
        if self.frobenius < 0:
            return [-1]
        gens = self.minimal_generators()
        return [g for g in self.gaps() if all((g + s) in self for s in gens)]

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius())

    # -- ideals -------------------------------------------------------------------

    def ideal(self, values: Iterable[int]) -> "SemigroupIdeal":
        """The monomial ideal generated by ``t^v`` for the given values."""
        vals = list(values)
        for v in vals:
            if v not in self:
                raise SemigroupError(f"t^{v} is not in the ring (value {v} not in S)")
        mask = 0
        for v in vals:
            mask |= self.members << v if v < self.bound else 0
        return SemigroupIdeal(self, mask & self.full, min(vals) if vals else None)

    def maximal(self) -> "SemigroupIdeal":
        return SemigroupIdeal(self, self.maximal_mask, self.multiplicity, name="m")

    def unit(self) -> "SemigroupIdeal":
        return SemigroupIdeal(self, self.members, 0)

    def principal(self, element: Polynomial) -> "SemigroupIdeal":
        """The ideal generated by one element of the ring, monomial or not."""
        if not element:
            raise SemigroupError("principal ideal of zero")
        exps = [m[0] for m, _ in element.terms]
        for v in exps:
            if v not in self:
                raise SemigroupError(f"t^{v} is not in the ring (value {v} not in S)")
        v0 = min(exps)
        mask = (self.members << v0) & self.full
        if len(exps) == 1:
            return SemigroupIdeal(self, mask, v0)
        return SemigroupIdeal(self, mask, v0, principal=element)

    def element(self, value: int, coeff=1) -> Polynomial:
        return self.ring.monomial((value,), coeff)


def sg_closure(generators: Sequence[int], n_max: int = DEFAULT_N_MAX,
               field: FieldSpec | None = None) -> NumericalSemigroup:
    return NumericalSemigroup(generators, n_max=n_max, field=field)


def sumset(a: int, b: int, full: int) -> int:
    """{x + y} for masks a, b, truncated by ``full``."""
    out = 0
    for v in _bits(a):
        shifted = b << v
        if shifted > full:
            shifted &= full
            if not shifted:
                break
        out |= shifted
    return out & full


class SemigroupIdeal:
    """An ideal of k[[t^S]] recorded by its valuation set below the bound."""

    engine = "semigroup"

    def __init__(self, semigroup: NumericalSemigroup, mask: int, least: int | None,
                 principal: Polynomial | None = None, monomial: bool | None = None,
                 name: str | None = None):
        self.semigroup = semigroup
        self.mask = mask & semigroup.full
        if least is None and self.mask:
            least = (self.mask & -self.mask).bit_length() - 1
        self.least = least
        if least is not None:
            need = least + semigroup.frobenius + 2
            if need > semigroup.bound:
                raise TruncationError(semigroup.bound, need)
        self.principal_element = principal
        self.monomial = principal is None if monomial is None else monomial
        self.name = name

    # -- protocol shared with the polynomial engine -------------------------------

    @property
    def dim(self) -> int:
        return 1

    @property
    def field(self) -> FieldSpec:
        return self.semigroup.field

    @property
    def is_unit(self) -> bool:
        return self.least == 0

    @property
    def is_zero(self) -> bool:
        return self.least is None

    def values(self, upto: int | None = None) -> list[int]:
        m = self.mask if upto is None else self.mask & ((1 << upto) - 1)
        return _bits(m)

    def minimal_values(self) -> list[int]:
        if self.principal_element is not None:
            return [self.least]
        sg = self.semigroup
        return _bits(self.mask & ~sumset(self.mask, sg.maximal_mask, sg.full))

    def num_generators(self) -> int:
        return len(self.minimal_values())

    def generator_elements(self) -> list[Polynomial]:
        if self.principal_element is not None:
            return [self.principal_element]
        self._require_monomial("listing monomial generators")
        return [self.semigroup.element(v) for v in self.minimal_values()]

    def element_ring(self) -> RingSpec:
        return self.semigroup.ring

    def ideal_from_elements(self, elems: Iterable[Polynomial]) -> "SemigroupIdeal":
        elems = [e for e in elems if e]
        if all(len(e) == 1 for e in elems):
            return self.semigroup.ideal([e.terms[0][0][0] for e in elems])
        if len(elems) == 1:
            return self.semigroup.principal(elems[0])
        raise SemigroupError("ideals with several non-monomial generators are not supported")

    def maximal_ideal(self) -> "SemigroupIdeal":
        return self.semigroup.maximal()

    @property
    def ring_is_gorenstein(self) -> bool:
        return sg_is_symmetric(self.semigroup)

    @property
    def embedding_dimension(self) -> int:
        return self.semigroup.embedding_dimension

    def _require_monomial(self, what: str) -> None:
        if not self.monomial:
            raise SemigroupError(f"{what} needs a monomial ideal; valuations do not determine this one")

    def nf(self, f: Polynomial) -> Polynomial:
        """Remainder modulo a monomial ideal: drop the terms it contains."""
        self._require_monomial("normal forms")
        sg = self.semigroup
        keep = {}
        for (v,), c in f.terms:
            if v not in sg:
                raise SemigroupError(f"t^{v} is not in the ring")
            if not (v >= sg.bound or self.mask >> v & 1):
                keep[(v,)] = c
        return Polynomial.from_dict(sg.ring, keep)

    def contains_element(self, f: Polynomial) -> bool:
        return not self.nf(f)

    def standard_basis(self) -> list[tuple[int]]:
        sg = self.semigroup
        return [(v,) for v in _bits(sg.members & ~self.mask)]

    def _check(self, other: "SemigroupIdeal") -> None:
        if not isinstance(other, SemigroupIdeal):
            raise TypeError(f"expected a SemigroupIdeal, got {type(other).__name__}")
        if other.semigroup != self.semigroup:
            raise SemigroupError("ideals live in different semigroup rings")

    def contains(self, other: "SemigroupIdeal") -> bool:
        """Containment; decided by valuations when self is monomial."""
        self._check(other)
        if not self.monomial:
            if self.principal_element is not None and other.principal_element == self.principal_element:
                return True
            raise SemigroupError("containment in a non-monomial ideal is not decided by valuations")
        return not other.mask & ~self.mask

    def non_member(self, other: "SemigroupIdeal") -> Polynomial | None:
        self._check(other)
        extra = other.mask & ~self.mask
        if not extra:
            return None
        v = (extra & -extra).bit_length() - 1
        return self.semigroup.element(v)

    def equals(self, other: "SemigroupIdeal") -> bool:
        self._check(other)
        if not (self.monomial and other.monomial):
            raise SemigroupError("equality of non-monomial ideals is not decided by valuations")
        return self.mask == other.mask

    def __eq__(self, other):
        if not isinstance(other, SemigroupIdeal):
            return NotImplemented
        return self.equals(other)

    def __hash__(self):
        return hash((self.mask, self.principal_element))

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"SemigroupIdeal({label}generated in values {self.minimal_values()})"

    def __str__(self):
        return "(" + ", ".join(f"t^{v}" for v in self.minimal_values()) + ")"

    # -- arithmetic -------------------------------------------------------------------

    def __add__(self, other):
        return sg_ideal_ops(self, other, "sum")

    def __mul__(self, other):
        return sg_ideal_ops(self, other, "product")

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = self.semigroup.unit()
        for _ in range(n):
            out = out * self
        return out

    def intersect(self, other):
        return sg_ideal_ops(self, other, "intersection")

    def colon(self, other, method: str = "auto"):
        return sg_ideal_ops(self, other, "colon")

    # -- lengths -------------------------------------------------------------------

    def colength(self) -> int:
        return _popcount(self.semigroup.members & ~self.mask)


def sg_ideal_ops(a: SemigroupIdeal, b: SemigroupIdeal, op: str) -> SemigroupIdeal:
    """Sum, product, intersection or colon of ideals via their valuation sets."""
    a._check(b)
    sg = a.semigroup
    op = op.lower()
    if op == "product":
        if a.is_zero or b.is_zero:
            return SemigroupIdeal(sg, 0, None)
        principal = None
        if a.is_unit:
            return b
        if b.is_unit:
            return a
        if a.principal_element is not None and b.principal_element is not None:
            principal = a.principal_element * b.principal_element
        mono = a.monomial and b.monomial
        return SemigroupIdeal(sg, sumset(a.mask, b.mask, sg.full), a.least + b.least,
                              principal=principal, monomial=mono)
    if op in ("sum", "intersection"):
        if not (a.monomial and b.monomial):
            raise SemigroupError(f"{op} of non-monomial ideals is not decided by valuations")
        mask = a.mask | b.mask if op == "sum" else a.mask & b.mask
        return SemigroupIdeal(sg, mask, None)
    if op == "colon":
        return _colon(a, b)
    raise ValueError(f"unknown operation {op!r}")


def _colon(a: SemigroupIdeal, b: SemigroupIdeal) -> SemigroupIdeal:
    sg = a.semigroup
    if b.is_zero:
        raise SemigroupError("colon by the zero ideal")
    gens = b.minimal_values()
    full = sg.full
    if a.monomial:
        # v in a : b iff v + w in v(a) for each generator value w of b
        mask = sg.members
        for w in gens:
            shifted = (a.mask >> w) | (full & ~((1 << max(sg.bound - w, 0)) - 1))
            mask &= shifted
        return SemigroupIdeal(sg, mask & full, None)
    if a.principal_element is None:
        raise SemigroupError("colon of a non-monomial, non-principal ideal is not supported")
    # (zR : b) = z (R :_K b) when z lies in b; values shift by v(z)
    if b.monomial and not (b.mask >> a.least & 1):
        raise SemigroupError("colon (z) : b needs z in b")
    v0 = a.least
    frac = 0
    for v in range(-v0, sg.bound - v0):
        if all((v + w) in sg for w in gens):
            frac |= 1 << (v + v0)
    return SemigroupIdeal(sg, frac & full, None, monomial=False)


def sg_length(a: SemigroupIdeal, b: SemigroupIdeal) -> int:
    """λ(a/b) = #(v(a) \\ v(b)) for b ⊆ a."""
    a._check(b)
    extra = b.mask & ~a.mask
    if extra:
        v = (extra & -extra).bit_length() - 1
        raise SemigroupError(f"containment fails: value {v} of the smaller ideal is not in the larger")
    return _popcount(a.mask & ~b.mask)


def sg_is_symmetric(s: NumericalSemigroup) -> bool:
    F = s.frobenius
    return all((z in s) != ((F - z) in s) for z in range(F + 1))


def sg_is_stretched(s: NumericalSemigroup, n: int) -> bool:
    """Embedding dimension e + 1 - n and m^n not inside (t^e)."""
    if n < 1:
        raise ValueError("n must be positive")
    e = s.multiplicity
    if s.embedding_dimension != e + 1 - n:
        return False
    m = s.maximal()
    J = s.ideal([e])
    return not J.contains(m ** n)
