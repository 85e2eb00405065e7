"""Homogeneous ideals of a polynomial ring and their Artinian length calculus.

An :class:`Ideal` keeps its generator list and fills its reduced Groebner
basis on first use.  Lengths of Artinian quotients are standard-monomial
counts; module lengths and intersection lengths reduce to those.
"""

from __future__ import annotations

import threading
from typing import Iterable, Sequence

from .groebner import DEFAULT_DEGREE_CAP, GroebnerBasis, GroebnerError, buchberger, eliminate
from .linalg import left_kernel
from .poly import Polynomial, RingMismatchError, RingSpec, format_polynomial


class IdealError(ValueError):
    pass


class HomogeneityError(IdealError):
    def __init__(self, poly: Polynomial):
        super().__init__(
            f"generator {format_polynomial(poly)} is not homogeneous; only homogeneous "
            "ideals are supported (lengths are taken in the graded sense)"
        )
        self.poly = poly


class NotArtinianError(IdealError):
    def __init__(self, missing: Sequence[str]):
        super().__init__(
            "quotient has infinite length: no leading monomial is a pure power of "
            + ", ".join(missing)
        )
        self.missing = list(missing)


class ContainmentError(IdealError):
    def __init__(self, witness: Polynomial, what: str = "the larger ideal"):
        super().__init__(f"containment fails: {format_polynomial(witness)} is not in {what}")
        self.witness = witness


class Ideal:
    """A homogeneous ideal given by generators, with a lazily computed reduced basis."""

    engine = "groebner"

    def __init__(self, ring: RingSpec, generators: Iterable[Polynomial],
                 degree_cap: int = DEFAULT_DEGREE_CAP, name: str | None = None):
        gens = []
        seen = set()
        unit = False
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(g.ring, ring)
            if not g:
                continue
            if g.degree() == 0:
                unit = True
                continue
            if not g.is_homogeneous():
                raise HomogeneityError(g)
            g = g.monic()
            if g not in seen:
                seen.add(g)
                gens.append(g)
        if unit:
            gens = [ring.one()]
        self.ring = ring
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self.degree_cap = degree_cap
        self.name = name
        self._gb: GroebnerBasis | None = None
        self._lock = threading.Lock()
        self._powers: dict[int, Ideal] = {}
        self._colength: int | None = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def parse(cls, ring: RingSpec, texts: Iterable[str], **kw) -> "Ideal":
        return cls(ring, [ring.parse(t) for t in texts], **kw)

    @classmethod
    def unit(cls, ring: RingSpec) -> "Ideal":
        return cls(ring, [ring.one()])

    @classmethod
    def maximal(cls, ring: RingSpec) -> "Ideal":
        return cls(ring, ring.gens(), name="m")

    def _derived(self, gens: Iterable[Polynomial], other: "Ideal | None" = None) -> "Ideal":
        cap = self.degree_cap if other is None else max(self.degree_cap, other.degree_cap)
        return Ideal(self.ring, gens, degree_cap=cap)

    # -- basic properties -------------------------------------------------------

    @property
    def dim(self) -> int:
        """Dimension of the ambient regular ring."""
        return self.ring.nvars

    @property
    def field(self):
        return self.ring.field

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].degree() == 0

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def gb(self) -> GroebnerBasis:
        gb = self._gb
        if gb is None:
            with self._lock:
                if self._gb is None:
                    # the cap counts degrees above the largest generator, so powers stay admissible
                    top = max((g.degree() for g in self.generators), default=0)
                    self._gb = buchberger(self.generators, degree_cap=top + self.degree_cap, ring=self.ring)
                gb = self._gb
        return gb

    def minimal_generators(self) -> tuple[Polynomial, ...]:
        """A minimal homogeneous generating set (pruned from the input generators)."""
        if self.is_unit or self.is_zero:
            return self.generators
        mg = self.gb.minimal_generators
        return tuple(mg) if mg is not None else self.generators

    def num_generators(self) -> int:
        return len(self.minimal_generators())

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"Ideal({label}{len(self.generators)} generators in {self.ring})"

    def __str__(self):
        return "(" + ", ".join(format_polynomial(g) for g in self.generators) + ")"

    # -- element level ----------------------------------------------------------

    def nf(self, f: Polynomial) -> Polynomial:
        if self.is_unit:
            return self.ring.zero()
        return self.gb.normal_form(f)

    def contains_element(self, f: Polynomial) -> bool:
        return not self.nf(f)

    def generator_elements(self) -> list[Polynomial]:
        return list(self.minimal_generators())

    def element_ring(self) -> RingSpec:
        return self.ring

    def ideal_from_elements(self, elems: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self.ring, elems, degree_cap=self.degree_cap)

    def maximal_ideal(self) -> "Ideal":
        return Ideal(self.ring, self.ring.gens(), degree_cap=self.degree_cap, name="m")

    @property
    def ring_is_gorenstein(self) -> bool:
        return True  # a polynomial ring is regular

    @property
    def embedding_dimension(self) -> int:
        return self.ring.nvars

    def standard_basis(self) -> list[tuple[int, ...]]:
        """Standard monomials of the quotient (a basis of R/a)."""
        if self.is_unit:
            return []
        self._require_artinian()
        return self.gb.standard_monomials()

    # -- containment and equality -------------------------------------------

    def _check(self, other: "Ideal") -> None:
        if not isinstance(other, Ideal):
            raise TypeError(f"expected a polynomial Ideal, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(self.ring, other.ring)

    def non_member(self, other: "Ideal") -> Polynomial | None:
        """A generator of ``other`` outside ``self``, or None if ``other`` is contained."""
        self._check(other)
        if self.is_unit:
            return None
        for g in other.minimal_generators() if other._gb is not None else other.generators:
            if not self.contains_element(g):
                return g
        return None

    def contains(self, other: "Ideal") -> bool:
        return self.non_member(other) is None

    def equals(self, other: "Ideal") -> bool:
        return ideal_equal(self, other)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        return hash(self.gb.elements)

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return ideal_product(self, other)

    def __pow__(self, n: int) -> "Ideal":
        return ideal_power(self, n)

    def intersect(self, other: "Ideal") -> "Ideal":
        return ideal_intersection(self, other)

    def colon(self, other: "Ideal", method: str = "auto") -> "Ideal":
        return ideal_colon(self, other, method=method)

    # -- lengths ---------------------------------------------------------------------

    def _require_artinian(self) -> None:
        missing = self.gb.missing_pure_powers()
        if missing:
            raise NotArtinianError(missing)

    def colength(self) -> int:
        """The length of R/a."""
        if self._colength is None:
            if self.is_unit:
                self._colength = 0
            else:
                self._require_artinian()
                self._colength = self.gb.count_standard_monomials()
        return self._colength

    def hilbert_function(self) -> list[int]:
        """Dimensions of the graded pieces of R/a."""
        if self.is_unit:
            return []
        self._require_artinian()
        return self.gb.standard_monomials_by_degree()


# -- operations ----------------------------------------------------------------------


def _same_ring(a: Ideal, b: Ideal) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(a.ring, b.ring)


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    _same_ring(a, b)
    return a._derived(a.generators + b.generators, b)


def _gens_for_products(a: Ideal) -> tuple[Polynomial, ...]:
    # minimal generators only when the basis is already known, to stay lazy
    return a.minimal_generators() if a._gb is not None else a.generators


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    _same_ring(a, b)
    if a.is_unit:
        return b
    if b.is_unit:
        return a
    ga, gb = _gens_for_products(a), _gens_for_products(b)
    prods = {}
    for f in ga:
        for g in gb:
            prods[f * g] = None
    return a._derived(prods, b)


def ideal_power(a: Ideal, n: int) -> Ideal:
    """``a**n`` with ``a**0`` the unit ideal; powers are cached on ``a``."""
    if n < 0:
        raise ValueError("negative power")
    if n == 0:
        return Ideal.unit(a.ring)
    if n == 1:
        return a
    cache = a._powers
    if n in cache:
        return cache[n]
    k = max([m for m in cache if m < n], default=1)
    prev = cache.get(k, a)
    while k < n:
        prev = ideal_product(a, prev)
        # prune to minimal generators before caching
        prev = Ideal(a.ring, prev.minimal_generators(), degree_cap=a.degree_cap)
        k += 1
        cache[k] = prev
    return prev


def _tag_ring(ring: RingSpec) -> tuple[RingSpec, str]:
    name = "_t"
    while name in ring.variables:
        name += "_"
    return RingSpec((name,) + tuple(ring.variables), ring.field, ring.order), name


def _lift(f: Polynomial, ring: RingSpec, t_exp: int = 0) -> Polynomial:
    return Polynomial.from_dict(ring, {(t_exp,) + m: c for m, c in f.terms})


def _drop_tag(f: Polynomial, ring: RingSpec) -> Polynomial:
    return Polynomial.from_dict(ring, {m[1:]: c for m, c in f.terms})


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    """``a ∩ b`` by eliminating a tag variable from ``t*a + (1-t)*b``."""
    _same_ring(a, b)
    if a.is_unit:
        return b
    if b.is_unit:
        return a
    if a.is_zero or b.is_zero:
        return Ideal(a.ring, [])
    ring = a.ring
    tring, tname = _tag_ring(ring)
    t = tring.var(tname)
    one_minus_t = tring.one() - t
    gens = [t * _lift(f, tring) for f in a.generators]
    gens += [one_minus_t * _lift(g, tring) for g in b.generators]
    cap = max(a.degree_cap, b.degree_cap)
    elim = eliminate(gens, [tname], degree_cap=cap)
    return Ideal(ring, [_drop_tag(f, ring) for f in elim], degree_cap=cap)


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """The quotient ``f / g``, raising if ``g`` does not divide ``f``."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    fld = ring.field
    lm, lc = g.lm, g.lc
    inv = fld.inv(lc)
    q = {}
    r = f
    while r:
        m = r.lm
        if any(x < y for x, y in zip(m, lm)):
            raise IdealError(f"{format_polynomial(g)} does not divide {format_polynomial(f)}")
        e = tuple(x - y for x, y in zip(m, lm))
        c = fld.mul(r.lc, inv)
        q[e] = c
        r = r - g.mul_monomial(e, c)
    return Polynomial.from_dict(ring, q)


def _colon_principal_eliminate(a: Ideal, g: Polynomial) -> Ideal:
    inter = ideal_intersection(a, Ideal(a.ring, [g], degree_cap=a.degree_cap))
    return Ideal(a.ring, [divide_exact(h, g) for h in inter.generators], degree_cap=a.degree_cap)


def _colon_quotient(a: Ideal, b: Ideal) -> Ideal:
    """``a : b`` for Artinian ``a`` by linear algebra on R/a, degree by degree."""
    ring = a.ring
    fld = ring.field
    bgens = _gens_for_products(b)
    by_deg: dict[int, list[tuple[int, ...]]] = {}
    for s in a.standard_basis():
        by_deg.setdefault(sum(s), []).append(s)
    new = []
    for deg in sorted(by_deg):
        mons = by_deg[deg]
        rows = []
        for s in mons:
            row = {}
            for i, g in enumerate(bgens):
                for m, c in a.nf(g.mul_monomial(s)).terms:
                    row[(i, ring.sort_key(m), m)] = c
            rows.append(row)
        for combo in left_kernel(rows, fld):
            new.append(Polynomial.from_dict(ring, {mons[i]: c for i, c in combo.items()}))
    return Ideal(ring, list(a.generators) + new, degree_cap=a.degree_cap)


def ideal_colon(a: Ideal, b: Ideal, method: str = "auto") -> Ideal:
    """``a : b = {f : f*b ⊆ a}``.

    ``method="eliminate"`` intersects the principal colons ``(a ∩ (g))/g`` over
    the generators g of b; ``method="quotient"`` (the default for Artinian a)
    solves the linear conditions on R/a.
    """
    _same_ring(a, b)
    if b.is_zero:
        raise IdealError("colon by the zero ideal")
    if b.is_unit or a.is_unit:
        return a
    if method == "auto":
        method = "quotient" if a.gb.is_artinian() else "eliminate"
    if method == "quotient":
        return _colon_quotient(a, b)
    if method != "eliminate":
        raise ValueError(f"unknown colon method {method!r}")
    result = None
    for g in _gens_for_products(b):
        c = _colon_principal_eliminate(a, g)
        result = c if result is None else ideal_intersection(result, c)
    return result


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    _same_ring(a, b)
    if a.is_unit or b.is_unit:
        return a.gb.is_unit and b.gb.is_unit
    return a.gb.elements == b.gb.elements


def length_artinian(a: Ideal) -> int:
    return a.colength()


def module_length(a: Ideal, b: Ideal, check: bool = True) -> int:
    """λ(a/b) for b ⊆ a."""
    if check:
        w = a.non_member(b)
        if w is not None:
            raise ContainmentError(w)
    return b.colength() - a.colength()


def intersection_length(a: Ideal, b: Ideal) -> int:
    """λ(R/(a ∩ b)) from three Artinian lengths, without an elimination basis."""
    return a.colength() + b.colength() - ideal_sum(a, b).colength()


def ideal_from_strings(ring: RingSpec, texts: Sequence[str], **kw) -> Ideal:
    return Ideal.parse(ring, texts, **kw)


__all__ = [
    "ContainmentError", "GroebnerError", "HomogeneityError", "Ideal", "IdealError", "NotArtinianError",
    "divide_exact", "ideal_colon", "ideal_equal", "ideal_from_strings", "ideal_intersection", "ideal_power",
    "ideal_product", "ideal_sum", "intersection_length", "length_artinian", "module_length",
]
