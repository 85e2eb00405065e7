"""Reduced Groebner bases by Buchberger's algorithm.

Monomials are bit-packed into Python ints inside the engine: ``E`` packs the
exponent vector (10-bit fields with a guard bit, so divisibility and colon are
a handful of integer ops) and ``K`` is an additive integer order key
(``K(a*b) == K(a) + K(b)``, and ``a > b`` in the monomial order iff
``K(a) > K(b)``).  Engine polynomials are lists of ``(K, E, coeff)``.

Homogeneous input runs degree by degree (normal selection strategy).  Because
every S-polynomial of degree d reduces to degree d, lower-degree leading terms
are final while degree d is processed, which lets divisor lookups be memoized
by walking down one variable at a time.  Once every monomial of some degree is
a leading-term multiple the ideal contains all higher degrees and the run
stops (the Artinian cut).
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .poly import MonomialOrder, Polynomial, RingMismatchError, RingSpec

FIELD_BITS = 10
_HALF = 1 << (FIELD_BITS - 1)
_FMASK = (1 << FIELD_BITS) - 1
MAX_EXPONENT = _HALF - 1
CHUNK_VARS = 6
CHUNK_BITS = FIELD_BITS * CHUNK_VARS
_CHUNK_MASK = (1 << CHUNK_BITS) - 1
DEFAULT_DEGREE_CAP = 40
_STD_TRACK_LIMIT = 200_000


class GroebnerError(ArithmeticError):
    pass


class DegreeCapExceeded(GroebnerError):
    def __init__(self, cap: int, degree: int):
        super().__init__(
            f"Groebner basis computation reached degree {degree} above the cap {cap}; "
            "raise the cap (--bound-gb-degree) or use a length-based check instead"
        )
        self.cap, self.degree = cap, degree


class _Packing:
    """Bit layout for one (number of variables, monomial order) pair."""

    _cache: dict = {}

    def __new__(cls, n: int, order: MonomialOrder):
        key = (n, order)
        obj = cls._cache.get(key)
        if obj is None:
            obj = super().__new__(cls)
            obj._setup(n, order)
            cls._cache[key] = obj
        return obj

    def _setup(self, n: int, order: MonomialOrder):
        self.n = n
        self.shifts = [FIELD_BITS * i for i in range(n)]
        self.unit = [1 << s for s in self.shifts]
        self.guard = sum(_HALF << s for s in self.shifts)
        self.ones = sum(1 << s for s in self.shifts)
        self.top = FIELD_BITS * (n - 1) if n else 0
        rows = order.weight_rows(n)
        base = 1 << 24
        nr = len(rows)
        self.weights = [sum(rows[j][i] * base ** (nr - 1 - j) for j in range(nr)) for i in range(n)]
        # uint64 words of CHUNK_VARS fields each, for vectorized pair filtering
        self.nchunks = max(1, -(-n // CHUNK_VARS))
        widths = [min(CHUNK_VARS, n - CHUNK_VARS * c) for c in range(self.nchunks)] if n else [0]
        self.chunk_guard = np.array([sum(_HALF << (FIELD_BITS * j) for j in range(w)) for w in widths],
                                    dtype=np.uint64)
        self.chunk_ones = np.array([sum(1 << (FIELD_BITS * j) for j in range(w)) for w in widths],
                                   dtype=np.uint64)
        self.chunk_top = np.array([FIELD_BITS * max(w - 1, 0) for w in widths], dtype=np.uint64)

    def pack(self, m: Sequence[int]) -> tuple[int, int]:
        E = K = 0
        for e, s, w in zip(m, self.shifts, self.weights):
            if e:
                if e > MAX_EXPONENT:
                    raise GroebnerError(f"exponent {e} exceeds engine limit {MAX_EXPONENT}")
                E |= e << s
                K += e * w
        return K, E

    def chunks(self, E: int) -> list[int]:
        return [(E >> (CHUNK_BITS * c)) & _CHUNK_MASK for c in range(self.nchunks)]

    def unpack(self, E: int) -> tuple[int, ...]:
        return tuple((E >> s) & _FMASK for s in self.shifts)

    def key_of(self, E: int) -> int:
        return sum(((E >> s) & _FMASK) * w for s, w in zip(self.shifts, self.weights))

    def degree(self, E: int) -> int:
        if self.n == 0:
            return 0
        return ((E * self.ones) >> self.top) & _FMASK

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def colon(self, a: int, b: int) -> int:
        """Packed ``a : b`` (fieldwise ``max(a_i - b_i, 0)``)."""
        t = (a | self.guard) - b
        m = t & self.guard
        return t & (m - (m >> (FIELD_BITS - 1)))


class _Rows:
    """Growable uint64 matrix of packed exponent chunks with element ids."""

    def __init__(self, width: int):
        self.data = np.zeros((16, width), dtype=np.uint64)
        self.ids = np.zeros(16, dtype=np.int64)
        self.size = 0

    def append(self, row: list[int], idx: int) -> None:
        if self.size == len(self.ids):
            self.data = np.concatenate([self.data, np.zeros_like(self.data)])
            self.ids = np.concatenate([self.ids, np.zeros_like(self.ids)])
        self.data[self.size] = row
        self.ids[self.size] = idx
        self.size += 1


class _Basis:
    """Mutable engine state: elements, leading-term index, divisor memo."""

    def __init__(self, ring: RingSpec):
        self.ring = ring
        self.pk = _Packing(ring.nvars, ring.order)
        self.p = ring.field.p
        self.lt_K: list[int] = []
        self.lt_E: list[int] = []
        self.tails: list[list] = []
        self.degs: list[int] = []
        self.redundant: set[int] = set()
        self.lt_exact: dict[int, int] = {}
        self.memo: dict[int, int] = {}
        self.linear_scan = False
        self.poly_indices: list[int] = []
        # leading exponents as uint64 chunk rows, for all elements and for
        # the elements with a tail
        self.all_np = _Rows(self.pk.nchunks)
        self.poly_np = _Rows(self.pk.nchunks)

    # -- conversion ---------------------------------------------------------

    def to_terms(self, f: Polynomial) -> list:
        pack = self.pk.pack
        out = []
        for m, c in f.terms:
            K, E = pack(m)
            out.append((K, E, c))
        return out

    def to_poly(self, terms: Iterable) -> Polynomial:
        unpack = self.pk.unpack
        return Polynomial(self.ring, tuple((unpack(E), c) for _, E, c in terms))

    # -- divisor lookup -----------------------------------------------------

    def find(self, E: int) -> int:
        i = self.lt_exact.get(E)
        if i is not None:
            return i
        if self.linear_scan:
            return self._scan(E)
        r = self.memo.get(E)
        if r is None:
            r = self._pred(E)
        return r

    def _scan(self, E: int) -> int:
        g = self.pk.guard
        red = self.redundant
        for i, L in enumerate(self.lt_E):
            if ((E | g) - L) & g == g and i not in red:
                return i
        return -1

    def _pred(self, E: int) -> int:
        # E is divisible by a leading term other than itself iff some E/x_i is
        # in the leading-term ideal.
        lt_exact, memo = self.lt_exact, self.memo
        for s, u in zip(self.pk.shifts, self.pk.unit):
            if (E >> s) & _FMASK:
                E2 = E - u
                j = lt_exact.get(E2)
                if j is None:
                    j = memo.get(E2)
                    if j is None:
                        j = self._pred(E2)
                if j >= 0:
                    memo[E] = j
                    return j
        memo[E] = -1
        return -1

    # -- reduction ----------------------------------------------------------

    def reduce(self, acc: dict, emap: dict) -> list:
        """Fully reduce the polynomial ``acc`` (K -> coeff, E via ``emap``)."""
        p = self.p
        heap = [-K for K in acc]
        heapq.heapify(heap)
        out = []
        find = self.find
        lt_K, lt_E, tails = self.lt_K, self.lt_E, self.tails
        pop, push = heapq.heappop, heapq.heappush
        while heap:
            K = -pop(heap)
            c = acc.pop(K)
            if p:
                c %= p
            if not c:
                continue
            E = emap[K]
            i = find(E)
            if i < 0:
                out.append((K, E, c))
                continue
            dK = K - lt_K[i]
            dE = E - lt_E[i]
            for K2, E2, c2 in tails[i]:
                K3 = K2 + dK
                v = acc.get(K3)
                if v is None:
                    acc[K3] = -c * c2
                    emap[K3] = E2 + dE
                    push(heap, -K3)
                else:
                    acc[K3] = v - c * c2
        return out

    def reduce_terms(self, terms: Iterable) -> list:
        acc, emap = {}, {}
        for K, E, c in terms:
            acc[K] = c
            emap[K] = E
        return self.reduce(acc, emap)

    def spoly_acc(self, i: int, j: int, L: int):
        """Accumulator for the S-polynomial of monic elements i and j (lead terms cancel)."""
        key_of = self.pk.key_of
        acc, emap = {}, {}
        for idx, sign in ((i, 1), (j, -1)):
            dE = L - self.lt_E[idx]
            dK = key_of(dE)
            for K2, E2, c2 in self.tails[idx]:
                K3 = K2 + dK
                v = acc.get(K3)
                if v is None:
                    acc[K3] = c2 if sign > 0 else -c2
                    emap[K3] = E2 + dE
                else:
                    acc[K3] = v + c2 if sign > 0 else v - c2
        return acc, emap

    def add(self, terms: list) -> int:
        """Append a reduced nonzero element, normalized to be monic."""
        K, E, c = terms[0]
        p = self.p
        if p:
            inv = pow(c, -1, p)
            tail = [(K2, E2, c2 * inv % p) for K2, E2, c2 in terms[1:]]
        else:
            tail = [(K2, E2, c2 / c) for K2, E2, c2 in terms[1:]]
        idx = len(self.lt_K)
        self.lt_K.append(K)
        self.lt_E.append(E)
        self.tails.append(tail)
        self.degs.append(self.pk.degree(E))
        self.lt_exact[E] = idx
        row = self.pk.chunks(E)
        self.all_np.append(row, idx)
        if tail:
            self.poly_indices.append(idx)
            self.poly_np.append(row, idx)
        return idx


@dataclass
class _Stats:
    pairs_considered: int = 0
    pairs_reduced: int = 0
    zero_reductions: int = 0
    max_degree: int = 0
    artinian_cut: int | None = None


class GroebnerBasis:
    """A reduced Groebner basis: monic elements sorted by leading monomial."""

    def __init__(self, ring: RingSpec, elements: tuple[Polynomial, ...], engine: _Basis,
                 minimal_generators: tuple[Polynomial, ...] | None = None, stats: _Stats | None = None):
        self.ring = ring
        self.order = ring.order
        self.elements = elements
        self._engine = engine
        self.minimal_generators = minimal_generators
        self.stats = stats

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.ring == other.ring and self.elements == other.elements

    def __hash__(self):
        return hash((self.ring, self.elements))

    def __repr__(self):
        return f"GroebnerBasis({len(self.elements)} elements over {self.ring})"

    @property
    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].degree() == 0

    @property
    def is_zero_ideal(self) -> bool:
        return not self.elements

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.lm for g in self.elements]

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatchError(f.ring, self.ring)
        eng = self._engine
        return eng.to_poly(eng.reduce_terms(eng.to_terms(f)))

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def lt_divisible(self, m: Sequence[int]) -> bool:
        """Whether the monomial ``m`` lies in the leading-term ideal."""
        _, E = self._engine.pk.pack(m)
        return self._engine.find(E) >= 0

    def missing_pure_powers(self) -> list[str]:
        """Variables with no pure-power leading monomial (empty iff Artinian)."""
        have = set()
        for m in self.leading_monomials():
            nz = [i for i, e in enumerate(m) if e]
            if len(nz) == 1:
                have.add(nz[0])
            elif not nz:
                return []
        return [v for i, v in enumerate(self.ring.variables) if i not in have]

    def is_artinian(self) -> bool:
        return not self.missing_pure_powers()

    def standard_monomials(self) -> list[tuple[int, ...]]:
        """All monomials outside the leading-term ideal (requires an Artinian quotient)."""
        missing = self.missing_pure_powers()
        if missing:
            raise GroebnerError(f"quotient is not Artinian: no pure power of {', '.join(missing)}")
        eng = self._engine
        if self.is_unit:
            return []
        level = [0]
        seen = {0}
        out = []
        find = eng.find
        while level:
            out.extend(level)
            nxt = []
            for E in level:
                for u in eng.pk.unit:
                    E2 = E + u
                    if E2 not in seen:
                        seen.add(E2)
                        if find(E2) < 0:
                            nxt.append(E2)
            level = nxt
        return [eng.pk.unpack(E) for E in out]

    def count_standard_monomials(self) -> int:
        return len(self.standard_monomials())

    def standard_monomials_by_degree(self) -> list[int]:
        """Hilbert function of the quotient: counts of standard monomials per degree."""
        counts: dict[int, int] = {}
        for m in self.standard_monomials():
            d = sum(m)
            counts[d] = counts.get(d, 0) + 1
        return [counts.get(d, 0) for d in range(max(counts, default=-1) + 1)]


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """``lcm/LT(f) * f - lcm/LT(g) * g`` with the leading terms cancelling."""
    if f.ring != g.ring:
        raise RingMismatchError(f.ring, g.ring)
    if not f or not g:
        raise ValueError("S-polynomial of the zero polynomial")
    fld = f.ring.field
    L = tuple(max(a, b) for a, b in zip(f.lm, g.lm))
    uf = tuple(a - b for a, b in zip(L, f.lm))
    ug = tuple(a - b for a, b in zip(L, g.lm))
    return f.mul_monomial(uf, fld.inv(f.lc)) - g.mul_monomial(ug, fld.inv(g.lc))


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(f)


def buchberger(generators: Sequence[Polynomial], order: MonomialOrder | None = None,
               degree_cap: int = DEFAULT_DEGREE_CAP, ring: RingSpec | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    ``order`` overrides the ring's order (generators are re-sorted).  Zero
    generators are dropped; the empty ideal yields an empty basis.  Raises
    :class:`DegreeCapExceeded` instead of running past ``degree_cap``.
    """
    gens = list(generators)
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError(g.ring, ring)
    if order is not None and order != ring.order:
        new_ring = ring.with_order(order)
        gens = [Polynomial.from_dict(new_ring, g.to_dict()) for g in gens]
        ring = new_ring
    gens = [g for g in gens if g]
    if degree_cap >= _HALF:
        raise ValueError(f"degree cap must stay below {_HALF}")
    if all(g.is_homogeneous() for g in gens):
        return _buchberger_homogeneous(ring, gens, degree_cap)
    return _buchberger_general(ring, gens, degree_cap)


def _new_pairs(eng: _Basis, t: int, stats: _Stats, monomial_flags: list[bool]) -> list[tuple[int, int, int]]:
    """Gebauer-Moeller filtering of the pairs (g, t) for a new element t.

    Keeps pairs whose lcm is minimal under divisibility, one per lcm, and drops
    an lcm class entirely if any member has coprime leading terms.  Pairs of
    two monomials are dropped after filtering (their S-polynomial is zero).
    """
    pk = eng.pk
    lh = eng.lt_E[t]
    mono_t = monomial_flags[t]
    # a monomial pairs only with non-monomials; monomial pairs reduce to zero
    # and are merely left out of the covering set
    rows = eng.poly_np if mono_t else eng.all_np
    n = rows.size
    data, ids = rows.data[:n], rows.ids[:n]
    keep = ids != t
    if eng.redundant:
        keep &= ~np.isin(ids, np.fromiter(eng.redundant, dtype=np.int64))
    if not keep.all():
        data, ids = data[keep], ids[keep]
    if not len(ids):
        return []
    stats.pairs_considered += len(ids)
    G = pk.chunk_guard
    lhc = np.array(pk.chunks(lh), dtype=np.uint64)
    x = (data | G) - lhc
    m = x & G
    U = x & (m - (m >> np.uint64(FIELD_BITS - 1)))
    deg = (((U * pk.chunk_ones) >> pk.chunk_top) & np.uint64(_FMASK)).sum(axis=1)
    coprime = (U == data).all(axis=1)
    keys = [ids] + [U[:, c] for c in range(U.shape[1])] + [deg]
    perm = np.lexsort(keys)
    U, ids, coprime = U[perm], ids[perm], coprime[perm]
    alive = np.ones(len(ids), dtype=bool)
    out = []
    pos = 0
    while True:
        rest = np.flatnonzero(alive[pos:])
        if not rest.size:
            break
        i = pos + int(rest[0])
        ui = U[i]
        tail = U[i:]
        covered = i + np.flatnonzero(alive[i:] & (((tail | G) - ui) & G == G).all(axis=1))
        same = covered[(U[covered] == ui).all(axis=1)]
        alive[covered] = False
        pos = i + 1
        g = int(ids[i])
        if coprime[same].any() or (mono_t and monomial_flags[g]):
            continue
        u = 0
        for c, v in enumerate(ui.tolist()):
            u |= v << (CHUNK_BITS * c)
        out.append((g, t, lh + u))
    return out


def _finish(ring: RingSpec, eng: _Basis, minimal: list[int], min_gens, stats: _Stats) -> GroebnerBasis:
    """Inter-reduce the minimal elements into the reduced basis."""
    final = _Basis(ring)
    order = sorted(minimal, key=lambda i: eng.lt_K[i])
    # index leading terms first so tails reduce against every final element
    for i in order:
        final.lt_K.append(eng.lt_K[i])
        final.lt_E.append(eng.lt_E[i])
        final.tails.append(eng.tails[i])
        final.degs.append(eng.degs[i])
        final.lt_exact[eng.lt_E[i]] = len(final.lt_K) - 1
    for idx in range(len(final.lt_K)):
        tail = final.tails[idx]
        if tail:
            final.tails[idx] = final.reduce_terms(tail)
    elements = tuple(
        final.to_poly([(final.lt_K[i], final.lt_E[i], ring.field.one)] + final.tails[i])
        for i in range(len(final.lt_K))
    )
    mg = tuple(min_gens) if min_gens is not None else None
    return GroebnerBasis(ring, elements, final, mg, stats)


def _unit_basis(ring: RingSpec, stats: _Stats) -> GroebnerBasis:
    eng = _Basis(ring)
    eng.add([(0, 0, ring.field.one)])
    return GroebnerBasis(ring, (ring.one(),), eng, (ring.one(),), stats)


def _buchberger_homogeneous(ring: RingSpec, gens: list[Polynomial], cap: int) -> GroebnerBasis:
    eng = _Basis(ring)
    pk = eng.pk
    stats = _Stats()
    if any(g.degree() == 0 for g in gens):
        return _unit_basis(ring, stats)
    by_deg: dict[int, list[Polynomial]] = {}
    for g in gens:
        by_deg.setdefault(g.degree(), []).append(g)
    gen_degrees = sorted(by_deg)
    pairs: list = []
    seq = itertools.count()
    mono_flags: list[bool] = []
    min_gens: list[Polynomial] = []

    # standard monomials of the current degree, for the Artinian cut
    std_level: list[int] | None = [0]
    std_degree = 0

    def advance_std(target: int) -> bool:
        nonlocal std_level, std_degree
        while std_level is not None and std_degree < target:
            nxt = set()
            for E in std_level:
                for u in pk.unit:
                    nxt.add(E + u)
            std_level = [E for E in nxt if eng.find(E) < 0]
            std_degree += 1
            if len(std_level) > _STD_TRACK_LIMIT:
                std_level = None
        return std_level is not None and not std_level

    def insert(terms: list) -> None:
        t = eng.add(terms)
        mono_flags.append(not eng.tails[t])
        for g, h, L in _new_pairs(eng, t, stats, mono_flags):
            heapq.heappush(pairs, (pk.degree(L), pk.key_of(L), next(seq), g, h, L))

    gi = 0
    while pairs or gi < len(gen_degrees):
        d_pair = pairs[0][0] if pairs else None
        d_gen = gen_degrees[gi] if gi < len(gen_degrees) else None
        d = min(x for x in (d_pair, d_gen) if x is not None)
        if d > cap:
            raise DegreeCapExceeded(cap, d)
        if advance_std(d - 1):
            stats.artinian_cut = std_degree
            break
        stats.max_degree = d
        while pairs and pairs[0][0] == d:
            _, _, _, i, j, L = heapq.heappop(pairs)
            stats.pairs_reduced += 1
            acc, emap = eng.spoly_acc(i, j, L)
            r = eng.reduce(acc, emap)
            if r:
                insert(r)
            else:
                stats.zero_reductions += 1
        if d_gen == d:
            for g in by_deg[d]:
                r = eng.reduce_terms(eng.to_terms(g))
                if r:
                    insert(r)
                    min_gens.append(g)
            gi += 1
    return _finish(ring, eng, list(range(len(eng.lt_K))), min_gens, stats)


def _buchberger_general(ring: RingSpec, gens: list[Polynomial], cap: int) -> GroebnerBasis:
    eng = _Basis(ring)
    eng.linear_scan = True
    pk = eng.pk
    stats = _Stats()
    pairs: list = []
    seq = itertools.count()
    mono_flags: list[bool] = []

    def insert(terms: list) -> None:
        t = eng.add(terms)
        mono_flags.append(not eng.tails[t])
        for g, h, L in _new_pairs(eng, t, stats, mono_flags):
            heapq.heappush(pairs, (pk.degree(L), pk.key_of(L), next(seq), g, h, L))
        # superseded elements leave the basis, but their queued pairs stay
        E = eng.lt_E[t]
        for g in range(t):
            if g not in eng.redundant and pk.divides(E, eng.lt_E[g]):
                eng.redundant.add(g)

    for g in sorted(gens, key=lambda f: (f.degree(), ring.sort_key(f.lm))):
        r = eng.reduce_terms(eng.to_terms(g))
        if r:
            if r[0][1] == 0:
                return _unit_basis(ring, stats)
            insert(r)
    while pairs:
        d, _, _, i, j, L = heapq.heappop(pairs)
        if d > cap:
            raise DegreeCapExceeded(cap, d)
        stats.max_degree = max(stats.max_degree, d)
        stats.pairs_reduced += 1
        acc, emap = eng.spoly_acc(i, j, L)
        r = eng.reduce(acc, emap)
        if r:
            if r[0][1] == 0:
                return _unit_basis(ring, stats)
            insert(r)
        else:
            stats.zero_reductions += 1
    minimal = [i for i in range(len(eng.lt_K)) if i not in eng.redundant]
    return _finish(ring, eng, minimal, None, stats)


def eliminate(generators: Sequence[Polynomial], drop_vars: Iterable[str],
              degree_cap: int = DEFAULT_DEGREE_CAP) -> list[Polynomial]:
    """Generators of the contraction of the ideal to the subring without ``drop_vars``.

    Computes a basis under the block order eliminating ``drop_vars`` and keeps
    the elements free of them; results live in the original ring.
    """
    gens = list(generators)
    if not gens:
        return []
    ring = gens[0].ring
    drop = list(dict.fromkeys(drop_vars))
    unknown = [v for v in drop if v not in ring.variables]
    if unknown:
        raise ValueError(f"unknown variables to eliminate: {unknown}")
    if not drop:
        return list(buchberger(gens, degree_cap=degree_cap).elements)
    keep = [v for v in ring.variables if v not in drop]
    elim_ring = RingSpec(tuple(drop + keep), ring.field, MonomialOrder.block(len(drop)))
    perm = [ring.variables.index(v) for v in elim_ring.variables]

    def to_elim(f: Polynomial) -> Polynomial:
        return Polynomial.from_dict(elim_ring, {tuple(m[i] for i in perm): c for m, c in f.terms})

    gb = buchberger([to_elim(g) for g in gens], degree_cap=degree_cap)
    nd = len(drop)
    out = []
    inverse = [0] * ring.nvars
    for pos, i in enumerate(perm):
        inverse[i] = pos
    for g in gb.elements:
        if all(not any(m[:nd]) for m, _ in g.terms):
            out.append(Polynomial.from_dict(ring, {tuple(m[inverse[i]] for i in range(ring.nvars)): c
                                                   for m, c in g.terms}))
    return out


def buchberger_criterion_holds(gb: GroebnerBasis) -> bool:
    """Audit: every S-polynomial of the basis reduces to zero."""
    for f, g in itertools.combinations(gb.elements, 2):
        if gb.normal_form(s_polynomial(f, g)):
            return False
    return True
