"""Monomials, monomial orders, rings and exact multivariate polynomials."""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .field import FieldSpec

Monomial = tuple  # exponent vector, one entry per ring variable


class RingMismatchError(ValueError):
    def __init__(self, a: "RingSpec", b: "RingSpec"):
        super().__init__(f"ring mismatch: {a} vs {b}")
        self.rings = (a, b)


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.message = message
        self.line, self.column, self.pos = line, col, pos


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """GrevLex, Lex, or a two-block elimination order.

    ``block`` with ``k`` leading variables compares the total degree in the
    first k variables first, then grevlex inside that block, then the second
    block the same way.
    """

    kind: str = "grevlex"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.k < 1:
            raise ValueError("block elimination order needs k >= 1")

    @classmethod
    def grevlex(cls):
        return cls("grevlex")

    @classmethod
    def lex(cls):
        return cls("lex")

    @classmethod
    def block(cls, k: int):
        return cls("block", k)

    def weight_rows(self, n: int) -> list[tuple[int, ...]]:
        """Integer weight matrix; monomials compare by lex order of ``rows @ e``."""
        if self.kind == "lex":
            return [tuple(int(i == j) for j in range(n)) for i in range(n)]
        if self.kind == "grevlex":
            return _grevlex_rows(0, n, n)
        if self.k > n:
            raise ValueError(f"block size {self.k} exceeds {n} variables")
        return _grevlex_rows(0, self.k, n) + _grevlex_rows(self.k, n, n)

    def key(self, m: Monomial) -> tuple:
        return tuple(sum(r * e for r, e in zip(row, m)) for row in self.weight_rows(len(m)))

    def __str__(self):
        return f"block({self.k})" if self.kind == "block" else self.kind


def _grevlex_rows(lo: int, hi: int, n: int) -> list[tuple[int, ...]]:
    if hi <= lo:
        return []
    rows = [tuple(int(lo <= j < hi) for j in range(n))]
    for i in range(hi - 1, lo, -1):
        rows.append(tuple(-int(j == i) for j in range(n)))
    return rows


def compare_monomials(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as ``m1`` is below, equal to or above ``m2``."""
    if len(m1) != len(m2):
        raise ValueError(f"exponent length mismatch: {len(m1)} vs {len(m2)}")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


@dataclass(frozen=True)
class RingSpec:
    """A polynomial ring ``field[variables]`` with a fixed monomial order."""

    variables: tuple[str, ...]
    field: FieldSpec = dc_field(default_factory=FieldSpec)
    order: MonomialOrder = dc_field(default_factory=MonomialOrder)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"variable names are not distinct: {self.variables}")
        for v in self.variables:
            if not _IDENT.fullmatch(v):
                raise ValueError(f"bad variable name {v!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __str__(self):
        return f"{self.field}[{','.join(self.variables)}]<{self.order}>"

    def with_order(self, order: MonomialOrder) -> "RingSpec":
        return RingSpec(self.variables, self.field, order)

    def with_field(self, fld: FieldSpec) -> "RingSpec":
        return RingSpec(self.variables, fld, self.order)

    def sort_key(self, m: Monomial) -> tuple:
        return _key_fn(self.order, self.nvars)(m)

    # constructors

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        return self.monomial((0,) * self.nvars, c)

    def monomial(self, exps: Sequence[int], c=1) -> "Polynomial":
        c = self.field(c)
        if not c:
            return self.zero()
        exps = tuple(exps)
        if len(exps) != self.nvars or min(exps, default=0) < 0:
            raise ValueError(f"bad exponent vector {exps}")
        return Polynomial(self, ((exps, c),))

    def var(self, name: str) -> "Polynomial":
        i = self.variables.index(name)
        return self.monomial(tuple(int(j == i) for j in range(self.nvars)))

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(v) for v in self.variables)

    def from_dict(self, terms: Mapping[Monomial, object]) -> "Polynomial":
        return Polynomial.from_dict(self, terms)

    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()


_KEY_CACHE: dict = {}


def _key_fn(order: MonomialOrder, n: int):
    fn = _KEY_CACHE.get((order, n))
    if fn is None:
        rows = order.weight_rows(n)
        sparse = [[(j, r) for j, r in enumerate(row) if r] for row in rows]

        def fn(m, sparse=sparse):
            return tuple(sum(r * m[j] for j, r in row) for row in sparse)

        _KEY_CACHE[(order, n)] = fn
    return fn


class Polynomial:
    """Immutable polynomial; ``terms`` holds ``(exponents, coeff)`` pairs in
    strictly descending monomial order with no zero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, terms: tuple):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def from_dict(cls, ring: RingSpec, terms: Mapping[Monomial, object]) -> "Polynomial":
        fld = ring.field
        items = []
        for m, c in terms.items():
            c = fld(c)
            if c:
                items.append((tuple(m), c))
        key = _key_fn(ring.order, ring.nvars)
        items.sort(key=lambda t: key(t[0]), reverse=True)
        return cls(ring, tuple(items))

    def to_dict(self) -> dict:
        return dict(self.terms)

    # basic queries

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    @property
    def lm(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def lc(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables_used(self) -> set[int]:
        return {i for m, _ in self.terms for i, e in enumerate(m) if e}

    # arithmetic

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(self.ring, other.ring)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._combine(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._combine(self, -1)

    def _combine(self, other: "Polynomial", sign: int) -> "Polynomial":
        fld = self.ring.field
        acc = dict(self.terms)
        for m, c in other.terms:
            v = acc.get(m, fld.zero)
            v = fld.add(v, c) if sign > 0 else fld.sub(v, c)
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return Polynomial.from_dict(self.ring, acc)

    def __neg__(self):
        fld = self.ring.field
        return Polynomial(self.ring, tuple((m, fld.neg(c)) for m, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        fld = self.ring.field
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                acc[m] = fld.add(acc.get(m, fld.zero), fld.mul(c1, c2))
        return Polynomial.from_dict(self.ring, acc)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, s) -> "Polynomial":
        fld = self.ring.field
        s = fld(s)
        if not s:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((m, fld.mul(c, s)) for m, c in self.terms))

    def mul_monomial(self, exps: Monomial, c=1) -> "Polynomial":
        fld = self.ring.field
        c = fld(c)
        if not c:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            tuple((tuple(a + b for a, b in zip(m, exps)), fld.mul(cc, c)) for m, cc in self.terms),
        )

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_polynomial(self)


def poly_arith(a: Polynomial, b: Polynomial, op: str, s=None) -> Polynomial:
    """``a op b`` for op in {"add", "sub", "mul"}; ``s`` optionally scales ``b``."""
    if a.ring != b.ring:
        raise RingMismatchError(a.ring, b.ring)
    if s is not None:
        b = b.scale(s)
    op = op.lower()
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def is_homogeneous(f: Polynomial) -> bool:
    return f.is_homogeneous()


# ---------------------------------------------------------------- printing

def _coeff_signed(c, p: int):
    if p and c > p // 2:
        return c - p
    return c


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for e, v in zip(m, names):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    p = f.ring.field.p
    out = []
    for i, (m, c) in enumerate(f.terms):
        c = _coeff_signed(c, p)
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(m, f.ring.variables)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# ----------------------------------------------------------------- parsing

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*^()]))")


class _Parser:
    """Recursive descent over ``expr := term (('+'|'-') term)*``,
    ``term := factor ('*' factor)*``, ``factor := atom ('^' int)?``."""

    def __init__(self, ring: RingSpec, text: str):
        self.ring = ring
        self.text = text
        self.toks = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                rest = text[pos:]
                if rest.strip():
                    raise ParseError(f"unexpected character {rest.strip()[0]!r}", text,
                                     pos + len(rest) - len(rest.lstrip()))
                break
            kind = "num" if m.group(1) else "name" if m.group(2) else "op"
            val = m.group(m.lastindex)
            self.toks.append((kind, "^" if val == "**" else val, m.start(m.lastindex)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> Polynomial:
        if not self.toks:
            raise ParseError("empty polynomial", self.text, 0)
        f = self.expr()
        kind, val, pos = self.peek()
        if kind is not None:
            raise ParseError(f"unexpected token {val!r}", self.text, pos)
        return f

    def expr(self) -> Polynomial:
        kind, val, _ = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                g = self.term()
                f = f + g if val == "+" else f - g
            else:
                return f

    def term(self) -> Polynomial:
        f = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                f = f * self.factor()
            elif kind in ("name", "num") or (kind == "op" and val == "("):
                f = f * self.factor()  # implicit product, e.g. "2x"
            else:
                return f

    def factor(self) -> Polynomial:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num" or "/" in val:
                raise ParseError("exponent must be a non-negative integer", self.text, pos)
            base = base ** int(val)
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "num":
            return self.ring.const(Fraction(val))
        if kind == "name":
            if val not in self.ring.variables:
                raise ParseError(f"unknown variable {val!r}", self.text, pos)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            f = self.expr()
            kind, val, pos = self.take()
            if val != ")":
                raise ParseError("expected ')'", self.text, pos)
            return f
        if kind is None:
            raise ParseError("unexpected end of input", self.text, pos)
        raise ParseError(f"unexpected token {val!r}", self.text, pos)


def make_ring(variables: Iterable[str] | str, field: FieldSpec | None = None,
              order: MonomialOrder | None = None) -> RingSpec:
    """Convenience constructor; ``variables`` may be ``"x,y,z"``."""
    if isinstance(variables, str):
        variables = [v.strip() for v in variables.replace(" ", ",").split(",") if v.strip()]
    return RingSpec(tuple(variables), field or FieldSpec(), order or MonomialOrder())
