"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRIME = 32003
FIELD_ENV_VAR = "SALLYMOD_FIELD"


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field.

    ``p == 0`` denotes the rationals (elements are :class:`fractions.Fraction`),
    otherwise GF(p) with elements stored as ints in ``range(p)``.
    """

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise FieldError(f"modulus {self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``q``/``QQ`` or ``p:<prime>``/``GF(<prime>)``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t.startswith("p:"):
            return cls(int(t[2:]))
        if t.startswith("gf(") and t.endswith(")"):
            return cls(int(t[3:-1]))
        if t.isdigit():
            return cls(int(t))
        raise FieldError(f"unrecognized field {text!r}; use 'q' or 'p:<prime>'")

    @classmethod
    def default(cls) -> "FieldSpec":
        """The default field, overridable through ``$SALLYMOD_FIELD``."""
        env = os.environ.get(FIELD_ENV_VAR)
        return cls.parse(env) if env else cls(DEFAULT_PRIME)

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def token(self) -> str:
        return "q" if self.p == 0 else f"p:{self.p}"

    def __str__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    # element arithmetic; hot loops in groebner.py inline these instead

    def __call__(self, x) -> int | Fraction:
        p = self.p
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise FieldError(f"{x} has no image in GF({p})")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else a * b % self.p

    def neg(self, a):
        return -a if self.p == 0 else -a % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p == 0 else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def random_element(self, rng: random.Random, bound: int = 100):
        """A random element; over QQ a small integer in ``[-bound, bound]``."""
        if self.p == 0:
            return Fraction(rng.randint(-bound, bound))
        return rng.randrange(self.p)

    def to_str(self, c) -> str:
        return str(c)
