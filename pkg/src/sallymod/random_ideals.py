"""Seeded random m-primary homogeneous ideals and minimal reductions."""

from __future__ import annotations

import itertools
import random

from .field import FieldSpec
from .ideal import Ideal
from .invariants.pair import is_reduction
from .poly import make_ring

NAMES = ("x", "y", "z")


def _monomials(n: int, deg: int):
    for c in itertools.combinations_with_replacement(range(n), deg):
        e = [0] * n
        for i in c:
            e[i] += 1
        yield tuple(e)


def random_form(ring, deg: int, rng: random.Random, density: float = 0.6):
    fld = ring.field
    terms = {m: fld.random_element(rng) for m in _monomials(ring.nvars, deg) if rng.random() < density}
    f = ring.from_dict(terms)
    return f if f else ring.monomial([deg] + [0] * (ring.nvars - 1))


def random_artinian(rng: random.Random, nvars: int, field: FieldSpec | None = None,
                    max_deg: int = 3, extra: int = 2) -> Ideal:
    """Pure powers plus a few random forms: always m-primary, usually not monomial."""
    ring = make_ring(NAMES[:nvars], field)
    gens = [ring.monomial([rng.randint(1, max_deg + 1) if j == i else 0 for j in range(nvars)])
            for i in range(nvars)]
    gens += [random_form(ring, rng.randint(1, max_deg), rng) for _ in range(extra)]
    return Ideal(ring, gens)


def random_equigenerated(rng: random.Random, nvars: int, deg: int, field: FieldSpec | None = None,
                         extra: int = 2) -> Ideal:
    """Generated in one degree, so generic combinations of generators give a minimal reduction."""
    ring = make_ring(NAMES[:nvars], field)
    gens = [ring.monomial([deg if j == i else 0 for j in range(nvars)]) for i in range(nvars)]
    gens += [random_form(ring, deg, rng) for _ in range(extra)]
    return Ideal(ring, gens)


def generic_reduction(I: Ideal, rng: random.Random, attempts: int = 5, bound: int = 12) -> Ideal:
    """dim R random combinations of the generators of I, retried until they form a reduction."""
    gens = I.generator_elements()
    fld = I.field
    for _ in range(attempts):
        out = []
        for _ in range(I.dim):
            h = I.ring.zero()
            for g in gens:
                h = h + g.scale(fld.random_element(rng))
            out.append(h)
        J = Ideal(I.ring, out)
        if J.colength() and is_reduction(J, I, bound) is not None:
            return J
    raise RuntimeError("no reduction found; the field may be too small")


def random_pair(seed: int, nvars: int | None = None, field: FieldSpec | None = None,
                deg: int | None = None, extra: int = 2) -> tuple[Ideal, Ideal]:
    rng = random.Random(seed)
    n = nvars or rng.randint(1, 3)
    I = random_equigenerated(rng, n, deg or rng.randint(1, 3 if n < 3 else 2), field, extra)
    return I, generic_reduction(I, rng)


def random_fixture(seed: int, field: FieldSpec | None = None) -> tuple[Ideal, Ideal]:
    """A pair in 2 or 3 variables with nontrivial Hilbert data (used by the test suites)."""
    rng = random.Random(seed)
    n = rng.choice([2, 2, 3])
    deg = rng.randint(2, 4) if n == 2 else 2
    return random_pair(seed, n, field, deg=deg, extra=rng.randint(1, 3))
