from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sallymod.field import FieldError, FieldSpec
from sallymod.poly import (MonomialOrder, ParseError, compare_monomials, format_polynomial,
                           make_ring)

FIELDS = [FieldSpec.prime(32003), FieldSpec.prime(2), FieldSpec.rationals()]
NV = 3

coeffs = st.integers(-50, 50)
monos = st.tuples(*[st.integers(0, 3)] * NV)
term_maps = st.dictionaries(monos, coeffs, max_size=6)


def poly(ring, d):
    return ring.from_dict({m: ring.field(c) for m, c in d.items()})


@pytest.fixture(params=FIELDS, ids=lambda f: f.token)
def ring(request):
    return make_ring("x,y,z", request.param)


@settings(max_examples=60, deadline=None)
@given(a=term_maps, b=term_maps, c=term_maps)
def test_ring_axioms(a, b, c):
    for fld in FIELDS:
        R = make_ring("x,y,z", fld)
        f, g, h = poly(R, a), poly(R, b), poly(R, c)
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f - f == R.zero()
        assert f * R.one() == f


@settings(max_examples=60, deadline=None)
@given(a=term_maps)
def test_print_parse_round_trip(a):
    for fld in FIELDS:
        R = make_ring("x,y,z", fld)
        f = poly(R, a)
        assert R.parse(format_polynomial(f)) == f


def test_no_zero_terms_and_sorted(ring):
    f = ring.parse("x^2 + y - x^2 + 3*z*y - 3*y*z + 0*x")
    assert f == ring.parse("y")
    g = ring.parse("z + x*y + x^2 + y^3")
    keys = [ring.sort_key(m) for m, _ in g.terms]
    assert keys == sorted(keys, reverse=True)


def test_frobenius_over_gf2():
    R = make_ring("x,y", FieldSpec.prime(2))
    assert R.parse("(x+y)^2") == R.parse("x^2 + y^2")


def test_rationals_lowest_terms():
    R = make_ring("x", FieldSpec.rationals())
    f = R.parse("2/4*x + 3/6")
    for _, c in f.terms:
        assert isinstance(c, Fraction)
    assert format_polynomial(f) == "1/2*x + 1/2"


def test_field_parse_and_errors():
    assert FieldSpec.parse("q").is_rational
    assert FieldSpec.parse("GF(7)").p == 7
    with pytest.raises(FieldError):
        FieldSpec.parse("p:12")
    with pytest.raises(FieldError):
        FieldSpec.prime(5)(Fraction(1, 5))


@pytest.mark.parametrize("text,col", [("x^2 + q", 7), ("x^^2", 3), ("x + (y", 7), ("x^y", 3)])
def test_parse_errors_have_positions(text, col):
    R = make_ring("x,y")
    with pytest.raises(ParseError) as exc:
        R.parse(text)
    assert exc.value.column == col


orders = st.sampled_from([MonomialOrder.grevlex(), MonomialOrder.lex(), MonomialOrder.block(1),
                          MonomialOrder.block(2)])


@settings(max_examples=200, deadline=None)
@given(o=orders, a=monos, b=monos, c=monos)
def test_order_is_admissible(o, a, b, c):
    cmp = compare_monomials
    # total
    assert (cmp(a, b, o) == 0) == (a == b)
    assert cmp(a, b, o) == -cmp(b, a, o)
    # multiplicative
    ac = tuple(x + y for x, y in zip(a, c))
    bc = tuple(x + y for x, y in zip(b, c))
    assert cmp(ac, bc, o) == cmp(a, b, o)
    # well-order: 1 is the smallest
    assert cmp(a, (0,) * NV, o) >= 0


def test_grevlex_and_lex_examples():
    g, lx = MonomialOrder.grevlex(), MonomialOrder.lex()
    # x y^2 vs x^2 z: grevlex compares degree then the last variable
    assert compare_monomials((1, 2, 0), (2, 0, 1), g) > 0
    assert compare_monomials((1, 2, 0), (2, 0, 1), lx) < 0
    # block order: anything with x beats anything without
    b = MonomialOrder.block(1)
    assert compare_monomials((1, 0, 0), (0, 5, 5), b) > 0
