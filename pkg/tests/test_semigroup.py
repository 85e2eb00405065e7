"""Semigroup engine against brute-force set arithmetic."""

import pytest
from hypothesis import assume, given, settings, strategies as st

from sallymod.semigroup import NumericalSemigroup, SemigroupError, sg_is_stretched, sg_length

LIMIT = 200


def members(gens, upto=LIMIT):
    s = {0}
    for v in range(1, upto):
        if any(v - g in s for g in gens if v >= g):
            s.add(v)
    return s


gen_sets = st.lists(st.integers(3, 13), min_size=2, max_size=4, unique=True)


def make(gens):
    from math import gcd
    from functools import reduce
    assume(reduce(gcd, gens) == 1)
    return NumericalSemigroup(gens)


@settings(max_examples=80, deadline=None)
@given(gen_sets)
def test_membership_frobenius_apery(gens):
    S = make(gens)
    ref = members(gens)
    assert [v for v in range(LIMIT) if v in S] == sorted(ref)
    gaps = [v for v in range(LIMIT) if v not in ref]
    assert S.frobenius == max(gaps, default=-1)
    m = min(gens)
    assert S.apery_set() == sorted(min(v for v in ref if v % m == i) for i in range(m))
    pf = [g for g in gaps if all(g + s in ref for s in ref if 0 < s < LIMIT - g)]
    assert S.pseudo_frobenius() == (pf or [-1])
    assert S.type == len(pf or [-1])
    assert sorted(S.minimal_generators()) == sorted(
        v for v in ref if v > 0 and not any(a in ref and v - a in ref for a in range(1, v)))


@settings(max_examples=40, deadline=None)
@given(gen_sets, st.integers(1, 3), st.integers(1, 2))
def test_power_and_colon_values(gens, k, j):
    S = make(gens)
    ref = members(gens)
    nonzero = [v for v in ref if v > 0]
    sums = {0}
    for _ in range(k):
        sums = {a + b for a in sums for b in nonzero if a + b < LIMIT}
    M = S.maximal()
    A, B = M ** k, M ** j
    top = min(S.bound, LIMIT)
    assert set(A.values(top)) == {v for v in sums if v < top}
    # colon by values: v in A : B iff v + w is a value of A for every generator value w of B
    win = top // 2
    expect = {v for v in ref if v < win and all(v + w in sums for w in B.minimal_values())}
    assert set(A.colon(B).values(win)) == expect


def test_known_examples():
    S = NumericalSemigroup([5, 6, 9])
    assert S.frobenius == 13 and S.type == 1
    T = NumericalSemigroup([6, 7, 9, 17])
    assert T.type > 1
    m = S.maximal()
    J = S.ideal([5])
    assert sg_length(m ** 3, J * m ** 2) == 1


def test_lengths_and_containment():
    S = NumericalSemigroup([3, 5])
    m = S.maximal()
    assert (m ** 2).colength() == 3  # 0, 3, 5 are outside m^2
    with pytest.raises(SemigroupError):
        sg_length(m ** 2, m)
    with pytest.raises(SemigroupError):
        NumericalSemigroup([4, 6])


def test_stretched():
    S = NumericalSemigroup([5, 6, 9])
    assert sg_is_stretched(S, 3) == (not (S.ideal([5]).contains(S.maximal() ** 3)))
    with pytest.raises(ValueError):
        sg_is_stretched(S, 0)
