"""Hilbert data, Sally lengths, depth routes and the diagnostics built on them."""

import pytest
from hypothesis import given, settings, strategies as st

from sallymod.field import FieldSpec
from sallymod.ideal import Ideal
from sallymod.invariants import (AnalysisConfig, BudgetExceeded, DepthClass, HilbertFitError,
                                 HypothesisError, ReductionError, depth_scan, fit_binomial,
                                 fit_hilbert, hilbert_samuel, hp_numerator, is_reduction,
                                 lemma37_witness, multilinear_form, pair_data, ratliff_rush,
                                 sally_data, sample_reductions, series_from_numerator,
                                 socle_length_check, v_dimension, v_dimension_audit)
from sallymod.invariants.hilbert import poly_value
from sallymod.random_ideals import random_fixture
from sallymod.semigroup import NumericalSemigroup

from conftest import example

SEEDS = range(12)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 4), st.lists(st.integers(-30, 30), min_size=5, max_size=5))
def test_fit_recovers_coefficients(D, cs):
    coeffs = tuple(cs[:D + 1])
    pts = {n: poly_value(coeffs, n) for n in range(2, D + 6)}
    got, _ = fit_binomial(pts, D)
    assert got == coeffs


def test_fit_needs_enough_points():
    with pytest.raises(HilbertFitError):
        fit_binomial({1: 3, 2: 5}, 2)


def test_hilbert_samuel_of_the_maximal_ideal(xy):
    hd = hilbert_samuel(Ideal.maximal(xy), 6)
    assert hd.coefficients == (1, 0, 0)
    assert hd.postulation <= 0
    assert all(hd.polynomial(n) == hd.values[n] for n in range(1, 7))


def test_fit_rejects_non_monotone():
    with pytest.raises(ValueError):
        fit_hilbert([0, 1, 3, 2, 5, 6, 7], 1)


@pytest.fixture(scope="module", params=SEEDS)
def fixture(request):
    I, J = random_fixture(request.param)
    return I, J, sally_data(I, J)


def test_random_fixture_checks(fixture):
    I, J, rep = fixture
    assert rep.ok, rep.failures
    assert rep.e[0] == J.colength()


def test_depth_scan_agrees(fixture):
    I, J, rep = fixture
    scan = depth_scan(I, J)
    if scan.depth_class is not DepthClass.Undetermined:
        # the light route may only say "at most d-2" when the full one says so too
        assert scan.depth_class == rep.depth_class or (
            scan.depth_class is DepthClass.AtMostDMinus2 and not rep.depth_class.at_least_d_minus_1)
    assert all(scan.steps[n] == rep.step_lengths[n] for n in scan.steps)


def test_hp_series(fixture):
    I, J, rep = fixture
    if not rep.depth_class.at_least_d_minus_1:
        with pytest.raises(ValueError):
            hp_numerator(rep.step_lengths, rep.colength_I, rep.r, rep.depth_class)
        return
    p = rep.hp_numerator
    series = series_from_numerator(p, rep.d, rep.r + rep.d + 2)
    pd = pair_data(I, J)
    assert series == [pd.len_power(n + 1) - pd.len_power(n) for n in range(len(series))]


def test_vv_routes_agree(fixture):
    I, J, rep = fixture
    pd = pair_data(I, J)
    for k in range(2, rep.r + 2):
        assert pd.vv(k, "length") == pd.vv(k, "eliminate")


def test_theorem_flags_consistent(fixture):
    _, _, rep = fixture
    for f in rep.theorem_flags.values():
        assert f.consistent, f


def test_ratliff_rush_sum(fixture):
    I, J, rep = fixture
    if not rep.depth_class.at_least_d_minus_1:
        pytest.skip("identity stated for depth >= d-1")
    rr = ratliff_rush(I, J, rep.r + 1)
    assert rr.e1_sum == rep.e[1]
    assert all(rr.powers_closed.values())


def test_reduction_errors(xy):
    I = Ideal.parse(xy, ["x^2", "y^2"])
    with pytest.raises(ReductionError):
        is_reduction(Ideal.parse(xy, ["x", "y^2"]), I)
    m = Ideal.maximal(xy)
    assert is_reduction(I, m, bound=5) is None   # degrees never catch up
    with pytest.raises(BudgetExceeded):
        is_reduction(Ideal.parse(xy, ["x^3", "y^3"]), m ** 3 + Ideal.parse(xy, ["x^2*y"]),
                     power_budget=0)


def test_budget_in_sally_data():
    ex = example("Graph_n1")
    with pytest.raises(BudgetExceeded):
        sally_data(ex.I, ex.J, config=AnalysisConfig(power_budget=2))


# --- numerical semigroups -----------------------------------------------------

def semigroup_pair(gens):
    S = NumericalSemigroup(gens)
    m = S.maximal()
    return m, S.ideal([S.multiplicity])


def test_form_on_5_6_9():
    m, J = semigroup_pair([5, 6, 9])
    assert [v_dimension(m, J, n) for n in (1, 2)] == [3, 1]
    ft = multilinear_form(m, J, 2)
    assert ft.dim == 1 and ft.symmetric and ft.nondegenerate
    res = socle_length_check(m, J, 2)
    assert res.applies and res.lhs == res.rhs == 1
    assert v_dimension_audit(m, J).ok
    assert lemma37_witness(m, J, 2).ok


def test_form_refuses_without_hypotheses():
    m, J = semigroup_pair([5, 6, 9])
    with pytest.raises(HypothesisError):
        multilinear_form(m, J, 1)   # λ(m^2/Jm) = 2


def test_semigroup_depth_classes():
    m, J = semigroup_pair([5, 6, 9])
    assert sally_data(m, J).depth_class is DepthClass.CohenMacaulay
    m, J = semigroup_pair([6, 7, 9, 17])
    rep = sally_data(m, J)
    assert rep.depth_class is DepthClass.ExactlyDMinus1
    rr = ratliff_rush(m, J, rep.r + 1)
    assert not rr.powers_closed[2]
    assert rr.e1_sum == rep.e[1]


@pytest.mark.parametrize("gens", [[3, 5], [4, 5, 7], [5, 6, 9], [6, 7, 9, 17], [7, 9, 11, 13]])
def test_semigroup_reports(gens):
    m, J = semigroup_pair(gens)
    rep = sally_data(m, J)
    assert rep.ok, rep.failures
    for f in rep.theorem_flags.values():
        assert f.consistent


def test_sampling_constant_on_semigroup():
    m, J = semigroup_pair([5, 6, 9])
    rep = sample_reductions(m, 6, seed=3, include=J, depth_at_least_d_minus_1=True)
    assert sum(s.valid for s in rep.samples) >= 3
    assert rep.ok and not rep.inconclusive


def test_sampling_needs_large_field():
    m, _ = semigroup_pair([5, 6, 9])
    small = NumericalSemigroup([5, 6, 9], field=FieldSpec.prime(7)).maximal()
    with pytest.raises(ValueError):
        sample_reductions(small, 3, seed=0)
