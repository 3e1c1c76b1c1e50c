from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_reach
from polyrep.minimality import (
    TheoremValue,
    cross_check,
    ell_repeat_theorem,
    ell_theorem,
    expected_witness,
    gamma_lower_bound,
    gamma_witness,
    reference_gamma,
)


def test_ell_theorem_examples():
    assert ell_theorem(10).value == 6
    assert ell_theorem(5).value == 3
    tv = ell_theorem(7)
    assert tv.value is None and not tv.domain_ok
    assert not ell_theorem(9).domain_ok
    assert [ell_theorem(m).value for m in (3, 4, 6, 8)] == [3, 4, 3, 4]


def test_theorem_value_guards_domain():
    with pytest.raises(ValueError):
        TheoremValue("x", 7, 1, 0, 5, "", False)


def test_ell_repeat_theorem_examples():
    assert ell_repeat_theorem(20, 7, 6).value == 8
    assert ell_repeat_theorem(17, 3, 2).value == 10
    assert ell_repeat_theorem(16, 3, 2).value == 14
    assert ell_repeat_theorem(62, 4, 3).value == 17
    assert ell_repeat_theorem(14, 2, 1).value == 7
    assert ell_repeat_theorem(78, 5, 4).value == 18
    assert ell_repeat_theorem(93, 6, 5).value == 19


def test_ell_repeat_theorem_domains():
    with pytest.raises(ValueError):
        ell_repeat_theorem(20, 7, 3)
    assert not ell_repeat_theorem(13, 2, 1).domain_ok
    assert not ell_repeat_theorem(11, 3, 2).domain_ok
    assert ell_repeat_theorem(10, 3, 2).value == 8
    assert not ell_repeat_theorem(61, 4, 3).domain_ok
    assert not ell_repeat_theorem(77, 5, 4).domain_ok
    assert not ell_repeat_theorem(92, 6, 5).domain_ok
    assert not ell_repeat_theorem(10, 7, 6).domain_ok
    assert ell_repeat_theorem(10, 1, 0).value == 6


@given(st.integers(min_value=11, max_value=10**5), st.integers(min_value=7, max_value=10**5))
def test_large_r_theorem_is_the_guy_bound(m, r):
    tv = ell_repeat_theorem(m, r, r - 1)
    if r < m - 3:
        assert tv.value == -(-(m - 3) // r) + r - 2
        # a form of that length can spend r-1 + r*(ell-r+1) >= m-4 on the units
        assert r - 1 + r * (tv.value - r + 1) >= m - 4
        assert r - 1 + r * (tv.value - r) < m - 4
    else:
        assert not tv.domain_ok


def test_gamma_lower_bound():
    assert gamma_lower_bound(15).value == 33
    assert gamma_lower_bound(16).value == 36
    assert gamma_lower_bound(17).value == 25
    assert not gamma_lower_bound(13).domain_ok


def test_reference_gamma():
    assert reference_gamma(4) == 15
    assert reference_gamma(5) == 109
    assert reference_gamma(3) == 8 and reference_gamma(6) == 8 and reference_gamma(8) == 60
    assert reference_gamma(10) is None


def test_cross_check_examples():
    cc = cross_check(10, 1, bound=20000)
    assert cc.status == "PASS" and cc.empirical == 6 and cc.first_gap == 6 and cc.witness_ok
    cc = cross_check(14, 2, 1, bound=20000)
    assert cc.status == "PASS" and cc.empirical == 7 and cc.first_gap == 12 and cc.witness_ok


def test_cross_check_r3_multiple_of_three():
    # the minimum is right, but 3m-12 is represented one slot below it
    cc = cross_check(15, 3, 2, bound=20000)
    assert cc.status == "PASS" and cc.empirical == 13
    assert cc.witness == 33 and cc.witness_unrepresented is False
    assert cc.first_gap == 35


def test_cross_check_off_domain():
    cc = cross_check(9, 1, bound=5000)
    assert cc.status == "EMPIRICAL-ONLY" and cc.theorem is None
    assert cc.empirical == 5
    cc = cross_check(7, 1, bound=5000)
    assert cc.status == "EMPIRICAL-ONLY" and cc.empirical == 4
    cc = cross_check(12, 2, 1, bound=5000)
    assert cc.status == "EMPIRICAL-ONLY" and cc.empirical is not None


@pytest.mark.parametrize("m", [3, 4, 5, 6, 8, 10, 11, 16])
def test_cross_check_r1(m):
    cc = cross_check(m, 1, bound=5000)
    assert cc.status == "PASS"
    if m >= 10:
        assert cc.first_gap == m - 4


@pytest.mark.parametrize("m, r", [(14, 7), (18, 7), (20, 8), (25, 9), (30, 7)])
def test_cross_check_large(m, r):
    cc = cross_check(m, r, bound=8000)
    assert cc.status == "PASS" and cc.witness == m - 4 and cc.witness_ok


def test_expected_witness():
    assert expected_witness(20, 1) == 16
    assert expected_witness(20, 7) == 16
    assert expected_witness(20, 2) == 18
    assert expected_witness(16, 3) == 36
    assert expected_witness(17, 3) == 25


def test_gamma_witness_examples():
    for m in (16, 17):
        rep = gamma_witness(m)
        assert rep.valid and rep.first_gap == rep.target
    rep = gamma_witness(15)
    assert rep.target == 33 and rep.represented_below
    assert not rep.target_unrepresented and not rep.valid


@pytest.mark.parametrize("m", range(15, 61, 3))
def test_gamma_first_gap_for_multiples_of_three(m):
    rep = gamma_witness(m, bound=3 * m)
    assert rep.first_gap == 3 * m - 10
    assert gamma_witness(m, target=3 * m - 10).valid


@pytest.mark.parametrize("m", [m for m in range(14, 61) if m % 3])
def test_gamma_witness_other_residues(m):
    assert gamma_witness(m).valid


def test_gamma_witness_bound_check():
    with pytest.raises(ValueError):
        gamma_witness(16, bound=10)
    with pytest.raises(ValueError):
        gamma_witness(13)


@pytest.mark.parametrize("m", [14, 16, 17, 18])
def test_gamma_witness_against_sets(m):
    rep = gamma_witness(m, bound=4 * m)
    reach = brute_reach(m, rep.shape.weights, 4 * m)
    gap = min(n for n in range(1, 4 * m + 1) if n not in reach)
    assert rep.first_gap == gap
