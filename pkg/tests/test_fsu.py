import pytest

from capitula.context import context
from capitula.fsu import (K1_TABLE, K2_PRINTED, K2_TABLE, CaseNotCovered, eps, fsu_K1, fsu_K2,
                          fsu_K3, fsu_k, root, square_test, transcription_diff)
from capitula.pell import fundamental_unit
from capitula.squareclass import SquareClassPair, square_class_pair
from capitula.triple import PrimeTriple, iter_triples


def _ctx(*t):
    return context(PrimeTriple(*t))


def test_fsu_k():
    c = _ctx(5, 13, 3)
    assert fsu_k(c.scp_d).units == (eps("p1p2q"),)
    assert fsu_k(SquareClassPair(195, 1, 195, 1, 1)).units == (root("p1p2q", i=True),)


def test_k1_golden():
    c = _ctx(5, 13, 3)
    plus, full = fsu_K1(c.scp_d, c.scp_a, c.triple)
    # 2 p2 (a+1) = 26 * 26 and p2 (x-1) = 169: the second clause of the last case
    assert full.case == "7.ii" and full.hasse_Q == 2
    assert full.render(c.triple) == ["eps_5", "eps_39", "sqrt(i*eps_39*eps_195)"]


def test_k2_golden():
    # a(eps_15) + 1 = 5 = p1, a - 1 = 3 = q, so a +- 1 is not a square; p2 (x - 1) is
    c = _ctx(5, 13, 3)
    plus, full = fsu_K2(c.scp_d, c.scp_a2, c.triple)
    assert full.case == "2" and full.hasse_Q == 2
    assert full.render(c.triple) == ["eps_13", "eps_15", "sqrt(i*eps_195)"]


def test_k3_golden_norm_minus():
    c = _ctx(5, 13, 7)
    assert fundamental_unit(65).norm == -1
    plus, full = fsu_K3(c.scp_d, c.eps_p1p2, c.triple)
    assert full.case == "2" and full.hasse_Q == 2
    assert full.render(c.triple) == ["eps_65", "sqrt(eps_7*eps_455)", "sqrt(i*eps_7)"]


def test_k3_norm_flag_accepted():
    c = _ctx(5, 13, 7)
    assert fsu_K3(c.scp_d, -1, c.triple) == fsu_K3(c.scp_d, c.eps_p1p2, c.triple)
    with pytest.raises(ValueError):
        fsu_K3(c.scp_d, 3, c.triple)


def test_k2_is_generated_mirror_of_k1():
    assert transcription_diff() == []
    assert K2_TABLE[0].units[1] == root("p1q", i=True)


def test_transcription_diff_detects_change():
    changed = (K2_PRINTED[0],) + tuple(K2_PRINTED[2:]) + (K2_PRINTED[1],)
    assert transcription_diff(K2_TABLE, changed)


def test_every_triple_hits_one_case():
    for t in iter_triples(120, 120, ordered=True):
        c = context(t)
        fsu_K1(c.scp_d, c.scp_a, t)
        fsu_K2(c.scp_d, c.scp_a2, t)
        fsu_K3(c.scp_d, c.eps_p1p2, t)


def test_uncovered_raises():
    t = PrimeTriple(5, 13, 3)
    bogus = SquareClassPair(39, 3, 13, 1, 1)  # violates a pattern of eps_{p2q}
    with pytest.raises(CaseNotCovered):
        fsu_K1(SquareClassPair(195, 2, 390, 1, 1), bogus, t)


def test_hasse_one_cases_have_no_i():
    for case in K1_TABLE:
        has_i = any(u.coefficient == "i" for u in case.units)
        assert has_i == (case.hasse_Q == 2)


def test_square_test_keys():
    t = PrimeTriple(5, 13, 7)
    x_sq = square_test(square_class_pair(fundamental_unit(455)), t)
    assert x_sq("q") and not x_sq("1") and not x_sq("2q")
