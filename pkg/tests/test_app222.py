import pytest

from capitula.app222 import (NotCl222, TypeLabel, classify_type, compare_with_general,
                             full_capitulation_check, is_cl222, kappa_222, pattern_family, type_label)
from capitula.classwords import H1, H2, H3, H4
from capitula.context import context
from capitula.squareclass import Pattern
from capitula.triple import PrimeTriple, iter_triples
from oracles import euler_legendre


@pytest.mark.parametrize("t,expected", [((5, 13, 3), True), ((5, 13, 7), True), ((17, 89, 3), False)])
def test_is_cl222(t, expected):
    assert is_cl222(PrimeTriple(*t)) is expected


def test_is_cl222_against_euler_criterion():
    for t in iter_triples(120, 120):
        minus = [euler_legendre(t.p1, t.p2), euler_legendre(t.p1, t.q),
                 euler_legendre(t.p2, t.q)].count(-1)
        expected = (t.p1 % 8 == 5 or t.p2 % 8 == 5) and minus >= 2
        assert is_cl222(t) == expected


@pytest.mark.parametrize("t,label", [((5, 13, 3), "II(b)"), ((13, 5, 3), "I(b)"), ((5, 13, 7), "III(a|b)")])
def test_type_labels(t, label):
    assert str(type_label(PrimeTriple(*t))) == label


def test_classify_requires_cl222():
    c = context(PrimeTriple(17, 89, 3))
    with pytest.raises(NotCl222):
        classify_type(c.triple, c.scp_d, c.scp_a)
    assert type_label(c.triple) == TypeLabel()
    with pytest.raises(NotCl222):
        full_capitulation_check(c.triple)
    with pytest.raises(NotCl222):
        kappa_222(c.triple, TypeLabel(), 1)


def _kernels(t):
    c = context(PrimeTriple(*t))
    ks = kappa_222(c.triple, type_label(c.triple), c.eps_p1p2)
    return {j: ks[j].alternatives for j in ks}


def test_kappa_222_golden():
    assert _kernels((5, 13, 3)) == {1: ((H1, H2),), 2: ((H3, H1 + H2),), 3: ((H1 + H3, H2 + H3),)}
    assert _kernels((13, 5, 3)) == {1: ((H1, H3 + H4),), 2: ((H3, H4),), 3: ((H1 + H3, H1 + H4),)}
    assert _kernels((5, 13, 7))[3] == ((H1 + H3,),)


def test_unresolved_type_three_keeps_both():
    t = PrimeTriple(5, 13, 7)
    ks = kappa_222(t, type_label(t), -1)
    assert ks[3].alternatives == ((H1 + H3,), (H2 + H3,))


@pytest.mark.parametrize("t", [(5, 13, 3), (13, 5, 3), (5, 13, 7)])
def test_full_capitulation_golden(t):
    assert full_capitulation_check(PrimeTriple(*t))


def test_scan_properties():
    n = 0
    for t in iter_triples(150, 150, ordered=True):
        if not is_cl222(t):
            continue
        n += 1
        c = context(t)
        assert type_label(t).family == pattern_family(c.pattern)
        assert c.pattern is not Pattern.ONE
        assert compare_with_general(t) == []
        assert full_capitulation_check(t)
    assert n > 100
