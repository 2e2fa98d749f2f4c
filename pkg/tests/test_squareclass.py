import pytest

from capitula.pell import fundamental_unit
from capitula.squareclass import (Pattern, SquareClassPair, SubPattern, UnclassifiedPattern,
                                  classify_pattern, classify_sub_pattern, multiplier_is_square, pattern_pairs,
                                  square_class_pair, validate_lemma)
from capitula.triple import PrimeTriple, iter_triples
from oracles import naive_squarefree_kernel, squarefree_below


@pytest.mark.parametrize("d,pair", [(195, (15, 13)), (455, (65, 7)), (39, (26, 6)), (15, (5, 3))])
def test_golden_pairs(d, pair):
    scp = square_class_pair(fundamental_unit(d))
    assert (scp.c_plus, scp.c_minus) == pair


def test_pairs_match_trial_division():
    for d in squarefree_below(600):
        u = fundamental_unit(d)
        if u.norm != 1 or u.denom != 1 or u.x > 10**10:
            continue
        scp = square_class_pair(u)
        assert scp.c_plus == naive_squarefree_kernel(u.x + 1)
        assert scp.c_minus == naive_squarefree_kernel(u.x - 1)
        assert scp.c_plus * scp.s**2 == u.x + 1 and scp.c_minus * scp.t**2 == u.x - 1
        assert scp.c_plus * scp.c_minus in (d, 4 * d)
        assert not scp.multipliers & {2, 2 * d}


def test_half_integral_pair():
    u = fundamental_unit(21)  # (5 + sqrt 21)/2, x +- 1 = 7/2, 3/2
    with pytest.raises(ValueError):
        square_class_pair(u)
    scp = square_class_pair(u, allow_half=True)
    assert scp.multipliers == {14, 6}


def test_norm_minus_one_rejected():
    with pytest.raises(ValueError):
        square_class_pair(fundamental_unit(65))


@pytest.mark.parametrize("d,c,expected", [(195, 13, True), (195, 1, False), (455, 7, True)])
def test_multiplier_is_square(d, c, expected):
    assert multiplier_is_square(fundamental_unit(d), c) is expected


def test_multiplier_must_divide_2d():
    with pytest.raises(ValueError):
        multiplier_is_square(fundamental_unit(195), 7)


def test_multiplier_agrees_with_pair():
    u = fundamental_unit(455)
    scp = square_class_pair(u)
    for c in (1, 2, 5, 7, 10, 13, 14, 26, 35, 65, 70, 91, 130, 182, 455, 910):
        assert multiplier_is_square(u, c) == scp.contains(c)


@pytest.mark.parametrize("t,pattern", [((5, 13, 3), Pattern.P2), ((5, 13, 7), Pattern.Q),
                                       ((13, 5, 3), Pattern.P1)])
def test_golden_patterns(t, pattern):
    t = PrimeTriple(*t)
    assert classify_pattern(square_class_pair(fundamental_unit(t.d)), t) is pattern


def test_pattern_mirror():
    assert Pattern.P1.mirror() is Pattern.P2 and Pattern.TWO_Q.mirror() is Pattern.TWO_Q
    assert Pattern.TWO_P2.prime == "p2" and Pattern.ONE.prime is None


def test_seven_pairs_distinct():
    assert len(pattern_pairs(PrimeTriple(5, 13, 3))) == 7


def test_unclassified():
    t = PrimeTriple(5, 13, 3)
    with pytest.raises(UnclassifiedPattern):
        classify_pattern(SquareClassPair(195, 2, 390, 1, 1), t)
    with pytest.raises(ValueError):
        classify_pattern(square_class_pair(fundamental_unit(39)), t)


def test_sub_patterns():
    assert classify_sub_pattern(square_class_pair(fundamental_unit(39)), 13, 3) is SubPattern.TWO_P
    assert classify_sub_pattern(square_class_pair(fundamental_unit(15)), 5, 3) is SubPattern.P


def test_sub_patterns_total():
    for t in iter_triples(100, 100):
        for p in (t.p1, t.p2):
            classify_sub_pattern(square_class_pair(fundamental_unit(p * t.q)), p, t.q)


@pytest.mark.parametrize("lemma", ["L2.2", "L2.3", "L2.4", "L2.6", "lemma2.3"])
def test_lemmas_small(lemma):
    assert validate_lemma(lemma, 300) == []


def test_lemma_examples():
    # eps_3 = 2 + sqrt 3 has x - 1 = 1 a square
    u = fundamental_unit(3)
    assert (u.x, u.y) == (2, 1)
    assert validate_lemma("L2.3", 50) == []


def test_lemma_validator_finds_planted_violation(monkeypatch):
    # replacing eps_7 = 8 + 3 sqrt 7 by its square (x = 127 odd) must be reported
    import capitula.squareclass as sc
    from capitula.pell import QuadraticUnit

    real = sc.fundamental_unit
    monkeypatch.setattr(sc, "fundamental_unit",
                        lambda d: QuadraticUnit(7, 127, 48) if d == 7 else real(d))
    hits = validate_lemma("L2.3", 30)
    assert [h["d"] for h in hits] == [7]


def test_lemma_bad_id():
    with pytest.raises(ValueError):
        validate_lemma("L9.9", 100)
