import pytest
from hypothesis import given, strategies as st

from capitula.gaussian import (I, GaussianInt, exact_div, gaussian_sqrt, two_squares_4,
                               unit_times_square)
from oracles import naive_is_prime

gints = st.builds(GaussianInt, st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))


@given(gints, gints)
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()


@given(gints, gints.filter(lambda z: z.norm() > 0))
def test_exact_div_inverts_product(a, b):
    assert exact_div(a * b, b) == a


@given(gints)
def test_square_root_recovers_associate(z):
    r = gaussian_sqrt(z * z)
    assert r is not None and r * r == z * z


@given(gints.filter(lambda z: z.norm() > 0), st.sampled_from([GaussianInt(1), I]))
def test_unit_times_square(w, u):
    unit, root = unit_times_square(u * w * w)
    assert unit == u and unit * root * root == u * w * w


def test_non_square():
    assert gaussian_sqrt(GaussianInt(3, 0)) is None
    assert unit_times_square(GaussianInt(1, 2)) is None


def test_pairing_example():
    # 8 + i = (2 - i)(3 + 2i)
    assert GaussianInt(2, -1) * GaussianInt(3, 2) == GaussianInt(8, 1)
    assert exact_div(GaussianInt(8, 1), GaussianInt(1, 2) * GaussianInt(3, 2)) is not None


def test_canonical_associate():
    assert GaussianInt(-2, 1).canonical() == GaussianInt(1, 2)
    assert GaussianInt(0, 0).canonical() == GaussianInt(0, 0)


@pytest.mark.parametrize("p", [p for p in range(5, 2000, 4) if naive_is_prime(p)])
def test_two_squares(p):
    e, f = two_squares_4(p)
    assert e > 0 and f > 0 and e * e + 4 * f * f == p


def test_two_squares_rejects_3_mod_4():
    with pytest.raises(ValueError):
        two_squares_4(7)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_div(GaussianInt(1, 1), GaussianInt(0, 0))
