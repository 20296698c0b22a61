"""The three scalar building blocks and their exact algebra."""

from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from gradedchain.errors import PoleError
from gradedchain.scalars import Coupling, f, g, h, rat, rat_str, set_product

C1 = Coupling(1)
C2 = Coupling(2)

rationals = st.fractions(
    min_value=Fraction(-40), max_value=Fraction(40), max_denominator=8
)
couplings = st.fractions(
    min_value=Fraction(-8), max_value=Fraction(8), max_denominator=8
).filter(lambda q: q != 0).map(Coupling)


def test_g_values():
    assert g(3, 1, C2) == 1
    assert g(5, 2, C1) == Fraction(1, 3)
    assert g(2, 5, C1) == Fraction(-1, 3)


def test_g_pole():
    with pytest.raises(PoleError):
        g(1, 1, C1)


def test_f_values():
    assert f(2, 1, C1) == 2
    assert f(0, 1, C1) == 0
    with pytest.raises(PoleError):
        f(Fraction(1, 2), Fraction(1, 2), C1)


def test_h_values():
    assert h(2, 1, C1) == 2
    assert h(1, 3, C2) == 0
    assert h(7, 7, C2) == 1
    assert h(Fraction(-3, 4), Fraction(-3, 4), C1) == 1


def test_f_reflection_at_concrete_points():
    # x=4, y=1, c=2: f(2,1)*f(1,4) = 3 * 1/3
    assert f(4 - 2, 1, C2) * f(1, 4, C2) == 1
    # x=3, y=1, c=2 puts the first factor on its pole locus x-c = y
    with pytest.raises(PoleError):
        f(3 - 2, 1, C2)


@given(rationals, rationals, couplings)
def test_g_antisymmetry(x, y, c):
    assume(x != y)
    assert g(x, y, c) + g(y, x, c) == 0


@given(rationals, rationals, couplings)
def test_f_minus_g_is_one(x, y, c):
    assume(x != y)
    assert f(x, y, c) - g(x, y, c) == 1


@given(rationals, rationals, couplings)
def test_h_inverts_shifted_g(x, y, c):
    assume(x != y - c)
    assert h(x, y, c) * g(x, y - c, c) == 1


@given(rationals, rationals, couplings)
def test_f_reflection(x, y, c):
    assume(x != y and x - c != y)
    assert f(x - c, y, c) * f(y, x, c) == 1


def test_set_product_values():
    assert set_product(f, [], [1, 2, 3], C1) == 1
    assert set_product(g, [3, 5], [1], C1) == Fraction(1, 8)
    x = Fraction(9, 7)
    assert set_product(h, [x], [x], C1) == 1


def test_set_product_names_the_offending_pair():
    with pytest.raises(PoleError, match=r"\(5, 5\)"):
        set_product(g, [3, 5], [5], C1)


@given(
    st.lists(rationals, min_size=0, max_size=3, unique=True),
    st.lists(rationals, min_size=0, max_size=3, unique=True),
    st.lists(rationals, min_size=1, max_size=3, unique=True),
    couplings,
)
def test_set_product_factorizes(a1, a2, b, c):
    assume(not set(a1) & set(a2))
    assume(all(x != y for x in a1 + a2 for y in b))
    whole = set_product(f, a1 + a2, b, c)
    assert whole == set_product(f, a1, b, c) * set_product(f, a2, b, c)


def test_rat_coercions():
    assert rat("3/4") == Fraction(3, 4)
    assert rat(5) == Fraction(5)
    q = Fraction(-2, 9)
    assert rat(q) is q


@given(rationals)
def test_rat_str_round_trip(q):
    s = rat_str(q)
    assert "/" not in s or not s.endswith("/1")
    assert rat(s) == q


def test_coupling_rejects_zero():
    with pytest.raises(ValueError):
        Coupling(0)
    with pytest.raises(ValueError):
        Coupling("0/5")


def test_coupling_is_a_fraction():
    assert Coupling("1/2") * 2 == 1
    assert Coupling(-3) + 3 == 0
