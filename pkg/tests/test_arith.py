import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hookspecht.arith import NEG_INF, Field, Q, ell_p, garnir_content, is_prime, nu_p, p_divides_gc


def test_valuation_examples():
    assert nu_p(3, 9) == 2
    assert ell_p(3, 2) == 1
    assert ell_p(5, 0) is NEG_INF
    with pytest.raises(ValueError):
        nu_p(3, 0)


def test_neg_inf_orders_below_integers():
    assert NEG_INF < -(10**30)
    assert 0 >= NEG_INF
    assert not (NEG_INF > -5)
    assert sorted([3, NEG_INF, -2]) == [NEG_INF, -2, 3]


@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 10**6))
def test_valuations_against_definitions(p, n):
    v = nu_p(p, n)
    assert n % p**v == 0 and n % p ** (v + 1) != 0
    i = ell_p(p, n)
    assert p**i > n >= p ** (i - 1)


def test_garnir_content_examples():
    assert garnir_content((5,)) == 0
    assert garnir_content((2, 2)) == 2
    assert garnir_content((4, 3)) == 2
    assert garnir_content((7, 1, 1)) == 0
    with pytest.raises(ValueError):
        garnir_content((2, 3))
    with pytest.raises(ValueError):
        garnir_content((2, 0))


def test_p_divides_gc_examples():
    assert p_divides_gc(3, (3, 2))
    assert p_divides_gc(3, (5,))
    assert not p_divides_gc(3, (2, 2))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_valuation_criterion_exhaustive(p):
    """nu_p(a) >= ell_p(b) iff p divides C(a, k) for every k = 1..b."""
    for a in range(1, 201):
        all_div = True
        for b in range(0, a):
            if b:
                all_div = all_div and math.comb(a, b) % p == 0
            assert (nu_p(p, a) >= ell_p(p, b)) == all_div, (a, b)


@given(st.lists(st.integers(1, 60), min_size=1, max_size=4), st.sampled_from([2, 3, 5, 7]))
def test_p_divides_gc_property(a, p):
    a = sorted(a, reverse=True)
    assert p_divides_gc(p, a) == (garnir_content(a) % p == 0)


@pytest.mark.parametrize("bad", [1, 4, 9, -3])
def test_field_rejects_non_prime(bad):
    with pytest.raises(ValueError):
        Field(bad)


@given(st.sampled_from([0, 2, 3, 5, 7]), st.integers(-50, 50), st.integers(-50, 50))
def test_field_axioms(p, x, y):
    F = Field(p)
    a, b = F(x), F(y)
    assert F.add(a, F.neg(a)) == F.zero
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, F.add(b, F.one)) == F.add(F.mul(a, b), a)
    if not F.is_zero(a):
        assert F.mul(a, F.inv(a)) == F.one
    assert F.integer_vanishes(x) == F.is_zero(F(x))
    assert F.from_str(F.to_str(a)) == a


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_frobenius(p):
    F = Field(p)
    for x in range(p):
        for y in range(p):
            lhs = pow(F.add(F(x), F(y)), p, p)
            assert lhs == F.add(pow(x, p, p), pow(y, p, p))


def test_rational_field_is_exact():
    assert Q(Fraction(1, 3)) * 3 == Q.one
    assert Field(5)(Fraction(1, 2)) == 3
    with pytest.raises(ZeroDivisionError):
        Q.inv(Q.zero)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
