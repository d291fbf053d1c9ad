"""Concrete rings and valuations: Puiseux series, fractions, p-adics."""

from fractions import Fraction

import pytest

from supertrop.core_order import BOTTOM, THETA_ZERO, theta
from supertrop.instances import (
    PuiseuxFraction,
    SERIES_ZERO,
    convex_subgroup_valuation,
    degree_monoid,
    degree_valuation,
    field_ring,
    fraction,
    leading_term,
    lex_pair,
    padic_valuation,
    puiseux_fraction_ring,
    puiseux_fraction_valuation,
    puiseux_ring,
    puiseux_valuation,
    reciprocal_valuation,
    series,
    series_add,
    series_inverse,
    series_mul,
    series_neg,
    t_power,
    truncate_series,
)


def test_series_normalization():
    s = series([(1, 1), (1, 1), (2, 0)])
    assert s.terms == ((Fraction(1), Fraction(2)),)
    assert s.ord == 1
    assert s.leading == (Fraction(1), Fraction(2))
    assert SERIES_ZERO.is_zero
    assert series([(0, 0)]).is_zero


def test_square_of_one_plus_root_t():
    a = series([(0, 1), (Fraction(1, 2), 1)])
    sq = series_mul(a, a)
    assert sq == series([(0, 1), (Fraction(1, 2), 2), (1, 1)])


def test_geometric_series_inverse():
    a = series([(0, 1), (1, -1)])  # 1 - t
    inv = series_inverse(a, 3)
    assert inv == series([(0, 1), (1, 1), (2, 1), (3, 1)])
    assert truncate_series(series_mul(a, inv), Fraction(3)) == t_power(0)
    with pytest.raises(ZeroDivisionError):
        series_inverse(SERIES_ZERO, 3)


def test_series_arithmetic_in_characteristic_two():
    a = series([(0, 1), (1, 1)], char=2)
    assert series_add(a, a, char=2).is_zero
    assert series_neg(a, char=2) == a
    sq = series_mul(a, a, char=2)
    assert sq == series([(0, 1), (2, 1)], char=2)


def test_puiseux_valuation_values():
    v = puiseux_valuation()
    assert v.v(t_power(Fraction(3, 2))) == theta(Fraction(3, 2))
    assert v.v(SERIES_ZERO) == THETA_ZERO
    assert v.in_support(SERIES_ZERO)
    assert not v.in_support(t_power(2))
    a = series([(1, 2), (2, 7)])
    assert v.leading_term(a) == t_power(1, 2)
    assert leading_term(a) == t_power(1, 2)


def test_fraction_normalization_and_arithmetic():
    ring = puiseux_fraction_ring()
    q = fraction(t_power(1), series([(0, 2), (1, 1)]))
    # denominator scaled to leading coefficient 1 at order zero
    assert q.den.leading == (Fraction(0), Fraction(1))
    assert q.num == t_power(1, Fraction(1, 2))
    half_t = ring.mul(q, ring.one)
    assert half_t == q
    s = ring.add(q, ring.neg(q))
    assert s.num.is_zero
    v = puiseux_fraction_valuation()
    assert v.v(q) == theta(1)
    assert v.v(v.invert(q)) == theta(-1)
    assert v.v(ring.zero) == THETA_ZERO


def test_fraction_expansion_is_exact_to_the_requested_order():
    v = puiseux_fraction_valuation()
    q = fraction(series([(0, 1), (1, 1)]), series([(0, 1), (1, 2)]))
    out = v.expand(q, 6)
    assert out.den == t_power(0)
    assert out.num == series(
        [(0, 1), (1, -1), (2, 2), (3, -4), (4, 8), (5, -16), (6, 32)]
    )


def test_padic_names_and_orders():
    v = padic_valuation(5)
    assert v.name == "v5.Z"
    assert v.v(50) == theta(2)
    assert v.v(-7) == theta(0)
    vq = padic_valuation(5, on_fractions=True)
    assert vq.name == "v5.Q"
    assert vq.v(Fraction(1, 25)) == theta(-2)


def test_degree_valuation_counts_degrees():
    v = degree_valuation()
    assert degree_monoid().name == "theta-degrees"
    rng_draw = v.ring.domain.draw
    import random

    rng = random.Random(3)
    f = rng_draw(rng)
    g = rng_draw(rng)
    prod = v.ring.mul(f, g)
    if f != v.ring.zero and g != v.ring.zero:
        assert v.v(prod) == v.target.mul(v.v(f), v.v(g))
    assert v.v(v.ring.zero) == v.target.zero


def test_reciprocal_values():
    w = reciprocal_valuation()
    assert w.v(4) == Fraction(1, 4)
    assert w.v(0) == w.target.zero == BOTTOM


def test_lex_pairs_and_the_convex_subgroup():
    a = lex_pair(2, Fraction(-1))
    b = lex_pair(1, Fraction(10))
    assert a != b
    with pytest.raises(Exception):
        lex_pair(0, Fraction(1))
    v = convex_subgroup_valuation()
    one = v.ring.one
    assert v.v(one) == one
    assert v.v(v.ring.add(b, b)) == b  # H is closed under max-lex
    assert v.v(a) == v.target.zero


def test_field_rings():
    f5 = field_ring(char=5)
    assert f5.domain.elements == (0, 1, 2, 3, 4)
    assert f5.mul(3, 4) == 2
    assert f5.neg(2) == 3
    q = field_ring(char=0)
    assert q.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert not q.domain.finite


def test_fraction_repr_hides_a_unit_denominator():
    q = fraction(series([(0, 3)]), t_power(0))
    assert isinstance(q, PuiseuxFraction)
    assert "/" not in repr(q)
