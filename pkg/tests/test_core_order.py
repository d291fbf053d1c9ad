"""Bipotent semirings, theta powers, and finite tables."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from supertrop.core_order import (
    BOTTOM,
    EQUAL,
    FiniteSemiringTable,
    GREATER,
    INCOMPARABLE,
    LESS,
    THETA_ONE,
    THETA_ZERO,
    check_bipotent,
    check_ordered_monoid,
    check_semiring_axioms,
    induced_order,
    monoid_of,
    tg_from_monoid,
    theta,
    theta_monoid,
    theta_semiring,
)
from supertrop.fixtures import chain_monoid, tg_chain_table
from supertrop.reporting import WitnessError

rationals = st.fractions(max_denominator=20)


def z4_ring_table():
    """The ring Z/4 as a table: commutative semiring, nowhere bipotent."""
    return FiniteSemiringTable(
        names=("0", "1", "2", "3"),
        zero=0,
        one=1,
        add_table=tuple(tuple((i + j) % 4 for j in range(4)) for i in range(4)),
        mul_table=tuple(tuple((i * j) % 4 for j in range(4)) for i in range(4)),
    )


@given(rationals, rationals)
def test_theta_multiplication_adds_exponents(p, q):
    m = theta_semiring()
    assert m.mul(theta(p), theta(q)) == theta(p + q)
    assert m.mul(theta(p), THETA_ZERO) == THETA_ZERO


@given(rationals, rationals)
def test_theta_order_reverses_exponents(p, q):
    # theta is a base strictly between 0 and 1, so bigger exponent = smaller
    m = theta_semiring()
    assert m.le(theta(p), theta(q)) == (q <= p)
    assert m.le(THETA_ZERO, theta(p))
    assert m.add(theta(p), theta(q)) == theta(min(p, q))


def test_theta_units_and_inverse():
    m = theta_semiring()
    assert m.one == THETA_ONE == theta(0)
    assert m.zero == THETA_ZERO
    assert m.inv(theta(2)) == theta(-2)
    assert m.mul(theta(Fraction(3, 2)), m.inv(theta(Fraction(3, 2)))) == THETA_ONE
    assert repr(BOTTOM) == "0"
    assert repr(THETA_ZERO) == "0"


def test_theta_monoid_is_ordered():
    assert check_ordered_monoid(theta_monoid()).ok


def test_tg_from_monoid_round_trip():
    # the tangible part of T(G) is G again, order and product included
    g = chain_monoid(3)
    t = tg_from_monoid(g)
    assert t.name == "T(" + g.name + ")"
    back = monoid_of(t)
    assert set(back.domain.elements) == set(g.domain.elements)
    for a in g.domain.elements:
        for b in g.domain.elements:
            assert back.multiply(a, b) == g.multiply(a, b)
            assert back.le(a, b) == g.le(a, b)
    assert check_bipotent_table_like(t)


def check_bipotent_table_like(t):
    els = t.domain.elements
    return all(t.add(a, b) in (a, b) for a in els for b in els)


def test_chain_table_passes_axioms():
    t = tg_chain_table(4)
    assert t.names == ("0", "1", "th", "th^2", "th^3")
    assert check_semiring_axioms(t).ok
    rep = check_bipotent(t)
    assert rep.ok and rep.mode == "exhaustive"


def test_induced_order_on_a_chain():
    t = tg_chain_table(3)
    one, th = t.index("1"), t.index("th")
    assert induced_order(t, th, one) == LESS
    assert induced_order(t, one, th) == GREATER
    assert induced_order(t, th, th) == EQUAL
    # exhaustive compatibility with both operations
    n = t.size
    for a in range(n):
        for b in range(n):
            assert induced_order(t, a, b) != INCOMPARABLE
            if induced_order(t, a, b) == LESS:
                for c in range(n):
                    assert induced_order(t, t.mul(a, c), t.mul(b, c)) != GREATER
                    assert induced_order(t, t.add(a, c), t.add(b, c)) != GREATER


def test_induced_order_incomparable_without_bipotency():
    t = z4_ring_table()
    assert check_semiring_axioms(t).ok
    rep = check_bipotent(t)
    assert not rep.ok
    assert ("1", "1") in rep.witnesses_for("bipotent")
    assert induced_order(t, 1, 2) == INCOMPARABLE


def test_semiring_checker_reports_broken_commutativity():
    t = z4_ring_table()
    mul = [list(row) for row in t.mul_table]
    mul[1][2] = 3
    bad = FiniteSemiringTable(t.names, t.zero, t.one, t.add_table,
                              tuple(tuple(r) for r in mul))
    rep = check_semiring_axioms(bad)
    assert not rep.ok
    assert ("1", "2") in rep.witnesses_for("multiplication commutative")


def test_table_json_round_trip():
    t = tg_chain_table(4)
    doc = t.to_json()
    assert sorted(doc) == ["add", "mul", "names", "one", "zero"]
    assert FiniteSemiringTable.from_json(doc) == t
    with pytest.raises(WitnessError, match="malformed table document"):
        FiniteSemiringTable.from_json({"names": ["0"]})


def test_table_validation_rejects_bad_indices():
    with pytest.raises(WitnessError):
        FiniteSemiringTable(
            names=("0", "1"), zero=0, one=1,
            add_table=((0, 1), (1, 9)),
            mul_table=((0, 0), (0, 1)),
        )
