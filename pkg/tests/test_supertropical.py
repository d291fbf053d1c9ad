"""Supertropical structures: axioms, readdition, ghost ideals."""

import pytest

from supertrop.core_order import (
    FiniteSemiringTable,
    OrderedMonoid,
    check_bipotent,
    check_semiring_axioms,
    theta,
    theta_monoid,
)
from supertrop.domains import Domain
from supertrop.fixtures import BUILDERS, load_supertropical
from supertrop.reporting import WitnessError
from supertrop.supertropical import (
    ZERO,
    check_supertropical_axioms,
    d_of,
    finite_from_json,
    finite_from_table,
    ghost,
    ghost_ideal_semiring,
    materialize,
    readdition_check,
    str_construct,
    tangible,
    tangible_closed_check,
)


def ghost_ties_violator():
    """A valid commutative semiring on {0, 1, e} where 1+1 = e+e = e but
    1+e = 1, so the fibers of x -> ex are not additively coherent."""
    return FiniteSemiringTable(
        names=("0", "1", "e"),
        zero=0,
        one=1,
        add_table=((0, 1, 2), (1, 2, 1), (2, 1, 2)),
        mul_table=((0, 0, 0), (0, 1, 2), (0, 2, 2)),
    )


def test_fixture_tables_are_supertropical():
    for name in sorted(BUILDERS):
        u = load_supertropical(name)
        rep = check_supertropical_axioms(u.table)
        assert rep.ok, name
        assert rep.info["e"] == u.name(u.e)


def test_ghost_ties_failure_is_reported_on_that_pair():
    t = ghost_ties_violator()
    assert check_semiring_axioms(t).ok
    rep = check_supertropical_axioms(t)
    assert not rep.ok
    assert ("1", "e") in rep.witnesses_for("ghost ties")
    with pytest.raises(WitnessError, match="not supertropical: ghost ties"):
        finite_from_table(t)


def test_semiring_failure_short_circuits():
    u = load_supertropical("z2")
    add = [list(row) for row in u.table.add_table]
    add[1][2] = 1  # 1+g = 1 while g+1 stays e
    bad = FiniteSemiringTable(u.table.names, u.table.zero, u.table.one,
                              tuple(tuple(r) for r in add), u.table.mul_table)
    rep = check_supertropical_axioms(bad)
    assert not rep.ok
    assert rep.info.get("semiring_failed") is True
    assert "supertropical" in rep.checked
    assert ("1", "g") in rep.witnesses_for("addition commutative")


def test_z2_shape():
    u = load_supertropical("z2")
    assert u.table.names == ("0", "1", "g", "e")
    assert u.name(u.e) == "e"
    # nu is multiplication by e
    for i in range(u.size):
        assert u.nu_of(i) == u.mul(u.e, i)
    g = u.table.index("g")
    assert u.mul(g, g) == u.one
    assert u.add(u.one, g) == u.e
    assert u.is_tangible(g) and u.is_ghost(u.e) and u.is_zero(u.zero)
    # same tangible fiber, so the sum leaves {a, b}: plain bipotency fails
    rep = check_bipotent(u.table)
    assert not rep.ok
    assert ("1", "g") in rep.witnesses_for("bipotent")


def test_fibers_partition_the_carrier():
    u = load_supertropical("trunc3")
    fibers = u.fibers()
    seen = sorted(i for fiber in fibers.values() for i in fiber)
    assert seen == list(range(1, u.size))
    for m, fiber in fibers.items():
        assert all(u.nu_of(i) == m for i in fiber)


def test_readdition_reconstructs_every_fixture():
    for name in sorted(BUILDERS):
        u = load_supertropical(name)
        rep = readdition_check(u)
        assert rep.ok and rep.mode == "exhaustive", name
        assert "addition reconstructed" in rep.checked


def test_ghost_ideal_is_bipotent():
    for name in sorted(BUILDERS):
        u = load_supertropical(name)
        eu = ghost_ideal_semiring(u)
        assert eu.names[0] == "0"
        assert eu.size == 1 + len(u.ghosts)
        assert check_semiring_axioms(eu).ok
        assert check_bipotent(eu).ok, name


def test_subsemiring_of_a_fixture_is_supertropical():
    # {0, 1, e} inside the Z/2 fixture is closed under both operations
    u = load_supertropical("z2")
    keep = (0, u.one, u.e)
    pos = {x: i for i, x in enumerate(keep)}
    sub = FiniteSemiringTable(
        names=tuple(u.name(x) for x in keep),
        zero=0,
        one=1,
        add_table=tuple(tuple(pos[u.add(a, b)] for b in keep) for a in keep),
        mul_table=tuple(tuple(pos[u.mul(a, b)] for b in keep) for a in keep),
    )
    assert check_supertropical_axioms(sub).ok


def test_json_round_trip_cross_checks_e_and_nu():
    u = load_supertropical("z4")
    doc = u.to_json()
    assert sorted(doc) == ["add", "e", "mul", "names", "nu", "one", "zero"]
    again = finite_from_json(doc)
    assert again.table == u.table and again.e == u.e and again.nu == u.nu
    bad = dict(doc)
    bad["e"] = 1
    with pytest.raises(WitnessError, match="stored e disagrees with 1\\+1"):
        finite_from_json(bad)
    bad = dict(doc)
    bad["nu"] = [0] + [1] * (u.size - 1)
    with pytest.raises(WitnessError, match="stored nu disagrees"):
        finite_from_json(bad)


def test_str_addition_cases():
    s = d_of(theta_monoid())
    a, b = tangible(theta(1)), tangible(theta(2))
    assert s.add(a, a) == ghost(theta(1))  # equal shadows go ghost
    assert s.add(a, b) == a  # theta(1) dominates theta(2)
    assert s.add(a, ghost(theta(1))) == ghost(theta(1))
    assert s.add(a, ghost(theta(2))) == a
    assert s.add(a, ZERO) == a
    assert s.mul(a, b) == tangible(theta(3))
    assert s.mul(a, s.e) == ghost(theta(1))
    assert s.one == tangible(theta(0)) and s.e == ghost(theta(0))
    assert repr(s.e) == "1^nu"


def test_str_construct_validation():
    tm = theta_monoid()
    s = str_construct(tm, tm, lambda x: x)
    assert s.name == "STR(theta-powers,theta-powers)"
    with pytest.raises(WitnessError, match="v\\(1\\) != 1"):
        str_construct(tm, tm, lambda x: theta(1))
    # a truncated chain is not cancellative
    from supertrop.fixtures import chain_monoid

    g = chain_monoid(2)
    with pytest.raises(WitnessError, match="ghost monoid not cancellative"):
        str_construct(g, g, lambda x: x)


def test_materialize_trivial_group():
    triv = OrderedMonoid("triv", 1, lambda a, b: 1, lambda a, b: True,
                         Domain(elements=(1,)))
    fs, elems = materialize(d_of(triv))
    assert fs.table.names == ("0", "1", "1^nu")
    assert check_supertropical_axioms(fs.table).ok
    assert elems[0] == ZERO


def test_tangible_closure_classification():
    closed = {"z2": True, "z4": True, "bool_ghost": True,
              "trunc2": False, "trunc3": False, "trunc3_quotient": False}
    for name, want in closed.items():
        u = load_supertropical(name)
        rep = tangible_closed_check(u)
        assert rep.info["closed"] is want, name
    rep = tangible_closed_check(load_supertropical("trunc2"))
    assert ("th", "th") in rep.witnesses_for("tangibles closed")
