"""Supervaluations, dominance, and transmissions."""

import pytest

from supertrop.domains import Domain, RingOps
from supertrop.equiv_lattice import (
    enumerate_mfce,
    initial_very_strong,
    projection_transmission,
    quotient_superval,
)
from supertrop.fixtures import load_supertropical
from supertrop.instances import (
    leading_power_superval,
    leading_term_superval,
    puiseux_valuation,
    series,
)
from supertrop.reporting import WitnessError
from supertrop.superval import (
    Supervaluation,
    chain,
    check_dominance,
    check_supervaluation,
    check_transmission,
    compose,
    cover_of,
    derive_transmission,
    fiber_contraction,
    identity_transmission,
    initial_cover,
    is_tangibly_additive,
    is_very_strong,
    nu_transmission,
    upward_closure,
)


def identity_superval(u, name="phi_v"):
    """The carrier of a finite supertropical structure, viewed as its own
    supervaluation (the ring ops are the semiring ops; no negation)."""
    ring = RingOps(u.table.names[1] + "-carrier", u.zero, u.one, u.add, u.mul,
                   Domain(elements=tuple(range(u.size))))
    return Supervaluation(name, ring, u, lambda a: a)


def test_initial_cover_of_the_puiseux_valuation():
    val = puiseux_valuation()
    u, phi = initial_cover(val)
    assert u.name == "U(ord.Puiseux(Q))"
    assert phi.name == "phi_ord.Puiseux(Q)"
    rep = check_supervaluation(phi, samples=400)
    assert rep.ok
    assert rep.info["tangible_values"] > 0
    cov = cover_of(phi)
    import random

    rng = random.Random(5)
    for _ in range(40):
        a = val.ring.domain.draw(rng)
        if a != val.ring.zero:
            assert cov.v(a) == val.v(a)
    # the initial cover is not tangibly additive: distinct orders add to a
    # fresh tangible, not to either summand
    assert not is_tangibly_additive(phi, samples=400).ok


def test_leading_term_cover_is_very_strong():
    sv = leading_term_superval()
    assert check_supervaluation(sv, samples=400).ok
    assert is_tangibly_additive(sv, samples=400).ok
    assert is_very_strong(sv, samples=400).ok
    sv2 = leading_power_superval()
    assert check_supervaluation(sv2, samples=400).ok
    assert is_tangibly_additive(sv2, samples=400).ok


def test_initial_cover_dominates_the_leading_term_cover():
    val = puiseux_valuation()
    _, phi = initial_cover(val)
    sv = leading_term_superval()
    rep = check_dominance(phi, sv, samples=600)
    assert rep.ok


def test_very_strong_quotient_construction():
    val = puiseux_valuation()
    ubar, phibar = initial_very_strong(val)
    assert ubar.name.startswith("Ubar(")
    assert check_supervaluation(phibar, samples=300).ok
    assert is_very_strong(phibar, samples=300).ok


def test_derive_transmission_is_the_projection():
    u = load_supertropical("z2")
    phi = identity_superval(u)
    for rel in enumerate_mfce(u):
        psi = quotient_superval(phi, rel)
        alpha = derive_transmission(phi, psi)
        rep = check_transmission(alpha)
        assert rep.ok
        proj = projection_transmission(u, rel)
        for x in range(u.size):
            assert alpha.apply(x) == proj.apply(x)
            assert alpha.apply(phi(x)) == psi(x)


def test_derive_transmission_needs_exhaustive_evidence():
    val = puiseux_valuation()
    _, phi = initial_cover(val)
    sv = leading_term_superval()
    with pytest.raises(WitnessError, match="insufficient evidence"):
        derive_transmission(phi, sv)


def test_compose_with_identity_and_with_nu():
    u = load_supertropical("z4")
    phi = identity_superval(u)
    same = compose(identity_transmission(u), phi)
    ghosted = compose(nu_transmission(u), phi)
    for a in range(u.size):
        assert same(a) == phi(a)
        assert ghosted(a) == u.nu_of(phi(a))
        assert u.is_ghost(ghosted(a)) or u.is_zero(ghosted(a))
    both = chain(nu_transmission(u), identity_transmission(u))
    assert both.apply(u.one) == u.e


def test_transmission_table_misses():
    u = load_supertropical("z2")
    t = identity_transmission(u)
    rep = check_transmission(t)
    assert rep.ok
    assert rep.info["ghost_part_injective"] is True
    assert rep.info["semiring_hom"] is True
    from supertrop.superval import Transmission

    partial = Transmission("partial", u, u, {0: 0})
    with pytest.raises(WitnessError, match="outside the transmission's table"):
        partial.apply(3)


def test_fiber_contraction_keeping_only_e():
    u = load_supertropical("trunc3")
    alpha = fiber_contraction(u, lambda m: m == u.e)
    rep = check_transmission(alpha)
    assert rep.ok
    # fibers over e stay put, everything else is ghosted
    th = u.table.index("th")
    assert alpha.apply(u.one) == u.one
    assert alpha.apply(th) == u.nu_of(th)


def test_fiber_contraction_preconditions():
    u = load_supertropical("trunc3")
    with pytest.raises(WitnessError, match="ghost unit e must lie in L"):
        fiber_contraction(u, lambda m: m == u.table.index("e*th"))
    keep = lambda m: m in (u.e, u.table.index("e*th^2"))
    with pytest.raises(WitnessError, match="escapes"):
        fiber_contraction(u, keep)


def test_fiber_contraction_needs_a_closed_l():
    # L = {e, e*th} passes the escape precondition but is not itself closed,
    # and the resulting map is not multiplicative
    u = load_supertropical("trunc3")
    keep = lambda m: m in (u.e, u.table.index("e*th"))
    alpha = fiber_contraction(u, keep)
    rep = check_transmission(alpha)
    assert not rep.ok
    assert rep.witnesses_for("TM3")


def test_upward_closure_of_the_ghost_unit():
    u = load_supertropical("trunc3")
    keep = upward_closure(u, [u.e])
    assert all(keep(m) for m in u.ghosts)
    alpha = fiber_contraction(u, keep)
    for x in range(u.size):
        assert alpha.apply(x) == x
