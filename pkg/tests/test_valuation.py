"""m-valuations: axioms, strictness, strength, insensitivity, dominance."""

from fractions import Fraction

import pytest

from supertrop.core_order import THETA_ONE, THETA_ZERO, theta, theta_semiring
from supertrop.fixtures import BUILDERS, load_supertropical
from supertrop.instances import (
    convex_subgroup_valuation,
    degree_valuation,
    padic_valuation,
    puiseux_valuation,
    reciprocal_valuation,
)
from supertrop.reporting import WitnessError
from supertrop.valuation import (
    MValuationInstance,
    check_mvaluation,
    dominates_mval,
    gamma_of,
    is_insensitive,
    is_strict,
    is_strong,
    nu_valuation,
    support,
)


def test_padic_axioms_and_strength():
    v = padic_valuation(2)
    rep = check_mvaluation(v)
    assert rep.ok
    assert rep.checked == ["V1: v(0)=0", "V2: v(1)=1", "V3: multiplicative",
                           "V4: subadditive"]
    assert is_strong(v).ok


def test_padic_fails_strictness_at_the_documented_pair():
    v = padic_valuation(2)
    assert not is_strict(v).ok
    # 1 + (-1) = 0 while max(v(1), v(-1)) = 1
    assert v.v(v.ring.add(1, -1)) == THETA_ZERO
    assert v.target.add(v.v(1), v.v(-1)) == THETA_ONE
    assert v.v(12) == theta(2)
    assert v.v(-12) == theta(2)


def test_padic_on_fractions():
    v = padic_valuation(3, on_fractions=True)
    assert check_mvaluation(v).ok
    assert v.v(Fraction(2, 9)) == theta(-2)
    assert is_strong(v).ok


def test_reciprocal_fails_the_strong_rule_at_one_two():
    w = reciprocal_valuation()
    assert check_mvaluation(w).ok
    assert not is_strong(w).ok
    # v(1) = 1 and v(2) = 1/2 differ, yet v(3) = 1/3, not the max
    assert w.v(w.ring.add(1, 2)) == Fraction(1, 3)
    assert w.target.add(w.v(1), w.v(2)) == Fraction(1)


def test_strong_instances():
    for v in (puiseux_valuation(), degree_valuation()):
        assert check_mvaluation(v, samples=300).ok, v.name
        assert is_strong(v, samples=300).ok, v.name
        assert is_insensitive(v, samples=300).ok, v.name


def test_convex_subgroup_valuation_is_sensitive_to_its_support():
    import random

    v = convex_subgroup_valuation()
    assert check_mvaluation(v).ok
    rep = is_insensitive(v)
    assert not rep.ok
    assert rep.info["support_nontrivial"] is True
    assert rep.witnesses_for("insensitive")
    assert support(v).description
    # an element above H swamps the unit of H under max-lex addition
    c = v.support_sample(random.Random(0))
    assert v.in_support(c)
    one = v.ring.one
    assert v.v(one) != v.target.zero
    assert v.v(v.ring.add(one, c)) == v.target.zero


def test_nu_of_a_fixture_is_a_strict_valuation():
    u = load_supertropical("z4")
    v = nu_valuation(u)
    rep = check_mvaluation(v)
    assert rep.ok and rep.mode == "exhaustive"
    strict = is_strict(v)
    assert strict.ok and strict.mode == "exhaustive"


def test_support_views():
    v = padic_valuation(2)
    sup = support(v)
    assert sup.contains(0)
    assert not sup.contains(3)
    vp = puiseux_valuation()
    assert support(vp).description == "only the zero series"


def squared(v):
    m = theta_semiring()
    return MValuationInstance(
        name=v.name + "^2",
        ring=v.ring,
        target=m,
        v=lambda a: m.mul(v.v(a), v.v(a)),
    )


def test_gamma_extraction_for_a_dominated_valuation():
    v = padic_valuation(2)
    w = squared(v)
    assert check_mvaluation(w).ok
    dom = dominates_mval(v, w)
    assert dom.ok
    assert dom.info.get("criterion_agrees") is True
    gamma = gamma_of(v, w, samples=400)
    for a in (1, 2, 12, -40, 96):
        assert gamma.apply(v.v(a)) == w.v(a)
    with pytest.raises(WitnessError, match="value outside the enumerated image"):
        gamma.apply(theta(Fraction(997, 3)))


def test_gamma_rejects_an_order_reversing_target():
    v = padic_valuation(2)
    m = theta_semiring()
    w = MValuationInstance(
        name="v2.flip",
        ring=v.ring,
        target=m,
        v=lambda a: THETA_ZERO if a == 0 else m.inv(v.v(a)),
    )
    with pytest.raises(WitnessError):
        gamma_of(v, w, samples=400)
