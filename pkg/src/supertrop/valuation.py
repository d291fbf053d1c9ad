"""m-valuations into bipotent semirings: axiom checkers V1-V5, the strong
rule, support and sensitivity, dominance, and the induced map gamma.

An instance packages the domain semiring, the target, the map, and optional
oracles (leading terms, unit sampling, truncated expansion) that the
leading-term constructions need. Checks state whether they ran exhaustively or
on a seeded sample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .core_order import BipotentSemiring
from .domains import Domain, RingOps, iter_elements, iter_tuples
from .reporting import Checker, Report, WitnessError, sampled
from .supertropical import FiniteSupertropical, ghost_ideal_semiring

ValuationReport = Report

DEFAULT_SAMPLES = 1000


@dataclass(frozen=True)
class MValuationInstance:
    name: str
    ring: RingOps
    target: BipotentSemiring
    v: Callable[[Any], Any]
    # optional instance oracles
    support_sample: Optional[Callable[[random.Random], Any]] = None
    support_description: Optional[str] = None
    leading_term: Optional[Callable[[Any], Any]] = None
    sv_equiv: Optional[Callable[[Any, Any], bool]] = None
    unit_sample: Optional[Callable[[random.Random], Any]] = None
    invert: Optional[Callable[[Any], Any]] = None
    expand: Optional[Callable[[Any, int], Any]] = None

    def in_support(self, x) -> bool:
        return self.v(x) == self.target.zero


@dataclass(frozen=True)
class SupportView:
    """Membership test for v^-1(0), plus an explicit description when known."""

    contains: Callable[[Any], bool]
    description: Optional[str] = None
    sample: Optional[Callable[[random.Random], Any]] = None


def support(v: MValuationInstance) -> SupportView:
    return SupportView(v.in_support, v.support_description, v.support_sample)


def check_mvaluation(v: MValuationInstance, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> ValuationReport:
    pairs, mode = iter_tuples(v.ring.domain, 2, samples, seed)
    c = Checker(mode)
    c.expect("V1: v(0)=0", v.v(v.ring.zero) == v.target.zero, (v.ring.zero,))
    c.expect("V2: v(1)=1", v.v(v.ring.one) == v.target.one, (v.ring.one,))
    M = v.target
    for x, y in pairs:
        c.expect("V3: multiplicative", v.v(v.ring.mul(x, y)) == M.mul(v.v(x), v.v(y)), (x, y))
        c.expect("V4: subadditive", M.le(v.v(v.ring.add(x, y)), M.add(v.v(x), v.v(y))), (x, y))
    return c.report()


def is_strict(v: MValuationInstance, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> ValuationReport:
    pairs, mode = iter_tuples(v.ring.domain, 2, samples, seed)
    c = Checker(mode)
    for x, y in pairs:
        c.expect(
            "V5: additive",
            v.v(v.ring.add(x, y)) == v.target.add(v.v(x), v.v(y)),
            (x, y),
        )
    return c.report()


def is_strong(v: MValuationInstance, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> ValuationReport:
    pairs, mode = iter_tuples(v.ring.domain, 2, samples, seed)
    c = Checker(mode)
    c.note("strong rule")
    for x, y in pairs:
        if v.v(x) != v.v(y):
            c.expect(
                "strong rule",
                v.v(v.ring.add(x, y)) == v.target.add(v.v(x), v.v(y)),
                (x, y),
            )
    return c.report()


def _support_stream(v: MValuationInstance, samples: int, seed: int):
    """Support elements: the dedicated sampler if present, else filtering."""
    if v.support_sample is not None:
        rng = random.Random(seed)
        return [v.support_sample(rng) for _ in range(max(1, samples // 4))], sampled(samples)
    elems, mode = iter_elements(v.ring.domain, samples, seed)
    return [z for z in elems if v.in_support(z)], mode


def is_insensitive(v: MValuationInstance, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> ValuationReport:
    zs, _ = _support_stream(v, samples, seed + 1)
    xs, mode = iter_elements(v.ring.domain, samples, seed)
    c = Checker(mode)
    c.note("insensitive")
    for x in xs:
        for z in zs[:16]:
            c.expect("insensitive", v.v(v.ring.add(x, z)) == v.v(x), (x, z))
    c.info["support_nontrivial"] = any(z != v.ring.zero for z in zs)
    return c.report()


def dominates_mval(v: MValuationInstance, w: MValuationInstance,
                   samples: int = DEFAULT_SAMPLES, seed: int = 0) -> ValuationReport:
    """v dominates w: v(a) <= v(b) implies w(a) <= w(b).

    When both instances are strong, the weaker equality criterion
    (v(a)=v(b) => w(a)=w(b)) is evaluated alongside and its agreement with
    dominance is recorded in info["criterion_agrees"].
    """
    pairs, mode = iter_tuples(v.ring.domain, 2, samples, seed)
    pairs = list(pairs)
    c = Checker(mode)
    c.note("dominance")
    criterion_ok = True
    for a, b in pairs:
        if v.target.le(v.v(a), v.v(b)):
            c.expect("dominance", w.target.le(w.v(a), w.v(b)), (a, b))
        if v.v(a) == v.v(b) and w.v(a) != w.v(b):
            criterion_ok = False
    both_strong = is_strong(v, samples=samples, seed=seed + 7).ok and is_strong(w, samples=samples, seed=seed + 8).ok
    if both_strong:
        c.info["equality_criterion"] = criterion_ok
        c.info["criterion_agrees"] = criterion_ok == c.report().ok
    return c.report()


@dataclass
class GammaMap:
    """gamma_{w,v}: the unique map with w = gamma o v, as a finite association
    over the image of v enumerated from the sample stream."""

    mapping: dict
    report: Report

    def apply(self, m):
        if m not in self.mapping:
            raise WitnessError("value outside the enumerated image", (m,))
        return self.mapping[m]


def gamma_of(v: MValuationInstance, w: MValuationInstance,
             samples: int = DEFAULT_SAMPLES, seed: int = 0) -> GammaMap:
    dom = dominates_mval(v, w, samples=samples, seed=seed)
    if not dom.ok:
        axiom, wit = dom.witnesses[0]
        raise WitnessError("dominance fails", wit)
    elems, mode = iter_elements(v.ring.domain, samples, seed)
    mapping: dict = {}
    origin: dict = {}
    c = Checker(mode)
    c.note("well-defined")
    for a in elems:
        m = v.v(a)
        if m in mapping:
            c.expect("well-defined", mapping[m] == w.v(a), (origin[m], a))
        else:
            mapping[m] = w.v(a)
            origin[m] = a
    c.expect("gamma(0)=0", mapping.get(v.target.zero, w.target.zero) == w.target.zero, ())
    c.expect("gamma(1)=1", mapping.get(v.target.one, w.target.one) == w.target.one, ())
    ms = list(mapping)
    for x in ms:
        for y in ms:
            if v.target.mul(x, y) in mapping:
                c.expect(
                    "gamma multiplicative",
                    mapping[v.target.mul(x, y)] == w.target.mul(mapping[x], mapping[y]),
                    (x, y),
                )
            if v.target.le(x, y):
                c.expect("gamma order-preserving", w.target.le(mapping[x], mapping[y]), (x, y))
    rep = c.report()
    if not rep.ok:
        axiom, wit = rep.witnesses[0]
        raise WitnessError(f"gamma construction failed: {axiom}", wit)
    return GammaMap(mapping, rep)


def compose_gamma(gamma: GammaMap, v: MValuationInstance, name: str,
                  target: BipotentSemiring) -> MValuationInstance:
    """gamma o v as a new m-valuation instance."""
    return MValuationInstance(name=name, ring=v.ring, target=target, v=lambda a: gamma.apply(v.v(a)))


def nu_valuation(fs: FiniteSupertropical, name: str = "nu") -> MValuationInstance:
    """The ghost map of a finite fixture, packaged as an m-valuation on it."""
    ring = RingOps(
        name=f"{name}-domain",
        zero=fs.zero,
        one=fs.one,
        add=fs.add,
        mul=fs.mul,
        domain=fs.carrier,
    )
    return MValuationInstance(name=name, ring=ring, target=ghost_ideal_semiring(fs), v=fs.nu_of)
