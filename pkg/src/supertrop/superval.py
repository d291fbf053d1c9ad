"""Supervaluations, dominance, and transmissions between supertropical semirings.

A supervaluation refines an m-valuation: instead of landing in the bipotent
value semiring M it lands in a supertropical semiring U whose ghost ideal is
M, so tangible values remember more than their ghost shadow. Transmissions
are the maps between supertropical semirings that push supervaluations
forward; dominance is the order this induces on the covers of a fixed v.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .core_order import BOTTOM, OrderedMonoid, tg_from_monoid
from .domains import Domain, Monoid, RingOps, iter_elements, iter_tuples
from .reporting import Checker, Report, WitnessError, exhaustive
from .supertropical import (
    FiniteSupertropical,
    STRStructure,
    ZERO,
    ghost,
    ghost_ideal_semiring,
    nu_value,
    tangible,
)
from .valuation import MValuationInstance

SupertropicalLike = Union[STRStructure, FiniteSupertropical]


@dataclass(frozen=True)
class Supervaluation:
    """A map phi from a ring into a supertropical semiring U.

    Axioms: SV1 phi(0) = 0, SV2 phi(1) = 1, SV3 phi(ab) = phi(a)phi(b),
    SV4 e phi(a+b) <= e(phi(a) + phi(b)). The composite nu . phi is then an
    m-valuation into the ghost ideal, the cover of phi.
    """

    name: str
    ring: RingOps
    target: SupertropicalLike
    phi: Callable[[object], object]

    def __call__(self, a):
        return self.phi(a)

    def cover_value(self, a):
        """Ghost shadow of phi(a), i.e. nu(phi(a))."""
        return nu_value(self.target, self.phi(a))


def cover_of(sv: Supervaluation, name: Optional[str] = None) -> MValuationInstance:
    """The m-valuation v = nu . phi covered by the supervaluation sv."""
    u = sv.target
    if isinstance(u, FiniteSupertropical):
        target = ghost_ideal_semiring(u)

        def v(a):
            return u.nu_of(sv.phi(a))

    else:
        target = tg_from_monoid(u.ghosts, check=False)

        def v(a):
            m = u.ghost_value(sv.phi(a))
            return BOTTOM if m is None else m

    return MValuationInstance(
        name=name or ("cover of " + sv.name),
        ring=sv.ring,
        target=target,
        v=v,
    )


def check_supervaluation(sv: Supervaluation, samples: int = 1000, seed: int = 0) -> Report:
    """Verify SV1-SV4, exhaustively when the ring is finite."""
    u = sv.target
    ring = sv.ring
    phi = sv.phi
    pairs, mode = iter_tuples(ring.domain, 2, samples, seed)
    c = Checker(mode)
    c.expect("SV1", u.is_zero(phi(ring.zero)), (ring.zero,))
    c.expect("SV2", phi(ring.one) == u.one, (ring.one,))
    for a, b in pairs:
        pa, pb = phi(a), phi(b)
        c.expect("SV3", u.mul(pa, pb) == phi(ring.mul(a, b)), (a, b))
        lhs = nu_value(u, phi(ring.add(a, b)))
        rhs = nu_value(u, u.add(pa, pb))
        c.expect("SV4", u.ghost_le(lhs, rhs), (a, b))
    n_tangible = n_ghost = 0
    for a in iter_elements(ring.domain, min(samples, 400), seed + 1)[0]:
        x = phi(a)
        if u.is_tangible(x):
            n_tangible += 1
        elif u.is_ghost(x):
            n_ghost += 1
    c.info["tangible_values"] = n_tangible
    c.info["ghost_values"] = n_ghost
    return c.report()


def initial_cover(val: MValuationInstance, samples: int = 400, seed: int = 0):
    """Build the initial supervaluation covering val.

    Tangibles are the ring elements outside the support, ghosts the nonzero
    elements of the value semiring; phi_v sends a to its tangible copy.
    The nonzero-value monoid must be cancellative (checked by scanning).
    """
    ring = val.ring
    supp = val.in_support

    if ring.domain.finite:
        tdom = Domain(elements=tuple(a for a in ring.domain.elements if not supp(a)))
    else:
        tdom = Domain(sample=_reject_sample(ring.domain.draw, supp))
    tangibles = Monoid("tangibles of " + val.name, ring.one, ring.mul, tdom)
    ghosts = _nonzero_value_monoid(val)
    _require_cancellative(ghosts, samples, seed)
    u = STRStructure(
        name="U(" + val.name + ")",
        tangibles=tangibles,
        ghosts=ghosts,
        v=val.v,
    )

    def phi(a):
        return ZERO if supp(a) else tangible(a)

    return u, Supervaluation("phi_" + val.name, ring, u, phi)


def _reject_sample(draw, reject):
    def sample(rng):
        for _ in range(1000):
            a = draw(rng)
            if not reject(a):
                return a
        raise WitnessError("sampler kept hitting the support")

    return sample


def _nonzero_value_monoid(val: MValuationInstance) -> OrderedMonoid:
    m = val.target
    if m.domain.finite:
        dom = Domain(elements=tuple(x for x in m.domain.elements if x != m.zero))
    else:
        def draw(rng):
            for _ in range(1000):
                x = m.domain.draw(rng)
                if x != m.zero:
                    return x
            raise WitnessError("could not sample a nonzero value")

        dom = Domain(sample=draw)
    return OrderedMonoid(m.name + "\\0", m.one, m.mul, m.le, dom)


def _require_cancellative(g: OrderedMonoid, samples: int, seed: int):
    triples, _ = iter_tuples(g.domain, 3, samples, seed)
    for a, x, y in triples:
        if g.multiply(a, x) == g.multiply(a, y) and x != y:
            raise WitnessError("value monoid is not cancellative", (a, x, y))


@dataclass
class DominanceReport:
    """Outcome of checking that phi dominates psi (phi >= psi)."""

    d1: list = field(default_factory=list)
    d2: list = field(default_factory=list)
    d3: list = field(default_factory=list)
    mode: str = ""

    @property
    def ok(self) -> bool:
        return not (self.d1 or self.d2 or self.d3)

    def __repr__(self):
        return f"DominanceReport({'ok' if self.ok else 'failed'}, {self.mode})"


def check_dominance(phi: Supervaluation, psi: Supervaluation,
                    samples: int = 1000, seed: int = 0) -> DominanceReport:
    """D1: phi(a) = phi(b) forces psi(a) = psi(b).
    D2: e phi(a) <= e phi(b) forces e psi(a) <= e psi(b).
    D3: phi(a) ghost or zero forces psi(a) ghost or zero.
    """
    if phi.ring.domain is not psi.ring.domain and phi.ring is not psi.ring:
        raise WitnessError("dominance needs a common ring", (phi.name, psi.name))
    u, w = phi.target, psi.target
    rep = DominanceReport()
    cap = 16
    pairs, mode = iter_tuples(phi.ring.domain, 2, samples, seed)
    rep.mode = mode
    for a, b in pairs:
        pa, pb = phi(a), phi(b)
        qa, qb = psi(a), psi(b)
        if pa == pb and qa != qb and len(rep.d1) < cap:
            rep.d1.append((a, b))
        if u.ghost_le(nu_value(u, pa), nu_value(u, pb)):
            if not w.ghost_le(nu_value(w, qa), nu_value(w, qb)) and len(rep.d2) < cap:
                rep.d2.append((a, b))
    for a in iter_elements(phi.ring.domain, samples, seed + 1)[0]:
        pa, qa = phi(a), psi(a)
        if (u.is_ghost(pa) or u.is_zero(pa)) and not (w.is_ghost(qa) or w.is_zero(qa)):
            if len(rep.d3) < cap:
                rep.d3.append((a,))
    return rep


@dataclass(frozen=True)
class Transmission:
    """A map alpha between supertropical semirings satisfying TM1-TM5.

    TM1 alpha(0) = 0, TM2 alpha(1) = 1, TM3 multiplicative, TM4 alpha(e) = e,
    TM5 additive on the ghost ideal. Multiplicative everywhere, additive only
    on ghosts; pushing a supervaluation forward along alpha keeps SV1-SV4.
    """

    name: str
    source: SupertropicalLike
    target: SupertropicalLike
    mapping: object

    def apply(self, x):
        if callable(self.mapping):
            return self.mapping(x)
        try:
            return self.mapping[x]
        except KeyError:
            raise WitnessError("element outside the transmission's table", (x,)) from None

    __call__ = apply

    def ghost_part(self):
        """The restriction to the ghost ideal, as (m, alpha(m)) pairs."""
        return [(x, self.apply(x)) for x in _ghost_ideal_elements(self.source)]


def _carrier_pairs(u, samples=1000, seed=0):
    if isinstance(u, FiniteSupertropical):
        idx = range(u.size)
        return itertools.product(idx, idx), exhaustive()
    return iter_tuples(u.carrier, 2, samples, seed)


def _ghost_ideal_elements(u, samples=200, seed=3):
    if isinstance(u, FiniteSupertropical):
        return list(u.ghost_ideal)
    out = [ZERO]
    out.extend(ghost(m) for m in iter_elements(u.ghosts.domain, samples, seed)[0])
    return out


def check_transmission(t: Transmission, samples: int = 1000, seed: int = 0) -> Report:
    """Verify TM1-TM5 plus the three unconditional additivity facts.

    Every transmission is additive on pairs with equal ghost shadows and on
    pairs whose image sum is tangible; one with an injective ghost part is
    additive everywhere (recorded in info["semiring_hom"]).
    """
    u, w = t.source, t.target
    pairs, mode = _carrier_pairs(u, samples, seed)
    c = Checker(mode)
    c.expect("TM1", w.is_zero(t.apply(u.zero)), (u.zero,))
    c.expect("TM2", t.apply(u.one) == w.one, (u.one,))
    c.expect("TM4", t.apply(u.e) == w.e, (u.e,))
    ghost_collisions = set()
    additive_everywhere = True
    for x, y in pairs:
        ax, ay = t.apply(x), t.apply(y)
        c.expect("TM3", w.mul(ax, ay) == t.apply(u.mul(x, y)), (x, y))
        s = w.add(ax, ay)
        axy = t.apply(u.add(x, y))
        x_ghostly = u.is_ghost(x) or u.is_zero(x)
        y_ghostly = u.is_ghost(y) or u.is_zero(y)
        if x_ghostly and y_ghostly:
            c.expect("TM5", s == axy, (x, y))
        if nu_value(u, x) == nu_value(u, y):
            c.expect("equal shadows additive", s == axy, (x, y))
        if w.is_tangible(s):
            c.expect("tangible sum additive", s == axy, (x, y))
        if s != axy:
            additive_everywhere = False
        gx, gy = nu_value(u, x), nu_value(u, y)
        if gx != gy and t.apply(gx) == t.apply(gy):
            ghost_collisions.add((gx, gy))
    ghost_injective = not ghost_collisions
    c.expect(
        "injective ghost part forces additivity",
        additive_everywhere or not ghost_injective,
        (),
    )
    c.info["ghost_part_injective"] = ghost_injective
    c.info["semiring_hom"] = additive_everywhere
    return c.report()


def derive_transmission(phi: Supervaluation, psi: Supervaluation,
                        samples: int = 2000, seed: int = 0) -> Transmission:
    """Extract the alpha with alpha . phi = psi witnessing dominance.

    Needs an exhaustive dominance pass (finite ring) and phi surjective in
    the sense that every element of U is phi(a), e phi(a), or zero.
    """
    dom = check_dominance(phi, psi, samples, seed)
    if not dom.ok:
        raise WitnessError("phi does not dominate psi", ((dom.d1 + dom.d2 + dom.d3)[0],))
    if dom.mode != exhaustive():
        raise WitnessError("insufficient evidence: dominance was only sampled")
    u, w = phi.target, psi.target
    mapping = {u.zero: w.zero}
    for a in phi.ring.domain.elements:
        pa, qa = phi(a), psi(a)
        mapping[pa] = qa
        mapping[nu_value(u, pa)] = nu_value(w, qa)
    missing = [x for x in _all_elements(u) if x not in mapping]
    if missing:
        raise WitnessError("phi does not reach these elements", tuple(missing[:8]))
    return Transmission(f"{phi.name} -> {psi.name}", u, w, mapping)


def _all_elements(u):
    if isinstance(u, FiniteSupertropical):
        return list(range(u.size))
    if u.carrier.finite:
        return list(u.carrier.elements)
    raise WitnessError("cannot enumerate an infinite carrier", (u.name,))


def compose(alpha: Transmission, sv: Supervaluation) -> Supervaluation:
    """Push a supervaluation forward along a transmission."""
    return Supervaluation(
        name=f"{alpha.name} . {sv.name}",
        ring=sv.ring,
        target=alpha.target,
        phi=lambda a: alpha.apply(sv.phi(a)),
    )


def chain(beta: Transmission, alpha: Transmission) -> Transmission:
    """The composite transmission beta . alpha."""
    return Transmission(
        name=f"{beta.name} . {alpha.name}",
        source=alpha.source,
        target=beta.target,
        mapping=lambda x: beta.apply(alpha.apply(x)),
    )


def identity_transmission(u: SupertropicalLike) -> Transmission:
    return Transmission("id", u, u, lambda x: x)


def nu_transmission(u: SupertropicalLike) -> Transmission:
    """The ghost map of U as a transmission U -> U."""
    return Transmission("nu", u, u, lambda x: nu_value(u, x))


def fiber_contraction(u: SupertropicalLike, keep: Callable[[object], bool],
                      samples: int = 400, seed: int = 0) -> Transmission:
    """Transmission fixing elements whose ghost shadow satisfies keep.

    keep picks a subset L of the nonzero ghosts; alpha fixes the fibers over
    L and ghosts everything else. Requires e in L and M(M\\L) inside M\\L,
    both checked here; violations raise WitnessError.
    """
    if not keep(u.e):
        raise WitnessError("the ghost unit e must lie in L", (u.e,))
    ghosts = [m for m in _ghost_ideal_elements(u, samples, seed) if not u.is_zero(m)]
    outside = [m for m in ghosts if not keep(m)]
    for m in ghosts:
        for n in outside:
            prod = u.mul(m, n)
            if not u.is_zero(prod) and keep(prod):
                raise WitnessError("M(M\\L) escapes M\\L", (m, n, prod))

    def alpha(x):
        if u.is_zero(x) or keep(nu_value(u, x)):
            return x
        return nu_value(u, x)

    kept = len(ghosts) - len(outside)
    return Transmission(f"contract[{kept}/{len(ghosts)} ghosts kept]", u, u, alpha)


def upward_closure(u: SupertropicalLike, generators) -> Callable[[object], bool]:
    """keep-predicate for L = the upward closure of some nonzero ghosts."""
    gens = tuple(generators)

    def keep(x):
        return any(u.ghost_le(h, x) for h in gens)

    return keep


def is_tangibly_additive(sv: Supervaluation, samples: int = 1000, seed: int = 0) -> Report:
    """SV5: phi(a) + phi(b) tangible forces phi(a) + phi(b) = phi(a+b)."""
    u = sv.target
    pairs, mode = iter_tuples(sv.ring.domain, 2, samples, seed)
    c = Checker(mode)
    c.note("SV5")
    for a, b in pairs:
        s = u.add(sv.phi(a), sv.phi(b))
        if u.is_tangible(s):
            c.expect("SV5", s == sv.phi(sv.ring.add(a, b)), (a, b))
    return c.report()


def is_very_strong(sv: Supervaluation, samples: int = 1000, seed: int = 0) -> Report:
    """SV5*: e phi(a) strictly below e phi(b) forces phi(a+b) = phi(b)."""
    u = sv.target
    pairs, mode = iter_tuples(sv.ring.domain, 2, samples, seed)
    c = Checker(mode)
    c.note("SV5*")
    for a, b in pairs:
        na, nb = nu_value(u, sv.phi(a)), nu_value(u, sv.phi(b))
        if na != nb and u.ghost_le(na, nb):
            c.expect("SV5*", sv.phi(sv.ring.add(a, b)) == sv.phi(b), (a, b))
    return c.report()
