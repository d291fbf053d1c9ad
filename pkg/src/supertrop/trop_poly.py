"""Sparse polynomials over exact semirings, tropicalization, and corner loci.

A polynomial is a canonical association multidegree -> nonzero coefficient;
all arithmetic goes through an ops object (RingOps, BipotentSemiring, or a
supertropical structure), so the same representation serves R[lambda],
M[lambda], and U[lambda]. Tropicalization maps coefficients through v or phi
termwise; the corner locus of a tropical polynomial collects the points
where the monomial maximum is attained at least twice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable, Optional

from .core_order import BipotentSemiring, FiniteSemiringTable
from .domains import Domain, RingOps, iter_tuples
from .reporting import Checker, Report, WitnessError, exhaustive, sampled
from .supertropical import FiniteSupertropical, ghost, nu_value
from .superval import Supervaluation, check_supervaluation
from .valuation import MValuationInstance


def _term_key(deg: tuple) -> tuple:
    return (sum(deg), deg)


@dataclass(frozen=True)
class Polynomial:
    """Terms sorted graded-lex descending; no zero coefficients stored."""

    nvars: int
    terms: tuple[tuple[tuple[int, ...], Any], ...]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(d) for d, _ in self.terms), default=0)

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        parts = []
        for deg, c in self.terms:
            mono = "*".join(
                f"x{i + 1}" if p == 1 else f"x{i + 1}^{p}"
                for i, p in enumerate(deg)
                if p
            )
            parts.append(f"{c!r}*{mono}" if mono else repr(c))
        return "Poly(" + " + ".join(parts) + ")"


def poly(ops, nvars: int, items) -> Polynomial:
    """Canonicalize (degree, coefficient) pairs: merge duplicates, drop zeros."""
    acc: dict[tuple, Any] = {}
    for deg, c in items:
        deg = tuple(int(p) for p in deg)
        if len(deg) != nvars or any(p < 0 for p in deg):
            raise WitnessError("bad multidegree", (deg,))
        acc[deg] = ops.add(acc[deg], c) if deg in acc else c
    terms = tuple(
        (deg, c)
        for deg, c in sorted(acc.items(), key=lambda t: _term_key(t[0]), reverse=True)
        if c != ops.zero
    )
    return Polynomial(nvars, terms)


def zero_poly(nvars: int) -> Polynomial:
    return Polynomial(nvars, ())


def const_poly(ops, nvars: int, c) -> Polynomial:
    return poly(ops, nvars, [((0,) * nvars, c)])


def monomial(ops, nvars: int, deg, c) -> Polynomial:
    return poly(ops, nvars, [(tuple(deg), c)])


def variable(ops, nvars: int, i: int) -> Polynomial:
    deg = tuple(1 if j == i else 0 for j in range(nvars))
    return monomial(ops, nvars, deg, ops.one)


def p_add(ops, f: Polynomial, g: Polynomial) -> Polynomial:
    return poly(ops, f.nvars, list(f.terms) + list(g.terms))


def p_mul(ops, f: Polynomial, g: Polynomial) -> Polynomial:
    items = []
    for di, ci in f.terms:
        for dj, cj in g.terms:
            items.append((tuple(a + b for a, b in zip(di, dj)), ops.mul(ci, cj)))
    return poly(ops, f.nvars, items)


def p_neg(ring: RingOps, f: Polynomial) -> Polynomial:
    return Polynomial(f.nvars, tuple((d, ring.neg(c)) for d, c in f.terms))


def random_poly(ring, nvars: int, rng: random.Random, degree_bound: int = 4,
                max_terms: int = 6) -> Polynomial:
    items = []
    for _ in range(rng.randint(1, max_terms)):
        deg = [0] * nvars
        for _ in range(rng.randint(0, degree_bound)):
            deg[rng.randrange(nvars)] += 1
        items.append((tuple(deg), ring.domain.draw(rng)))
    return poly(ring, nvars, items)


def polynomial_ring(ring: RingOps, nvars: int, degree_bound: int = 4,
                    max_terms: int = 6) -> RingOps:
    """R[x1..xn] as a RingOps whose domain samples bounded random polynomials."""

    def sample(rng: random.Random) -> Polynomial:
        return random_poly(ring, nvars, rng, degree_bound, max_terms)

    return RingOps(
        name=f"{ring.name}[x1..x{nvars}]",
        zero=zero_poly(nvars),
        one=const_poly(ring, nvars, ring.one),
        add=lambda f, g: p_add(ring, f, g),
        mul=lambda f, g: p_mul(ring, f, g),
        domain=Domain(sample=sample),
        neg=None if ring.neg is None else (lambda f: p_neg(ring, f)),
    )


def coeff_map(fn: Callable, f: Polynomial, zero) -> Polynomial:
    """Apply fn to every coefficient, dropping terms that land on zero."""
    return Polynomial(
        f.nvars, tuple((d, fn(c)) for d, c in f.terms if fn(c) != zero)
    )


def v_tilde(val: MValuationInstance) -> Callable[[Polynomial], Polynomial]:
    """Coefficientwise v: R[x] -> M[x]."""
    return lambda f: coeff_map(val.v, f, val.target.zero)


def phi_tilde(sv: Supervaluation) -> Callable[[Polynomial], Polynomial]:
    """Coefficientwise phi: R[x] -> U[x]."""
    return lambda f: coeff_map(sv.phi, f, sv.target.zero)


def evaluate(ops, f: Polynomial, point: tuple):
    """The evaluation map at `point`, computed in ops' arithmetic."""
    if len(point) != f.nvars:
        raise WitnessError("arity mismatch", (f.nvars, len(point)))
    total = ops.zero
    for deg, c in f.terms:
        acc = c
        for a, p in zip(point, deg):
            for _ in range(p):
                acc = ops.mul(acc, a)
        total = ops.add(total, acc)
    return total


# ---------------------------------------------------------------------------
# Ghost-surpassing and upper-bound relations.

def gs(u, x, y) -> bool:
    """x surpasses y: x = y + z for some ghost-or-zero z.

    Case analysis: zero x needs y = 0; tangible x needs x = y; ghost x needs
    its shadow to be at least y's.
    """
    if u.is_zero(x):
        return u.is_zero(y)
    if u.is_tangible(x):
        return x == y
    return u.ghost_le(nu_value(u, y), nu_value(u, x))


def ub(t: FiniteSemiringTable, y: int, x: int) -> bool:
    """y surpasses x additively: some a has x + a = y (finite scan)."""
    return any(t.add(x, a) == y for a in range(t.size))


def check_ub_semiring(t: FiniteSemiringTable) -> Report:
    """The upper-bound law: x + a + b = x forces x + a = x."""
    c = Checker(exhaustive())
    for x in range(t.size):
        for a in range(t.size):
            for b in range(t.size):
                if t.add(t.add(x, a), b) == x:
                    c.expect(
                        "upper bound",
                        t.add(x, a) == x,
                        (t.name(x), t.name(a), t.name(b)),
                    )
    return c.report()


# ---------------------------------------------------------------------------
# Corner loci and root sets.

@dataclass(frozen=True)
class CornerReport:
    """Which monomials of a tropical polynomial dominate at a point."""

    point: tuple
    dominating: tuple[tuple[int, ...], ...]
    in_locus: bool
    value: Any = None

    def to_json(self) -> dict:
        return {
            "point": [repr(x) for x in self.point],
            "value": repr(self.value),
            "dominating": [list(d) for d in self.dominating],
            "in_locus": self.in_locus,
        }


def corner_query(m: BipotentSemiring, g: Polynomial, point: tuple) -> CornerReport:
    """Evaluate every monomial at the point; the locus needs a tie at the top.

    Multi-indices outside the support carry the coefficient 0_M, so a
    maximum of 0_M always ties (coordinates with value 0_M are admitted).
    `dominating` lists only support terms attaining the maximum.
    """
    if len(point) != g.nvars:
        raise WitnessError("arity mismatch", (g.nvars, len(point)))
    values = []
    for deg, c in g.terms:
        acc = c
        for a, p in zip(point, deg):
            for _ in range(p):
                acc = m.mul(acc, a)
        values.append((deg, acc))
    if not values:
        return CornerReport(tuple(point), (), True, m.zero)
    best = values[0][1]
    for _, val in values[1:]:
        best = m.add(best, val)
    dominating = tuple(deg for deg, val in values if val == best)
    in_locus = len(dominating) >= 2 or best == m.zero
    return CornerReport(tuple(point), dominating, in_locus, best)


def root_query(u, fU: Polynomial, b: tuple, tangible_point: bool = False) -> bool:
    """Whether b is a root of fU: evaluation lands in the ghost ideal.

    tangible_point additionally restricts b to tangible-or-zero coordinates.
    """
    if tangible_point and not all(u.is_tangible(x) or u.is_zero(x) for x in b):
        return False
    val = evaluate(u, fU, b)
    return u.is_ghost(val) or u.is_zero(val)


# ---------------------------------------------------------------------------
# Tropicalization checks.

def kapranov_gs_check(sv: Supervaluation, f: Polynomial, a: tuple) -> Report:
    """Tropicalization commutes with evaluation up to ghost surpassing:
    evaluating the coefficientwise image at phi(a) surpasses phi(f(a))."""
    u = sv.target
    lhs = evaluate(u, phi_tilde(sv)(f), tuple(sv.phi(x) for x in a))
    rhs = sv.phi(evaluate(sv.ring, f, a))
    c = Checker(exhaustive())
    c.expect("gs tropicalization", gs(u, lhs, rhs), (f, a))
    c.info["lhs"] = repr(lhs)
    c.info["rhs"] = repr(rhs)
    return c.report()


def kapranov_corner_check(val: MValuationInstance, f: Polynomial, a: tuple) -> Report:
    """Values of roots land in the corner locus of the tropicalization."""
    c = Checker(exhaustive())
    is_root = evaluate(val.ring, f, a) == val.ring.zero
    c.expect("a is a root", is_root, (f, a))
    if is_root:
        point = tuple(val.v(x) for x in a)
        rep = corner_query(val.target, v_tilde(val)(f), point)
        c.expect("value in corner locus", rep.in_locus, (f, point))
        c.info["point"] = [repr(x) for x in point]
        c.info["dominating"] = [list(d) for d in rep.dominating]
    return c.report()


def manufactured_root_trial(ring: RingOps, rng: random.Random, nvars: int,
                            degree_bound: int = 4, max_terms: int = 3):
    """A random (f, a) with f(a) = 0 by construction: f = sum g_i (x_i - a_i)."""
    if ring.neg is None:
        raise WitnessError(f"{ring.name} has no subtraction")
    while True:
        a = tuple(ring.domain.draw(rng) for _ in range(nvars))
        f = zero_poly(nvars)
        for i in range(nvars):
            g = random_poly(ring, nvars, rng, max(0, degree_bound - 1), max_terms)
            lin = p_add(
                ring,
                variable(ring, nvars, i),
                const_poly(ring, nvars, ring.neg(a[i])),
            )
            f = p_add(ring, f, p_mul(ring, g, lin))
        if not f.is_zero:
            return f, a


def _ghost_embed(u, m, x):
    """The ghost of u matching the value x of the cover target m."""
    if x == m.zero:
        return u.zero
    if isinstance(u, FiniteSupertropical):
        return x
    return ghost(x)


def tangible_section_cover(u, section: Callable, val: MValuationInstance,
                           samples: int = 400, seed: int = 0) -> Supervaluation:
    """Compose a tangible multiplicative section of nu with v.

    section maps the cover target M into the tangibles of u with
    section(0) = 0, section(1) = 1, multiplicativity, and nu(section(x))
    landing on the ghost matching x; all four are checked on samples before
    the supervaluation is assembled.
    """
    m = val.target
    if section(m.zero) != u.zero:
        raise WitnessError("section must send 0 to 0", (section(m.zero),))
    if section(m.one) != u.one:
        raise WitnessError("section must send 1 to 1", (section(m.one),))
    pairs, _ = iter_tuples(m.domain, 2, samples, seed)
    for x, y in pairs:
        sx = section(x)
        if x != m.zero:
            if not u.is_tangible(sx):
                raise WitnessError("section value not tangible", (x,))
            if nu_value(u, sx) != _ghost_embed(u, m, x):
                raise WitnessError("section is not a section of nu", (x,))
        if section(m.mul(x, y)) != u.mul(sx, section(y)):
            raise WitnessError("section not multiplicative", (x, y))
    return Supervaluation(
        name=f"section.{val.name}",
        ring=val.ring,
        target=u,
        phi=lambda r: section(val.v(r)),
    )


# ---------------------------------------------------------------------------
# iq-valuations and evaluation pushforwards.

def check_iq_valuation(source, target, w: Callable, samples: int = 400,
                       seed: int = 0) -> Report:
    """IQV1-IQV4 into an idempotent semiring.

    The order is x <= y iff x + y = y, which on idempotent targets agrees
    with the additive-witness order. info counts the strictly subadditive
    IQV3 pairs (products can lose terms to cancellation).
    """
    pairs, mode = iter_tuples(source.domain, 2, samples, seed)
    c = Checker(mode)

    def le(x, y):
        return target.add(x, y) == y

    rng = random.Random(seed + 1)
    for _ in range(32):
        x = target.domain.draw(rng)
        c.expect("target idempotent", target.add(x, x) == x, (x,))
    c.expect("IQV1", w(source.zero) == target.zero, (source.zero,))
    c.expect("IQV2", w(source.one) == target.one, (source.one,))
    strict = 0
    for f, g in pairs:
        prod = target.mul(w(f), w(g))
        c.expect("IQV3", le(w(source.mul(f, g)), prod), (f, g))
        if w(source.mul(f, g)) != prod:
            strict += 1
        c.expect("IQV4", le(w(source.add(f, g)), target.add(w(f), w(g))), (f, g))
    c.info["iqv3_strict"] = strict
    return c.report()


def eval_strong_check(val: MValuationInstance, a: tuple, nvars: Optional[int] = None,
                      degree_bound: int = 4, max_terms: int = 6,
                      samples: int = 500, seed: int = 0) -> Report:
    """Evaluation of the tropicalization is a strong, multiplicative m-valuation.

    w(f) = (v applied coefficientwise, then evaluated at a) is checked for
    V1-V4, exact multiplicativity, and the strong rule over sampled pairs of
    polynomials. Needs v strong and a inside the value image for the
    dominating-monomial argument to bite.
    """
    nvars = len(a) if nvars is None else nvars
    if len(a) != nvars:
        raise WitnessError("arity mismatch", (nvars, len(a)))
    ring = polynomial_ring(val.ring, nvars, degree_bound, max_terms)
    m = val.target
    tv = v_tilde(val)

    def w(f: Polynomial):
        return evaluate(m, tv(f), a)

    rng = random.Random(seed)
    c = Checker(sampled(samples))
    c.expect("V1: v(0)=0", w(ring.zero) == m.zero, ())
    c.expect("V2: v(1)=1", w(ring.one) == m.one, ())
    for _ in range(samples):
        f = ring.domain.draw(rng)
        g = ring.domain.draw(rng)
        wf, wg = w(f), w(g)
        c.expect("V3: multiplicative", w(ring.mul(f, g)) == m.mul(wf, wg), (f, g))
        c.expect("V4: subadditive", m.le(w(ring.add(f, g)), m.add(wf, wg)), (f, g))
        if wf != wg:
            c.expect("strong rule", w(ring.add(f, g)) == m.add(wf, wg), (f, g))
    return c.report()


def eval_superval_check(sv: Supervaluation, a: tuple, nvars: Optional[int] = None,
                        degree_bound: int = 4, max_terms: int = 6,
                        samples: int = 400, seed: int = 0) -> Report:
    """Evaluating the coefficientwise phi gives a supervaluation whose cover
    is the ghost-evaluated coefficientwise v, strong when v is."""
    nvars = len(a) if nvars is None else nvars
    u = sv.target
    ring = polynomial_ring(sv.ring, nvars, degree_bound, max_terms)
    tphi = phi_tilde(sv)

    def phi(f: Polynomial):
        return evaluate(u, tphi(f), a)

    pushed = Supervaluation(f"eval.{sv.name}", ring, u, phi)
    rep = check_supervaluation(pushed, samples=samples, seed=seed)
    ghost_point = tuple(nu_value(u, x) for x in a)
    rng = random.Random(seed + 2)
    c = Checker(sampled(samples))
    c.checked.extend(rep.checked)
    c.witnesses.extend(rep.witnesses)
    for _ in range(samples):
        f = ring.domain.draw(rng)
        g = ring.domain.draw(rng)
        nu_f = coeff_map(lambda x: nu_value(u, sv.phi(x)), f, u.zero)
        ghost_f = evaluate(u, nu_f, ghost_point)
        c.expect("covers the ghost evaluation", nu_value(u, phi(f)) == ghost_f, (f,))
        cf, cg = nu_value(u, phi(f)), nu_value(u, phi(g))
        if cf != cg:
            c.expect(
                "strong cover",
                nu_value(u, phi(ring.add(f, g))) == u.add(cf, cg),
                (f, g),
            )
    return c.report()


def semifield_lattice_check(r, samples: int = 1000, seed: int = 0) -> Report:
    """Meet from the harmonic formula on an idempotent semifield.

    x ^ y = xy / (x + y) with 0 ^ y = 0; checks the product identity
    (x v y)(x ^ y) = xy, distributivity of v over ^, and scaling.
    """
    if getattr(r, "inv", None) is None:
        raise WitnessError(f"{r.name} has no inverses")

    def wedge(x, y):
        if x == r.zero or y == r.zero:
            return r.zero
        return r.mul(r.mul(x, y), r.inv(r.add(x, y)))

    triples, mode = iter_tuples(r.domain, 3, samples, seed)
    c = Checker(mode)
    for x, y, z in triples:
        c.expect("wedge idempotent", wedge(x, x) == x, (x,))
        c.expect(
            "product identity",
            r.mul(r.add(x, y), wedge(x, y)) == r.mul(x, y),
            (x, y),
        )
        c.expect(
            "distributive",
            r.add(wedge(x, y), z) == wedge(r.add(x, z), r.add(y, z)),
            (x, y, z),
        )
        c.expect("scaling", r.mul(z, wedge(x, y)) == wedge(r.mul(z, x), r.mul(z, y)), (x, y, z))
    return c.report()
