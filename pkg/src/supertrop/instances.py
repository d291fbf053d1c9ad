"""Concrete exact rings and the valuations that live on them.

Test beds for everything else in the package: finitely supported Puiseux
series with rational exponents (over Q or F_p), their fraction field with
truncated expansion, p-adic values on integers and fractions, the degree
valuation on k[x], the reciprocal valuation on nonnegative rationals, and
the convex-subgroup example whose support is sensitive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .core_order import (
    BOTTOM,
    OrderedMonoid,
    THETA_ZERO,
    ThetaValue,
    theta,
    theta_monoid,
    theta_semiring,
    tg_from_monoid,
)
from .domains import Domain, Monoid, RingOps
from .reporting import WitnessError
from .supertropical import ZERO, d_of, str_construct, tangible
from .superval import Supervaluation
from .valuation import MValuationInstance
from .trop_poly import Polynomial, polynomial_ring


# ---------------------------------------------------------------------------
# Coefficient fields: Q (char 0) or F_p.

def _coeff(c, char: int):
    if char == 0:
        return Fraction(c)
    return int(c) % char


def _coeff_add(x, y, char: int):
    return x + y if char == 0 else (x + y) % char


def _coeff_mul(x, y, char: int):
    return x * y if char == 0 else (x * y) % char


def _coeff_neg(x, char: int):
    return -x if char == 0 else (-x) % char


def _coeff_inv(x, char: int):
    if char == 0:
        return Fraction(1) / x
    return pow(x, char - 2, char)


def _check_char(char: int) -> None:
    if char == 0:
        return
    if char < 2 or any(char % d == 0 for d in range(2, int(char ** 0.5) + 1)):
        raise WitnessError("characteristic must be 0 or prime", (char,))


def field_ring(char: int = 0, span: int = 9) -> RingOps:
    """Q (as Fractions) or F_p, with a bounded sampler."""
    _check_char(char)
    if char == 0:
        return RingOps(
            name="Q",
            zero=Fraction(0),
            one=Fraction(1),
            add=lambda a, b: a + b,
            mul=lambda a, b: a * b,
            domain=Domain(
                sample=lambda rng: Fraction(rng.randint(-span, span), rng.randint(1, 4))
            ),
            neg=lambda a: -a,
        )
    return RingOps(
        name=f"F{char}",
        zero=0,
        one=1,
        add=lambda a, b: (a + b) % char,
        mul=lambda a, b: (a * b) % char,
        domain=Domain(elements=tuple(range(char))),
        neg=lambda a: (-a) % char,
    )


# ---------------------------------------------------------------------------
# Finitely supported Puiseux series.

@dataclass(frozen=True)
class PuiseuxSeries:
    """sum of c * t^q with exact rational exponents, ascending, no zeros."""

    terms: tuple[tuple[Fraction, Any], ...]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def ord(self) -> Optional[Fraction]:
        """Minimal exponent; None is the bottom marker of the zero series."""
        return self.terms[0][0] if self.terms else None

    @property
    def leading(self) -> Optional[tuple[Fraction, Any]]:
        return self.terms[0] if self.terms else None

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for q, c in self.terms:
            if q == 0:
                parts.append(str(c))
            else:
                power = "t" if q == 1 else f"t^({q})" if q.denominator != 1 else f"t^{q}"
                parts.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(parts)


def series(items, char: int = 0) -> PuiseuxSeries:
    """Canonicalize (exponent, coefficient) pairs into a series."""
    _check_char(char)
    acc: dict[Fraction, Any] = {}
    for q, c in items:
        q = Fraction(q)
        c = _coeff(c, char)
        acc[q] = _coeff_add(acc[q], c, char) if q in acc else c
    return PuiseuxSeries(
        tuple((q, c) for q, c in sorted(acc.items()) if c != _coeff(0, char))
    )


SERIES_ZERO = PuiseuxSeries(())


def t_power(q, c=1, char: int = 0) -> PuiseuxSeries:
    return series([(q, c)], char)


def series_add(a: PuiseuxSeries, b: PuiseuxSeries, char: int = 0) -> PuiseuxSeries:
    return series(list(a.terms) + list(b.terms), char)


def series_neg(a: PuiseuxSeries, char: int = 0) -> PuiseuxSeries:
    return PuiseuxSeries(tuple((q, _coeff_neg(c, char)) for q, c in a.terms))


def series_mul(a: PuiseuxSeries, b: PuiseuxSeries, char: int = 0) -> PuiseuxSeries:
    items = []
    for qa, ca in a.terms:
        for qb, cb in b.terms:
            items.append((qa + qb, _coeff_mul(ca, cb, char)))
    return series(items, char)


def leading_term(a: PuiseuxSeries) -> PuiseuxSeries:
    """The monomial at the minimal exponent; 0 for the zero series."""
    return PuiseuxSeries(a.terms[:1])


def ord_of(a: PuiseuxSeries) -> Optional[Fraction]:
    return a.ord


def truncate_series(a: PuiseuxSeries, order) -> PuiseuxSeries:
    order = Fraction(order)
    return PuiseuxSeries(tuple((q, c) for q, c in a.terms if q <= order))


def series_inverse(a: PuiseuxSeries, order, char: int = 0) -> PuiseuxSeries:
    """1/a as a series with exponents <= order (finite by ord(u) > 0)."""
    if a.is_zero:
        raise ZeroDivisionError("zero series has no inverse")
    q0, c0 = a.leading
    scale = t_power(-q0, _coeff_inv(c0, char), char)
    u = series_neg(series_add(series_mul(a, scale, char),
                              series_neg(t_power(0, 1, char), char), char), char)
    # a * scale = 1 - u with ord(u) > 0; invert the geometric series
    total = t_power(0, 1, char)
    power = t_power(0, 1, char)
    bound = Fraction(order) + q0
    while True:
        power = truncate_series(series_mul(power, u, char), bound)
        if power.is_zero:
            break
        total = series_add(total, power, char)
    return truncate_series(series_mul(scale, total, char), Fraction(order))


def _random_series(rng: random.Random, char: int) -> PuiseuxSeries:
    items = []
    for _ in range(rng.randint(0, 4)):
        q = Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3)))
        c = rng.randint(-9, 9) if char == 0 else rng.randint(0, char - 1)
        items.append((q, c))
    return series(items, char)


def puiseux_ring(char: int = 0) -> RingOps:
    _check_char(char)
    label = "Q" if char == 0 else f"F{char}"
    return RingOps(
        name=f"Puiseux({label})",
        zero=SERIES_ZERO,
        one=t_power(0, 1, char),
        add=lambda a, b: series_add(a, b, char),
        mul=lambda a, b: series_mul(a, b, char),
        domain=Domain(sample=lambda rng: _random_series(rng, char)),
        neg=lambda a: series_neg(a, char),
    )


def puiseux_valuation(char: int = 0) -> MValuationInstance:
    """v(a) = theta^ord(a) into the theta-power semifield; strong."""
    ring = puiseux_ring(char)
    return MValuationInstance(
        name=f"ord.{ring.name}",
        ring=ring,
        target=theta_semiring(),
        v=lambda a: THETA_ZERO if a.is_zero else theta(a.ord),
        support_sample=lambda rng: SERIES_ZERO,
        support_description="only the zero series",
        leading_term=leading_term,
    )


def _monomial_monoid(char: int) -> Monoid:
    def sample(rng: random.Random) -> PuiseuxSeries:
        q = Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3)))
        c = rng.randint(1, 9) * rng.choice((1, -1)) if char == 0 else rng.randint(1, char - 1)
        return t_power(q, c, char)

    return Monoid(
        name=f"monomials({'Q' if char == 0 else f'F{char}'})",
        unit=t_power(0, 1, char),
        multiply=lambda a, b: series_mul(a, b, char),
        domain=Domain(sample=sample),
    )


def leading_term_superval(char: int = 0) -> Supervaluation:
    """a maps to its leading term, tangibly, in STR(monomials, theta-powers)."""
    ring = puiseux_ring(char)
    u = str_construct(
        _monomial_monoid(char),
        theta_monoid(),
        lambda m: theta(m.ord),
        name="U(leading-term)",
    )
    return Supervaluation(
        name=f"leadterm.{ring.name}",
        ring=ring,
        target=u,
        phi=lambda a: ZERO if a.is_zero else tangible(leading_term(a)),
    )


def leading_power_superval(char: int = 0) -> Supervaluation:
    """a maps to its leading t-power, tangibly, in D(theta-powers)."""
    ring = puiseux_ring(char)
    return Supervaluation(
        name=f"leadpower.{ring.name}",
        ring=ring,
        target=d_of(theta_monoid()),
        phi=lambda a: ZERO if a.is_zero else tangible(theta(a.ord)),
    )


# ---------------------------------------------------------------------------
# Fractions of Puiseux series, with truncated expansion.

@dataclass(frozen=True)
class PuiseuxFraction:
    """num/den, den normalized to constant term 1 at order zero.

    Equality is structural (no gcd reduction); compare values through sub
    against zero, the valuation, or a truncated expand.
    """

    num: PuiseuxSeries
    den: PuiseuxSeries

    def __repr__(self):
        if self.den == t_power(0, 1):
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"


def fraction(num: PuiseuxSeries, den: PuiseuxSeries, char: int = 0) -> PuiseuxFraction:
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    q0, c0 = den.leading
    scale = t_power(-q0, _coeff_inv(c0, char), char)
    return PuiseuxFraction(series_mul(num, scale, char), series_mul(den, scale, char))


def puiseux_fraction_ring(char: int = 0) -> RingOps:
    _check_char(char)
    one = t_power(0, 1, char)
    label = "Q" if char == 0 else f"F{char}"

    def add(x: PuiseuxFraction, y: PuiseuxFraction) -> PuiseuxFraction:
        return fraction(
            series_add(
                series_mul(x.num, y.den, char),
                series_mul(y.num, x.den, char),
                char,
            ),
            series_mul(x.den, y.den, char),
            char,
        )

    def mul(x: PuiseuxFraction, y: PuiseuxFraction) -> PuiseuxFraction:
        return fraction(
            series_mul(x.num, y.num, char), series_mul(x.den, y.den, char), char
        )

    def sample(rng: random.Random) -> PuiseuxFraction:
        den = _random_series(rng, char)
        if den.is_zero:
            den = one
        return fraction(_random_series(rng, char), den, char)

    return RingOps(
        name=f"Frac(Puiseux({label}))",
        zero=PuiseuxFraction(SERIES_ZERO, one),
        one=PuiseuxFraction(one, one),
        add=add,
        mul=mul,
        domain=Domain(sample=sample),
        neg=lambda x: PuiseuxFraction(series_neg(x.num, char), x.den),
    )


def puiseux_fraction_valuation(char: int = 0) -> MValuationInstance:
    """The ord valuation on series fractions, with the unit oracles.

    expand(x, n) rewrites x as a plain series up to exponent n (denominator
    one), exact on the kept range; invert swaps numerator and denominator.
    """
    ring = puiseux_fraction_ring(char)
    one_series = t_power(0, 1, char)

    def v(x: PuiseuxFraction) -> ThetaValue:
        if x.num.is_zero:
            return THETA_ZERO
        return theta(x.num.ord - x.den.ord)

    def lt(x: PuiseuxFraction) -> PuiseuxFraction:
        if x.num.is_zero:
            return ring.zero
        qn, cn = x.num.leading
        qd, cd = x.den.leading
        mono = t_power(qn - qd, _coeff_mul(cn, _coeff_inv(cd, char), char), char)
        return PuiseuxFraction(mono, one_series)

    def unit_sample(rng: random.Random) -> PuiseuxFraction:
        def one_plus_small():
            items = [(Fraction(0), 1)]
            for _ in range(rng.randint(0, 3)):
                q = Fraction(rng.randint(1, 6), rng.choice((1, 2, 3)))
                c = rng.randint(-9, 9) if char == 0 else rng.randint(0, char - 1)
                items.append((q, c))
            return series(items, char)

        num, den = one_plus_small(), one_plus_small()
        shift = rng.choice((0, 0, 0, 0, 1, -1, Fraction(1, 2), Fraction(-1, 2)))
        lead = 1
        if rng.random() < 0.4:
            lead = rng.choice((2, 3, -1, 5)) if char == 0 else rng.randint(1, char - 1)
        num = series_mul(num, t_power(shift, lead, char), char)
        return fraction(num, den, char)

    def invert(x: PuiseuxFraction) -> PuiseuxFraction:
        return fraction(x.den, x.num, char)

    def expand(x: PuiseuxFraction, order: int) -> PuiseuxFraction:
        if x.num.is_zero:
            return ring.zero
        inv_den = series_inverse(x.den, Fraction(order) - min(x.num.ord, 0), char)
        full = truncate_series(series_mul(x.num, inv_den, char), Fraction(order))
        return PuiseuxFraction(full, one_series)

    return MValuationInstance(
        name=f"ord.{ring.name}",
        ring=ring,
        target=theta_semiring(),
        v=v,
        support_sample=lambda rng: ring.zero,
        support_description="only the zero fraction",
        leading_term=lt,
        unit_sample=unit_sample,
        invert=invert,
        expand=expand,
    )


# ---------------------------------------------------------------------------
# p-adic values.

def _padic_ord(n: int, p: int) -> int:
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def padic_valuation(p: int, on_fractions: bool = False) -> MValuationInstance:
    """v(n) = theta^(ord_p n) on Z, or on Q with negative orders allowed."""
    _check_char(p)
    if on_fractions:
        ring = RingOps(
            name="Q",
            zero=Fraction(0),
            one=Fraction(1),
            add=lambda a, b: a + b,
            mul=lambda a, b: a * b,
            domain=Domain(
                sample=lambda rng: Fraction(rng.randint(-200, 200), rng.randint(1, 200))
            ),
            neg=lambda a: -a,
        )

        def v(x: Fraction) -> ThetaValue:
            if x == 0:
                return THETA_ZERO
            return theta(_padic_ord(x.numerator, p) - _padic_ord(x.denominator, p))
    else:
        ring = RingOps(
            name="Z",
            zero=0,
            one=1,
            add=lambda a, b: a + b,
            mul=lambda a, b: a * b,
            domain=Domain(sample=lambda rng: rng.randint(-10_000, 10_000)),
            neg=lambda a: -a,
        )

        def v(x: int) -> ThetaValue:
            return THETA_ZERO if x == 0 else theta(_padic_ord(x, p))

    return MValuationInstance(
        name=f"v{p}" + (".Q" if on_fractions else ".Z"),
        ring=ring,
        target=theta_semiring(),
        v=v,
        support_sample=lambda rng: ring.zero,
        support_description="only 0",
    )


# ---------------------------------------------------------------------------
# Degree valuation on k[x].

def degree_monoid() -> OrderedMonoid:
    """theta^n ordered by degree (not by the reversed series convention)."""
    base = theta_monoid(reversed_order=False, name="theta-degrees")
    return OrderedMonoid(
        name=base.name,
        unit=base.unit,
        multiply=base.multiply,
        le=base.le,
        domain=Domain(sample=lambda rng: theta(rng.randint(0, 12))),
    )


def degree_valuation(char: int = 2, degree_bound: int = 5) -> MValuationInstance:
    """v(f) = theta^(deg f) on k[x]; strong, with target ordered by degree."""
    base = field_ring(char)
    ring = polynomial_ring(base, 1, degree_bound=degree_bound, max_terms=4)

    def v(f: Polynomial):
        return BOTTOM if f.is_zero else theta(f.degree())

    return MValuationInstance(
        name=f"deg.{base.name}[x]",
        ring=ring,
        target=tg_from_monoid(degree_monoid(), check=False),
        v=v,
        support_sample=lambda rng: ring.zero,
        support_description="only the zero polynomial",
    )


# ---------------------------------------------------------------------------
# The reciprocal valuation on nonnegative rationals.

def positive_rational_monoid() -> OrderedMonoid:
    def sample(rng: random.Random) -> Fraction:
        return Fraction(rng.randint(1, 30), rng.randint(1, 12))

    return OrderedMonoid(
        name="positive-rationals",
        unit=Fraction(1),
        multiply=lambda a, b: a * b,
        le=lambda a, b: a <= b,
        domain=Domain(sample=sample),
    )


def reciprocal_valuation() -> MValuationInstance:
    """v(a) = 1/a on the semifield of nonnegative rationals; not strong."""
    def sample(rng: random.Random) -> Fraction:
        if rng.random() < 0.05:
            return Fraction(0)
        return Fraction(rng.randint(1, 30), rng.randint(1, 12))

    ring = RingOps(
        name="Q>=0",
        zero=Fraction(0),
        one=Fraction(1),
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        domain=Domain(sample=sample),
    )
    return MValuationInstance(
        name="reciprocal",
        ring=ring,
        target=tg_from_monoid(positive_rational_monoid(), check=False),
        v=lambda a: BOTTOM if a == 0 else Fraction(1) / a,
        support_sample=lambda rng: Fraction(0),
        support_description="only 0",
    )


# ---------------------------------------------------------------------------
# The convex-subgroup example: sensitive support.

@dataclass(frozen=True)
class LexPairValue:
    """Value in a lex-ordered group: multiplicative first, additive second."""

    pair: tuple[Fraction, Fraction]

    @property
    def first(self) -> Fraction:
        return self.pair[0]

    @property
    def second(self) -> Fraction:
        return self.pair[1]

    def __repr__(self):
        return f"({self.first}, {self.second})"


def lex_pair(a, b) -> LexPairValue:
    a = Fraction(a)
    if a <= 0:
        raise WitnessError("first coordinate must be positive", (a,))
    return LexPairValue((a, Fraction(b)))


def _lex_mul(x: LexPairValue, y: LexPairValue) -> LexPairValue:
    return LexPairValue((x.first * y.first, x.second + y.second))


def _lex_le(x: LexPairValue, y: LexPairValue) -> bool:
    return x.pair < y.pair or x.pair == y.pair


def convex_subgroup_monoid() -> OrderedMonoid:
    """H = {1} x Q, the convex subgroup, as the valuation target monoid."""
    return OrderedMonoid(
        name="H",
        unit=lex_pair(1, 0),
        multiply=_lex_mul,
        le=_lex_le,
        domain=Domain(sample=lambda rng: lex_pair(1, Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))))),
    )


def convex_subgroup_valuation() -> MValuationInstance:
    """On M = H u a with a = { x > H }: v fixes H, kills a.

    Satisfies V1-V4 and bipotency on distinct values, but the support is
    sensitive: adding z in a to x in H lands on z, so v(x + z) = 0 != v(x).
    """
    def sample(rng: random.Random):
        r = rng.random()
        if r < 0.05:
            return BOTTOM
        second = Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))
        if r < 0.55:
            return lex_pair(1, second)
        return lex_pair(rng.choice((2, 3, 4, Fraction(3, 2), Fraction(5, 2))), second)

    def add(x, y):
        if x is BOTTOM:
            return y
        if y is BOTTOM:
            return x
        return y if _lex_le(x, y) else x

    def mul(x, y):
        if x is BOTTOM or y is BOTTOM:
            return BOTTOM
        return _lex_mul(x, y)

    ring = RingOps(
        name="H u a",
        zero=BOTTOM,
        one=lex_pair(1, 0),
        add=add,
        mul=mul,
        domain=Domain(sample=sample),
    )

    def support_sample(rng: random.Random):
        if rng.random() < 0.1:
            return BOTTOM
        return lex_pair(
            rng.choice((2, 3, 4, Fraction(3, 2))),
            Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))),
        )

    return MValuationInstance(
        name="convex-subgroup",
        ring=ring,
        target=tg_from_monoid(convex_subgroup_monoid(), check=False),
        v=lambda x: x if x is not BOTTOM and x.first == 1 else BOTTOM,
        support_sample=support_sample,
        support_description="elements above the convex subgroup, plus zero",
    )
