"""Ordered monoids, bipotent semirings, and finite semiring tables.

A bipotent semiring is one where x + y is always x or y; equivalently an
ordered monoid G with a bottom element adjoined and addition defined as max.
The two views are interconvertible (tg_from_monoid and BipotentSemiring.monoid
round-trip). ThetaValue realizes the multiplicative semifield of formal
theta-powers with exact rational exponents, ordered by reversed exponent
comparison (theta is a fixed symbol strictly between 0 and 1).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional

from .domains import Domain, Monoid, finite_domain, iter_tuples
from .reporting import Checker, Report, WitnessError, exhaustive

LESS = "less"
EQUAL = "equal"
GREATER = "greater"
INCOMPARABLE = "incomparable"


class _Bottom:
    """The adjoined zero of T(G); one shared instance, compares by identity."""

    __slots__ = ()

    def __repr__(self):
        return "0"


BOTTOM = _Bottom()


@dataclass(frozen=True)
class OrderedMonoid:
    """Commutative monoid with a weakly compatible total order."""

    name: str
    unit: Any
    multiply: Callable[[Any, Any], Any]
    le: Callable[[Any, Any], bool]
    domain: Domain


def check_ordered_monoid(g: OrderedMonoid, samples: int = 400, seed: int = 0) -> Report:
    pairs, mode = iter_tuples(g.domain, 2, samples, seed)
    c = Checker(mode)
    for x, y in pairs:
        c.expect("commutative", g.multiply(x, y) == g.multiply(y, x), (x, y))
        c.expect("unit", g.multiply(g.unit, x) == x, (x,))
        total = g.le(x, y) or g.le(y, x)
        c.expect("order total", total, (x, y))
        if g.le(x, y) and g.le(y, x):
            c.expect("order antisymmetric", x == y, (x, y))
    triples, mode3 = iter_tuples(g.domain, 3, samples, seed + 1)
    for x, y, z in triples:
        c.expect(
            "associative",
            g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z)),
            (x, y, z),
        )
        if g.le(x, y):
            c.expect("order compatible", g.le(g.multiply(z, x), g.multiply(z, y)), (x, y, z))
    if mode3 != c.mode:
        c.mode = mode3
    return c.report()


@dataclass(frozen=True)
class BipotentSemiring:
    """T(G): the ordered monoid G with bottom adjoined, addition = max.

    `le` is the total order with zero least. `monoid` is the wrapped G when
    the semiring was built by tg_from_monoid. `inv` (multiplicative inverse of
    nonzero elements) is present exactly for semifields.
    """

    name: str
    zero: Any
    one: Any
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    le: Callable[[Any, Any], bool]
    domain: Domain
    monoid: Optional[OrderedMonoid] = None
    inv: Optional[Callable[[Any], Any]] = None


def tg_from_monoid(g: OrderedMonoid, check: bool = True, samples: int = 400, seed: int = 0) -> BipotentSemiring:
    if check:
        rep = check_ordered_monoid(g, samples=samples, seed=seed)
        if not rep.ok:
            axiom, wit = rep.witnesses[0]
            raise WitnessError(f"ordered monoid invariant failed: {axiom}", wit)

    def add(x, y):
        if x is BOTTOM:
            return y
        if y is BOTTOM:
            return x
        return y if g.le(x, y) else x

    def mul(x, y):
        if x is BOTTOM or y is BOTTOM:
            return BOTTOM
        return g.multiply(x, y)

    def le(x, y):
        if x is BOTTOM:
            return True
        if y is BOTTOM:
            return False
        return g.le(x, y)

    if g.domain.finite:
        dom = finite_domain((BOTTOM,) + tuple(g.domain.elements))
    else:
        def sample(rng: random.Random):
            return BOTTOM if rng.random() < 0.05 else g.domain.draw(rng)

        dom = Domain(sample=sample)
    return BipotentSemiring(
        name=f"T({g.name})", zero=BOTTOM, one=g.unit, add=add, mul=mul, le=le,
        domain=dom, monoid=g,
    )


def monoid_of(m: BipotentSemiring) -> OrderedMonoid:
    """Strips the zero off a bipotent semiring, recovering the ordered monoid."""
    if m.monoid is not None:
        return m.monoid
    if m.domain.finite:
        dom = finite_domain(x for x in m.domain.elements if x != m.zero)
    else:
        def sample(rng: random.Random):
            while True:
                x = m.domain.draw(rng)
                if x != m.zero:
                    return x

        dom = Domain(sample=sample)
    return OrderedMonoid(name=f"{m.name}\\0", unit=m.one, multiply=m.mul, le=m.le, domain=dom)


# ---------------------------------------------------------------------------
# ThetaValue: formal theta-powers with exact rational exponents.

def _as_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    if isinstance(q, str):
        return Fraction(q)
    raise TypeError(f"not an exact rational: {q!r}")


@dataclass(frozen=True)
class ThetaValue:
    """theta^exponent for 0 < theta < 1; exponent None is the bottom 0_M.

    Order is reversed exponent order (theta^p <= theta^q iff p >= q), bottom
    least; multiplication adds exponents; addition is max in the stored order.
    """

    exponent: Optional[Fraction]

    base_label = "1/2"  # display only; theta itself stays symbolic

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __mul__(self, other: "ThetaValue") -> "ThetaValue":
        if self.is_zero or other.is_zero:
            return THETA_ZERO
        return ThetaValue(self.exponent + other.exponent)

    def __add__(self, other: "ThetaValue") -> "ThetaValue":
        return other if self <= other else self

    def __le__(self, other: "ThetaValue") -> bool:
        if self.is_zero:
            return True
        if other.is_zero:
            return False
        return self.exponent >= other.exponent

    def __lt__(self, other: "ThetaValue") -> bool:
        return self <= other and self != other

    def __ge__(self, other: "ThetaValue") -> bool:
        return other <= self

    def __gt__(self, other: "ThetaValue") -> bool:
        return other < self

    def inv(self) -> "ThetaValue":
        if self.is_zero:
            raise ZeroDivisionError("0_M has no inverse")
        return ThetaValue(-self.exponent)

    def __repr__(self):
        if self.is_zero:
            return "0"
        q = self.exponent
        if q == 0:
            return "1"
        base = f"({self.base_label})"
        if q.denominator == 1:
            return base if q == 1 else f"{base}^{q.numerator}" if q.numerator >= 0 else f"{base}^({q.numerator})"
        return f"{base}^({q})"


THETA_ZERO = ThetaValue(None)
THETA_ONE = ThetaValue(Fraction(0))


def theta(q) -> ThetaValue:
    return ThetaValue(_as_fraction(q))


def _sample_exponent(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-12, 12), rng.choice((1, 2, 3, 4)))


def theta_monoid(reversed_order: bool = True, name: str = "theta-powers") -> OrderedMonoid:
    """Nonzero theta-powers; reversed order is the 0 < theta < 1 convention.

    reversed_order=False orders by exponent instead (used by the degree
    valuation, whose target orders theta-powers by degree).
    """
    if reversed_order:
        le = lambda x, y: x.exponent >= y.exponent
    else:
        le = lambda x, y: x.exponent <= y.exponent

    def sample(rng: random.Random) -> ThetaValue:
        return ThetaValue(_sample_exponent(rng))

    return OrderedMonoid(
        name=name, unit=THETA_ONE, multiply=lambda x, y: x * y, le=le,
        domain=Domain(sample=sample),
    )


def theta_semiring() -> BipotentSemiring:
    """The bipotent semifield of theta-powers with 0_M, reversed order."""

    def sample(rng: random.Random) -> ThetaValue:
        return THETA_ZERO if rng.random() < 0.05 else ThetaValue(_sample_exponent(rng))

    return BipotentSemiring(
        name="T(theta-powers)",
        zero=THETA_ZERO,
        one=THETA_ONE,
        add=lambda x, y: x + y,
        mul=lambda x, y: x * y,
        le=lambda x, y: x <= y,
        domain=Domain(sample=sample),
        monoid=theta_monoid(),
        inv=lambda x: x.inv(),
    )


# ---------------------------------------------------------------------------
# Finite semiring tables.

@dataclass(frozen=True)
class FiniteSemiringTable:
    names: tuple[str, ...]
    zero: int
    one: int
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.names)
        if len(set(self.names)) != n:
            raise WitnessError("duplicate element names", (self.names,))
        for which, table in (("add", self.add_table), ("mul", self.mul_table)):
            if len(table) != n or any(len(row) != n for row in table):
                raise WitnessError(f"{which} table is not {n}x{n}")
            for row in table:
                for v in row:
                    if not (0 <= v < n):
                        raise WitnessError(f"{which} table index out of range", (v,))
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise WitnessError("zero/one index out of range", (self.zero, self.one))

    @property
    def size(self) -> int:
        return len(self.names)

    def add(self, i: int, j: int) -> int:
        return self.add_table[i][j]

    def mul(self, i: int, j: int) -> int:
        return self.mul_table[i][j]

    def name(self, i: int) -> str:
        return self.names[i]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def to_json(self) -> dict:
        return {
            "names": list(self.names),
            "zero": self.zero,
            "one": self.one,
            "add": [list(r) for r in self.add_table],
            "mul": [list(r) for r in self.mul_table],
        }

    @staticmethod
    def from_json(doc: dict) -> "FiniteSemiringTable":
        try:
            return FiniteSemiringTable(
                names=tuple(doc["names"]),
                zero=int(doc["zero"]),
                one=int(doc["one"]),
                add_table=tuple(tuple(int(v) for v in row) for row in doc["add"]),
                mul_table=tuple(tuple(int(v) for v in row) for row in doc["mul"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, WitnessError):
                raise
            raise WitnessError(f"malformed table document: {exc}") from exc

    @staticmethod
    def from_file(path) -> "FiniteSemiringTable":
        with open(path, "r", encoding="utf-8") as fh:
            return FiniteSemiringTable.from_json(json.load(fh))

    def domain(self) -> Domain:
        return finite_domain(range(self.size))


def check_semiring_axioms(t: FiniteSemiringTable) -> Report:
    c = Checker(exhaustive())
    n = t.size
    names = t.names
    for i in range(n):
        c.expect("additive neutral", t.add(t.zero, i) == i, (names[i],))
        c.expect("multiplicative neutral", t.mul(t.one, i) == i, (names[i],))
        c.expect("zero absorbs", t.mul(t.zero, i) == t.zero, (names[i],))
        for j in range(n):
            c.expect("addition commutative", t.add(i, j) == t.add(j, i), (names[i], names[j]))
            c.expect("multiplication commutative", t.mul(i, j) == t.mul(j, i), (names[i], names[j]))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c.expect(
                    "addition associative",
                    t.add(t.add(i, j), k) == t.add(i, t.add(j, k)),
                    (names[i], names[j], names[k]),
                )
                c.expect(
                    "multiplication associative",
                    t.mul(t.mul(i, j), k) == t.mul(i, t.mul(j, k)),
                    (names[i], names[j], names[k]),
                )
                c.expect(
                    "distributive",
                    t.mul(i, t.add(j, k)) == t.add(t.mul(i, j), t.mul(i, k)),
                    (names[i], names[j], names[k]),
                )
    return c.report()


def check_bipotent(t: FiniteSemiringTable) -> Report:
    c = Checker(exhaustive(), max_witnesses=t.size * t.size)
    for i in range(t.size):
        for j in range(t.size):
            c.expect("bipotent", t.add(i, j) in (i, j), (t.name(i), t.name(j)))
    return c.report()


def induced_order(r, a, b) -> str:
    """The partial order a <= b iff a + b = b, on any semiring access.

    Never returns `incomparable` on a bipotent semiring.
    """
    s = r.add(a, b)
    le_ab = s == b
    le_ba = s == a
    if le_ab and le_ba:
        return EQUAL
    if le_ab:
        return LESS
    if le_ba:
        return GREATER
    return INCOMPARABLE
