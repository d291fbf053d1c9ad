"""Element domains and deterministic samplers.

A Domain is either a finite carrier (elements) or a behavioral one (sample).
Checkers use iter_tuples to decide between exhaustive product scans and
seeded sampling, and report which of the two they did.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Any, Callable, Optional

from .reporting import exhaustive, sampled

# Exhaustive scans are preferred whenever the full product stays below this.
EXHAUSTIVE_CAP = 250_000


@dataclass(frozen=True)
class Domain:
    elements: Optional[tuple] = None
    sample: Optional[Callable[[random.Random], Any]] = None

    def __post_init__(self):
        if self.elements is None and self.sample is None:
            raise ValueError("domain needs elements or a sampler")

    @property
    def finite(self) -> bool:
        return self.elements is not None

    def draw(self, rng: random.Random):
        if self.sample is not None:
            return self.sample(rng)
        return rng.choice(self.elements)


def finite_domain(elements) -> Domain:
    return Domain(elements=tuple(elements))


def iter_tuples(domain: Domain, arity: int, samples: int, seed: int):
    """Returns (iterable of arity-tuples, mode string)."""
    if domain.finite and len(domain.elements) ** arity <= max(EXHAUSTIVE_CAP, 1):
        return itertools.product(domain.elements, repeat=arity), exhaustive()
    rng = random.Random(seed)
    tuples = [tuple(domain.draw(rng) for _ in range(arity)) for _ in range(samples)]
    return tuples, sampled(samples)


def iter_elements(domain: Domain, samples: int, seed: int):
    it, mode = iter_tuples(domain, 1, samples, seed)
    return ([t[0] for t in it] if not domain.finite else list(domain.elements)), mode


@dataclass(frozen=True)
class Monoid:
    """Commutative monoid given behaviorally: unit, multiplication, carrier."""

    name: str
    unit: Any
    multiply: Callable[[Any, Any], Any]
    domain: Domain


@dataclass(frozen=True)
class RingOps:
    """Semiring access for a domain R of a valuation or supervaluation.

    neg is None for plain semirings (no additive inverses); elements and
    sampling live in `domain`.
    """

    name: str
    zero: Any
    one: Any
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    domain: Domain
    neg: Optional[Callable[[Any], Any]] = None

    def sub(self, x, y):
        if self.neg is None:
            raise ValueError(f"{self.name} has no subtraction")
        return self.add(x, self.neg(y))
