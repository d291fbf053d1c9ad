"""Finite reference structures and their packaged table files.

Every fixture exists twice: built programmatically here, and shipped as JSON
under data/. Tests assert the two agree bit-exactly, so the files can be fed
to the CLI while staying honest to the constructions.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .core_order import (
    FiniteSemiringTable,
    OrderedMonoid,
    ThetaValue,
    finite_domain,
    theta,
)
from .equiv_lattice import e_L, quotient
from .reporting import WitnessError
from .supertropical import (
    FiniteSupertropical,
    finite_from_json,
    finite_from_table,
)


def chain_monoid(n: int) -> OrderedMonoid:
    """theta-powers 1 > theta > ... > theta^(n-1) with truncated product."""
    if n < 1:
        raise WitnessError("chain needs at least one element", (n,))
    top = n - 1

    def multiply(x: ThetaValue, y: ThetaValue) -> ThetaValue:
        return theta(min(x.exponent + y.exponent, top))

    return OrderedMonoid(
        name=f"chain{n}",
        unit=theta(0),
        multiply=multiply,
        le=lambda x, y: x <= y,
        domain=finite_domain(tuple(theta(k) for k in range(n))),
    )


def _chain_name(k: int) -> str:
    return "1" if k == 0 else "th" if k == 1 else f"th^{k}"


def tg_chain_table(n: int) -> FiniteSemiringTable:
    """T(chain): the bipotent semiring table of the truncated chain."""
    top = n - 1
    size = n + 1  # index 0 is the zero element

    def add(i: int, j: int) -> int:
        if i == 0 or j == 0:
            return i or j
        return min(i, j)  # lower power of theta is larger

    def mul(i: int, j: int) -> int:
        if i == 0 or j == 0:
            return 0
        return min(i - 1 + j - 1, top) + 1

    return FiniteSemiringTable(
        names=("0",) + tuple(_chain_name(k) for k in range(n)),
        zero=0,
        one=1,
        add_table=tuple(tuple(add(i, j) for j in range(size)) for i in range(size)),
        mul_table=tuple(tuple(mul(i, j) for j in range(size)) for i in range(size)),
    )


def truncation_fixture(n: int) -> FiniteSupertropical:
    """Theta-powers up to n-1, each once tangibly and once ghostly.

    Tangible products overflowing the top exponent collapse to the top
    ghost, the unique distributive choice; ghost order is by exponent.
    Indices: 0, then tangibles t^0..t^(n-1), then their ghosts.
    """
    if n < 1:
        raise WitnessError("truncation needs at least one power", (n,))
    size = 2 * n + 1

    def ghost_of(k: int) -> int:
        return n + 1 + k

    def mul(i: int, j: int) -> int:
        if i == 0 or j == 0:
            return 0
        a, ga = (i - 1, False) if i <= n else (i - n - 1, True)
        b, gb = (j - 1, False) if j <= n else (j - n - 1, True)
        k = a + b
        if k >= n:
            return ghost_of(n - 1)
        return ghost_of(k) if ga or gb else k + 1

    def add(i: int, j: int) -> int:
        if i == 0 or j == 0:
            return i or j
        a = (i - 1) if i <= n else (i - n - 1)
        b = (j - 1) if j <= n else (j - n - 1)
        if a == b:
            return ghost_of(a)
        return i if a > b else j

    names = ("0",) + tuple(_chain_name(k) for k in range(n)) + tuple(
        "e" if k == 0 else f"e*{_chain_name(k)}" for k in range(n)
    )
    t = FiniteSemiringTable(
        names=names,
        zero=0,
        one=1,
        add_table=tuple(tuple(add(i, j) for j in range(size)) for i in range(size)),
        mul_table=tuple(tuple(mul(i, j) for j in range(size)) for i in range(size)),
    )
    return finite_from_table(t)


def z2_fixture() -> FiniteSupertropical:
    """Tangibles {1, g} with g^2 = 1 over one ghost fiber e."""
    t = FiniteSemiringTable(
        names=("0", "1", "g", "e"),
        zero=0,
        one=1,
        add_table=((0, 1, 2, 3), (1, 3, 3, 3), (2, 3, 3, 3), (3, 3, 3, 3)),
        mul_table=((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 3, 3)),
    )
    return finite_from_table(t)


def z4_fixture() -> FiniteSupertropical:
    """Tangibles the cyclic group of order 4, all in one ghost fiber."""
    names = ("0", "1", "i", "i^2", "i^3", "e")
    e = 5

    def add(a: int, b: int) -> int:
        if a == 0 or b == 0:
            return a or b
        return e  # one shared fiber: every nonzero sum collapses to it

    def mul(a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if a == e or b == e:
            return e
        return (a - 1 + b - 1) % 4 + 1

    t = FiniteSemiringTable(
        names=names,
        zero=0,
        one=1,
        add_table=tuple(tuple(add(i, j) for j in range(6)) for i in range(6)),
        mul_table=tuple(tuple(mul(i, j) for j in range(6)) for i in range(6)),
    )
    return finite_from_table(t)


def all_ghost_fixture() -> FiniteSupertropical:
    """The Boolean semiring seen supertropically: 1 + 1 = 1, no tangibles."""
    t = FiniteSemiringTable(
        names=("0", "e"),
        zero=0,
        one=1,
        add_table=((0, 1), (1, 1)),
        mul_table=((0, 0), (0, 1)),
    )
    return finite_from_table(t)


def non_submonoid_L(u: FiniteSupertropical) -> tuple[int, ...]:
    """L = {e, e*th}: not a submonoid (e*th squared lands outside), while
    the complement {0, e*th^2} absorbs products, so E(L) is still MFCE."""
    keep = {"e", "e*th"}
    return tuple(i for i in range(u.size) if u.table.names[i] in keep)


def non_submonoid_quotient() -> FiniteSupertropical:
    """Quotient of trunc3 by E(L) for an L that is not a submonoid.

    E(L) merges the top fiber {th^2, e*th^2}, so in the quotient th * th
    is ghost: the tangibles are no longer closed under multiplication.
    """
    u = truncation_fixture(3)
    return quotient(u, e_L(u, non_submonoid_L(u)))


BUILDERS = {
    "z2": z2_fixture,
    "z4": z4_fixture,
    "trunc2": lambda: truncation_fixture(2),
    "trunc3": lambda: truncation_fixture(3),
    "bool_ghost": all_ghost_fixture,
    "trunc3_quotient": non_submonoid_quotient,
}

TABLE_BUILDERS = {
    "tg_chain4": lambda: tg_chain_table(4),
}


def data_dir() -> Path:
    return Path(resources.files("supertrop")) / "data"


def fixture_names() -> tuple[str, ...]:
    return tuple(sorted(BUILDERS)) + tuple(sorted(TABLE_BUILDERS))


def load_table(name: str) -> FiniteSemiringTable:
    return FiniteSemiringTable.from_file(data_dir() / f"{name}.json")


def load_supertropical(name: str) -> FiniteSupertropical:
    with open(data_dir() / f"{name}.json", "r", encoding="utf-8") as fh:
        return finite_from_json(json.load(fh))


def write_data(target: Path | None = None) -> list[Path]:
    """Regenerate the packaged JSON files from the builders."""
    target = data_dir() if target is None else Path(target)
    target.mkdir(parents=True, exist_ok=True)
    written = []
    docs = {name: build().to_json() for name, build in BUILDERS.items()}
    docs.update({name: build().to_json() for name, build in TABLE_BUILDERS.items()})
    for name, doc in sorted(docs.items()):
        path = target / f"{name}.json"
        path.write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n", encoding="utf-8")
        written.append(path)
    return written


if __name__ == "__main__":
    for p in write_data():
        print(p)
