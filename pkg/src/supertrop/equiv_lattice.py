"""Equivalence relations on finite supertropical fixtures and the cover lattice.

An MFCE relation is multiplicative and fiber conserving: blocks never cross
nu-fibers, and merging is stable under multiplication by any element. The
quotient by an MFCE relation is again supertropical, and the relations on
U(v) enumerate (anti-isomorphically) the covers of v. Orbital relations come
from submonoids acting on the carrier. The leading-term constructions at the
end build the finest very strong cover and the tangible lift into D(M).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

from .core_order import monoid_of
from .domains import Domain, Monoid
from .reporting import BoundExceeded, Checker, Report, WitnessError, exhaustive
from .supertropical import (
    FiniteSemiringTable,
    FiniteSupertropical,
    STRStructure,
    ZERO,
    d_of,
    finite_from_table,
    materialize,
    tangible,
)
from .superval import (
    Supervaluation,
    Transmission,
    _nonzero_value_monoid,
    _require_cancellative,
    initial_cover,
)
from .valuation import MValuationInstance


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)

    def blocks(self) -> list[list[int]]:
        by_root: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            by_root.setdefault(self.find(i), []).append(i)
        return [sorted(b) for b in by_root.values()]


def _canonical(blocks) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


@dataclass(frozen=True)
class MFCERelation:
    """A partition of a fixture's carrier indices.

    `mfce` records whether the multiplicative + fiber-conserving check
    passed; orbital relations of submonoids outside S_e come out with
    mfce=False but are still multiplicative.
    """

    carrier: FiniteSupertropical
    partition: tuple[tuple[int, ...], ...]
    mfce: bool = field(default=True, compare=False)

    @cached_property
    def _block_of(self) -> dict[int, int]:
        out = {}
        for bi, block in enumerate(self.partition):
            for x in block:
                out[x] = bi
        return out

    def block_of(self, x: int) -> int:
        return self._block_of[x]

    def same(self, x: int, y: int) -> bool:
        return self._block_of[x] == self._block_of[y]

    @property
    def classes(self) -> int:
        return len(self.partition)

    def refines(self, other: "MFCERelation") -> bool:
        """Every block of self sits inside one block of other."""
        return all(
            len({other.block_of(x) for x in block}) == 1 for block in self.partition
        )

    def block_names(self) -> tuple[tuple[str, ...], ...]:
        u = self.carrier
        return tuple(tuple(u.name(x) for x in block) for block in self.partition)

    def __repr__(self):
        body = " ".join(
            "{" + ",".join(self.carrier.name(x) for x in b) + "}" for b in self.partition
        )
        return f"MFCERelation({body})"


def check_mfce(u: FiniteSupertropical, partition) -> Report:
    """Exhaustive check that a partition is multiplicative and fiber conserving."""
    blocks = _canonical(partition)
    c = Checker(exhaustive())
    seen = sorted(x for b in blocks for x in b)
    c.expect("partition", seen == list(range(u.size)), (seen,))
    if not c.report().ok:
        return c.report()
    block_of = {}
    for bi, b in enumerate(blocks):
        for x in b:
            block_of[x] = bi
    for b in blocks:
        x0 = b[0]
        for x in b[1:]:
            c.expect(
                "fiber conserving",
                u.nu_of(x0) == u.nu_of(x),
                (u.name(x0), u.name(x)),
            )
            for z in range(u.size):
                c.expect(
                    "multiplicative",
                    block_of[u.mul(x0, z)] == block_of[u.mul(x, z)],
                    (u.name(x0), u.name(x), u.name(z)),
                )
    return c.report()


def relation(u: FiniteSupertropical, blocks, require: bool = True) -> MFCERelation:
    """Canonicalize a partition into an MFCERelation, checking the axioms.

    require=True raises on failure; require=False records the outcome in the
    mfce flag instead.
    """
    part = _canonical(blocks)
    seen = sorted(x for b in part for x in b)
    if seen != list(range(u.size)):
        raise WitnessError("not a partition of the carrier", (seen,))
    rep = check_mfce(u, part)
    if require and not rep.ok:
        axiom, wit = rep.witnesses[0]
        raise WitnessError(f"not an MFCE relation ({axiom})", wit)
    return MFCERelation(u, part, rep.ok)


def diagonal(u: FiniteSupertropical) -> MFCERelation:
    return MFCERelation(u, _canonical([x] for x in range(u.size)))


def e_nu(u: FiniteSupertropical) -> MFCERelation:
    """The coarsest MFCE relation: x ~ y iff ex = ey."""
    return MFCERelation(u, _canonical(u.fibers()))


def e_t(u: FiniteSupertropical) -> MFCERelation:
    """Tangible fibers merged, ghosts left alone.

    Only an MFCE relation when the tangibles are multiplicatively closed;
    raises the closure witness otherwise.
    """
    by_fiber: dict[int, list[int]] = {}
    for x in u.tangibles:
        by_fiber.setdefault(u.nu_of(x), []).append(x)
    blocks = list(by_fiber.values())
    blocks.extend([g] for g in u.ghost_ideal)
    return relation(u, blocks)


def e_L(u: FiniteSupertropical, l) -> MFCERelation:
    """x ~ y iff x = y or ex = ey lies outside L.

    l lists the ghost elements to keep separated. Requires M(M\\L) to stay
    inside M\\L, otherwise the quotient would not be multiplicative.
    """
    keep = set(l)
    for m in keep:
        if not u.is_ghost(m):
            raise WitnessError("L must consist of nonzero ghosts", (u.name(m),))
    ghosts = set(u.ghosts)
    outside = ghosts - keep
    for m in ghosts:
        for n in outside:
            p = u.mul(m, n)
            if not u.is_zero(p) and p in keep:
                raise WitnessError(
                    "M(M\\L) escapes M\\L", (u.name(m), u.name(n), u.name(p))
                )
    blocks: list[list[int]] = []
    merged: dict[int, list[int]] = {}
    for x in range(u.size):
        m = u.nu_of(x)
        if not u.is_zero(m) and m in outside:
            merged.setdefault(m, []).append(x)
        else:
            blocks.append([x])
    blocks.extend(merged.values())
    return relation(u, blocks)


def quotient(u: FiniteSupertropical, rel: MFCERelation) -> FiniteSupertropical:
    """U/E with operations inherited from representatives.

    Verifies well-definedness of both operations across each block before
    building the quotient table; the result passes the full supertropical
    validator (that is the quotient theorem, asserted here at construction).
    """
    if not rel.mfce:
        raise WitnessError("quotient requires an MFCE relation")
    blocks = rel.partition
    for b in blocks:
        x0 = b[0]
        for x in b[1:]:
            for z in range(u.size):
                if rel.block_of(u.add(x0, z)) != rel.block_of(u.add(x, z)):
                    raise WitnessError(
                        "addition not well defined on blocks",
                        (u.name(x0), u.name(x), u.name(z)),
                    )
                if rel.block_of(u.mul(x0, z)) != rel.block_of(u.mul(x, z)):
                    raise WitnessError(
                        "multiplication not well defined on blocks",
                        (u.name(x0), u.name(x), u.name(z)),
                    )
    names = tuple(
        u.name(b[0]) if len(b) == 1 else "[" + " ".join(u.name(x) for x in b) + "]"
        for b in blocks
    )
    reps = [b[0] for b in blocks]
    n = len(blocks)
    add = tuple(
        tuple(rel.block_of(u.add(reps[i], reps[j])) for j in range(n)) for i in range(n)
    )
    mul = tuple(
        tuple(rel.block_of(u.mul(reps[i], reps[j])) for j in range(n)) for i in range(n)
    )
    table = FiniteSemiringTable(names, rel.block_of(u.zero), rel.block_of(u.one), add, mul)
    return finite_from_table(table)


def projection_transmission(u: FiniteSupertropical, rel: MFCERelation,
                            q: FiniteSupertropical) -> Transmission:
    """pi_E: U -> U/E as a transmission (q must be quotient(u, rel))."""
    return Transmission("pi_E", u, q, {x: rel.block_of(x) for x in range(u.size)})


def quotient_superval(sv: Supervaluation, rel: MFCERelation,
                      q: Optional[FiniteSupertropical] = None) -> Supervaluation:
    """phi/E: the pushforward of a supervaluation along pi_E."""
    if rel.carrier != sv.target:
        raise WitnessError("relation lives on a different carrier")
    if q is None:
        q = quotient(sv.target, rel)
    return Supervaluation(
        name=sv.name + "/E",
        ring=sv.ring,
        target=q,
        phi=lambda a: rel.block_of(sv.phi(a)),
    )


# ---------------------------------------------------------------------------
# Submonoids of the carrier and orbital relations.

@dataclass(frozen=True)
class SubmonoidWitness:
    """A verified submonoid of S(U) = {x : x T(U) within T(U)}.

    kind is "S_e(U)" when every member additionally satisfies ex = e, the
    condition under which its orbital relation is fiber conserving.
    """

    carrier: FiniteSupertropical
    elements: tuple[int, ...]
    kind: str

    def names(self) -> tuple[str, ...]:
        return tuple(self.carrier.name(x) for x in self.elements)

    def __repr__(self):
        return f"SubmonoidWitness({{{', '.join(self.names())}}}, {self.kind})"


def submonoid(u: FiniteSupertropical, elements) -> SubmonoidWitness:
    """Validate a subset as a submonoid of S(U) and classify it."""
    elems = tuple(sorted(set(elements)))
    tang = u.tangibles
    if u.one not in elems:
        raise WitnessError("submonoid must contain 1")
    for x in elems:
        for t in tang:
            if not u.is_tangible(u.mul(x, t)):
                raise WitnessError("x T(U) leaves T(U)", (u.name(x), u.name(t)))
        for y in elems:
            if u.mul(x, y) not in elems:
                raise WitnessError("not closed under multiplication", (u.name(x), u.name(y)))
    in_s_e = all(u.mul(u.e, x) == u.e for x in elems)
    return SubmonoidWitness(u, elems, "S_e(U)" if in_s_e else "S(U)")


def s_of(u: FiniteSupertropical) -> SubmonoidWitness:
    """S(U): everything whose multiples keep tangibles tangible."""
    tang = u.tangibles
    elems = [
        x for x in range(u.size) if all(u.is_tangible(u.mul(x, t)) for t in tang)
    ]
    return submonoid(u, elems)


def s_e_of(u: FiniteSupertropical) -> SubmonoidWitness:
    """S_e(U) = S(U) intersected with the fiber of e."""
    s = s_of(u)
    return submonoid(u, [x for x in s.elements if u.mul(u.e, x) == u.e])


def t_e_of(u: FiniteSupertropical) -> tuple[int, ...]:
    """T_e(U): the tangible fiber of e (not always inside S(U))."""
    return tuple(x for x in u.tangibles if u.mul(u.e, x) == u.e)


def orbital(u: FiniteSupertropical, g: SubmonoidWitness) -> MFCERelation:
    """E(G): x ~ y iff gx = hy for some g, h in G.

    By commutativity this is the transitive closure of x ~ gx, computed with
    union-find. The result is MFCE exactly when G sits inside S_e(U); the
    mfce flag records the check.
    """
    uf = _UnionFind(u.size)
    for x in range(u.size):
        for gg in g.elements:
            uf.union(x, u.mul(gg, x))
    return relation(u, uf.blocks(), require=False)


def saturate(u: FiniteSupertropical, g: SubmonoidWitness) -> SubmonoidWitness:
    """G' = {x in S(U) : gx in G for some g in G}; E(G') = E(G)."""
    gset = set(g.elements)
    out = [
        x
        for x in s_of(u).elements
        if any(u.mul(gg, x) in gset for gg in g.elements)
    ]
    return submonoid(u, out)


def g_of(u: FiniteSupertropical, rel: MFCERelation) -> SubmonoidWitness:
    """G_E = {x in S(U) : x ~ 1}, the submonoid a multiplicative relation hides."""
    elems = [x for x in s_of(u).elements if rel.same(x, u.one)]
    return submonoid(u, elems)


def all_submonoids(u: FiniteSupertropical) -> list[SubmonoidWitness]:
    """Every submonoid of S(U), by subset scan (carriers are small)."""
    s = s_of(u).elements
    rest = [x for x in s if x != u.one]
    out = []
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            cand = set(extra) | {u.one}
            if all(u.mul(x, y) in cand for x in cand for y in cand):
                out.append(submonoid(u, cand))
    return out


def orbital_meet_data(u: FiniteSupertropical) -> dict:
    """Per-fixture experimental record: is the meet of orbitals orbital?

    Returns counts only; nothing in the package asserts either way.
    """
    orbitals = {orbital(u, g).partition for g in all_submonoids(u)}
    rels = [MFCERelation(u, p) for p in sorted(orbitals)]
    closed = 0
    for a in rels:
        for b in rels:
            if _intersect_blocks(a, b) in orbitals:
                closed += 1
    return {
        "orbitals": len(rels),
        "meet_pairs": len(rels) ** 2,
        "meets_orbital": closed,
    }


# ---------------------------------------------------------------------------
# Lattice operations and enumeration.

def _intersect_blocks(e1: MFCERelation, e2: MFCERelation):
    blocks: dict[tuple[int, int], list[int]] = {}
    for x in range(e1.carrier.size):
        blocks.setdefault((e1.block_of(x), e2.block_of(x)), []).append(x)
    return _canonical(blocks.values())


def meet(e1: MFCERelation, e2: MFCERelation) -> MFCERelation:
    """Blockwise intersection."""
    if e1.carrier is not e2.carrier and e1.carrier != e2.carrier:
        raise WitnessError("meet needs a common carrier")
    return relation(e1.carrier, _intersect_blocks(e1, e2))


def join(e1: MFCERelation, e2: MFCERelation) -> MFCERelation:
    """Transitive closure of the union, via union-find."""
    if e1.carrier is not e2.carrier and e1.carrier != e2.carrier:
        raise WitnessError("join needs a common carrier")
    uf = _UnionFind(e1.carrier.size)
    for rel in (e1, e2):
        for block in rel.partition:
            for x in block[1:]:
                uf.union(block[0], x)
    return relation(e1.carrier, uf.blocks())


def _set_partitions(items: list):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1 :]
        yield [[head]] + part


def enumerate_mfce(u: FiniteSupertropical, bound: int = 12) -> list[MFCERelation]:
    """All MFCE relations on u.

    Fiber conservation confines blocks to nu-fibers, so candidates are
    products of per-fiber set partitions; each candidate is then filtered by
    the multiplicative condition. Sorted finest-first.
    """
    if u.size > bound:
        raise BoundExceeded(f"carrier size {u.size} exceeds bound {bound}")
    per_fiber = [list(_set_partitions(list(f))) for f in u.fibers()]
    found = []
    for combo in itertools.product(*per_fiber):
        blocks = [b for part in combo for b in part]
        if _is_multiplicative(u, blocks):
            found.append(MFCERelation(u, _canonical(blocks)))
    found.sort(key=lambda r: (-r.classes, r.partition))
    return found


def _is_multiplicative(u: FiniteSupertropical, blocks) -> bool:
    block_of = {}
    for bi, b in enumerate(blocks):
        for x in b:
            block_of[x] = bi
    for b in blocks:
        if len(b) < 2:
            continue
        x0 = b[0]
        for x in b[1:]:
            for z in range(u.size):
                if block_of[u.mul(x0, z)] != block_of[u.mul(x, z)]:
                    return False
    return True


@dataclass
class CovLattice:
    """The lattice of MFCE relations on U(v), standing for the covers of v.

    `refines[i][j]` is the refinement order (diagonal at the bottom, the
    fiber relation at the top); under the cover reading the order reverses,
    so the diagonal stands for phi_v and the fiber relation for v itself.
    hasse lists the immediate refinement pairs (finer, coarser).
    """

    relations: tuple[MFCERelation, ...]
    refines: tuple[tuple[bool, ...], ...]
    hasse: tuple[tuple[int, int], ...]
    top: int
    bottom: int
    carrier: FiniteSupertropical

    def to_json(self) -> dict:
        return {
            "nodes": [
                {
                    "id": i,
                    "blocks": [list(b) for b in rel.block_names()],
                    "label": "phi_v" if i == self.bottom else "v" if i == self.top else None,
                }
                for i, rel in enumerate(self.relations)
            ],
            "hasse": [list(e) for e in self.hasse],
            "top": self.top,
            "bottom": self.bottom,
        }

    def to_dot(self) -> str:
        lines = ["digraph cov {"]
        for i, rel in enumerate(self.relations):
            body = " ".join(
                "{" + ",".join(names) + "}" for names in rel.block_names()
            )
            if i == self.bottom:
                label = f"phi_v\\n{body}"
            elif i == self.top:
                label = f"v\\n{body}"
            else:
                label = body
            lines.append(f'  n{i} [label="{label}"];')
        # edges point from dominating cover to dominated, phi_v at the top
        for finer, coarser in self.hasse:
            lines.append(f"  n{finer} -> n{coarser};")
        lines.append("}")
        return "\n".join(lines)


def mfc_lattice(u: FiniteSupertropical, bound: int = 12) -> CovLattice:
    """All MFCE relations on a fixture, with refinement order and Hasse edges."""
    rels = enumerate_mfce(u, bound)
    n = len(rels)
    refines = tuple(
        tuple(rels[i].refines(rels[j]) for j in range(n)) for i in range(n)
    )
    edges = []
    for i in range(n):
        for j in range(n):
            if i == j or not refines[i][j]:
                continue
            between = any(
                k not in (i, j) and refines[i][k] and refines[k][j] for k in range(n)
            )
            if not between:
                edges.append((i, j))
    bottom = rels.index(diagonal(u))
    top = rels.index(e_nu(u))
    return CovLattice(tuple(rels), refines, tuple(edges), top, bottom, u)


def cov_lattice(v: MValuationInstance, bound: int = 12,
                name_of: Callable = repr) -> CovLattice:
    """The cover lattice of a finite m-valuation, through U(v)."""
    u_str, _phi = initial_cover(v)
    fs, _elems = materialize(u_str, name_of)
    return mfc_lattice(fs, bound)


def sup_cover(psis: list[Supervaluation], name: Optional[str] = None) -> Supervaluation:
    """The supremum of covers of one v: the equalized-ghost product.

    V is the subsemiring of the product of the targets consisting of tuples
    whose components all have the same ghost shadow (read through the shared
    cover), and psi(a) = (psi_i(a))_i. Requires finite targets, a finite
    ring, and ghost-surjective components.
    """
    if not psis:
        raise WitnessError("need at least one supervaluation")
    ring = psis[0].ring
    if not ring.domain.finite:
        raise WitnessError("sup_cover needs a finite ring")
    targets = []
    for p in psis:
        if not isinstance(p.target, FiniteSupertropical):
            raise WitnessError("sup_cover needs finite fixture targets", (p.name,))
        targets.append(p.target)

    # label every component ghost with the matching ghost of component 0
    labels: list[dict[int, int]] = [dict() for _ in targets]
    for i, (p, t) in enumerate(zip(psis, targets)):
        labels[i][t.zero] = targets[0].zero
        for a in ring.domain.elements:
            g = t.nu_of(p.phi(a))
            key = targets[0].nu_of(psis[0].phi(a))
            if labels[i].setdefault(g, key) != key:
                raise WitnessError("components do not cover the same v", (p.name, a))
        for g in t.ghost_ideal:
            if g not in labels[i]:
                raise WitnessError("component misses a ghost value", (p.name, t.name(g)))
        if len(set(labels[i].values())) != len(labels[i]):
            raise WitnessError("component ghost ideal collapses", (p.name,))

    tuples = [
        xs
        for xs in itertools.product(*(range(t.size) for t in targets))
        if len({labels[i][t.nu_of(x)] for i, (t, x) in enumerate(zip(targets, xs))}) == 1
    ]
    index = {xs: k for k, xs in enumerate(tuples)}

    def joint(op_name, xs, ys):
        out = tuple(
            getattr(t, op_name)(x, y) for t, x, y in zip(targets, xs, ys)
        )
        if out not in index:
            raise WitnessError("equalized product not closed", (xs, ys))
        return index[out]

    n = len(tuples)
    add = tuple(tuple(joint("add", tuples[i], tuples[j]) for j in range(n)) for i in range(n))
    mul = tuple(tuple(joint("mul", tuples[i], tuples[j]) for j in range(n)) for i in range(n))
    names = tuple(
        "(" + "|".join(t.name(x) for t, x in zip(targets, xs)) + ")" for xs in tuples
    )
    zero = index[tuple(t.zero for t in targets)]
    one = index[tuple(t.one for t in targets)]
    v_fs = finite_from_table(FiniteSemiringTable(names, zero, one, add, mul))

    def phi(a):
        return index[tuple(p.phi(a) for p in psis)]

    return Supervaluation(
        name=name or ("sup(" + ", ".join(p.name for p in psis) + ")"),
        ring=ring,
        target=v_fs,
        phi=phi,
    )


# ---------------------------------------------------------------------------
# Leading-term constructions for instances with the matching oracles.

def sv_relation(val: MValuationInstance) -> Callable[[object, object], bool]:
    """The decision procedure for a1 ~_v a2.

    Uses the instance's dedicated oracle when present, else leading-term
    equality (two elements are equivalent iff both sit in the support or
    share a leading term). Instances without either oracle are unsupported.
    """
    if val.sv_equiv is not None:
        return val.sv_equiv
    if val.leading_term is not None:
        lt = val.leading_term

        def eq(a, b):
            sa, sb = val.in_support(a), val.in_support(b)
            if sa or sb:
                return sa and sb
            return lt(a) == lt(b)

        return eq
    raise WitnessError(f"{val.name} has no equivalence oracle")


def initial_very_strong(val: MValuationInstance):
    """The finest very strong cover: classes named by their leading terms.

    Returns (structure, supervaluation); the supervaluation sends a to the
    tangible copy of its leading term, and its ghost shadow is v.
    """
    if val.leading_term is None:
        raise WitnessError(f"{val.name} has no leading-term oracle")
    lt = val.leading_term
    ring = val.ring
    if ring.domain.finite:
        reps = dict.fromkeys(
            lt(a) for a in ring.domain.elements if not val.in_support(a)
        )
        dom = Domain(elements=tuple(reps))
    else:
        def draw(rng):
            for _ in range(1000):
                a = ring.domain.draw(rng)
                if not val.in_support(a):
                    return lt(a)
            raise WitnessError("sampler kept hitting the support")

        dom = Domain(sample=draw)
    tangibles = Monoid("leading terms of " + val.name, ring.one, ring.mul, dom)
    u = STRStructure(
        name="Ubar(" + val.name + ")",
        tangibles=tangibles,
        ghosts=_nonzero_value_monoid(val),
        v=val.v,
    )

    def phi(a):
        return ZERO if val.in_support(a) else tangible(lt(a))

    return u, Supervaluation("phibar_" + val.name, ring, u, phi)


def hat_v(val: MValuationInstance, samples: int = 400, seed: int = 0) -> Supervaluation:
    """The tangible lift of v into D(M) (the unique tangible cover there)."""
    g = monoid_of(val.target)
    _require_cancellative(g, samples, seed)
    d = d_of(g)

    def phi(a):
        m = val.v(a)
        return ZERO if m == val.target.zero else tangible(m)

    return Supervaluation("hat_" + val.name, val.ring, d, phi)


def check_unit_equivalence(val: MValuationInstance, samples: int = 500,
                           truncation: int = 6, seed: int = 0) -> Report:
    """On a field-like instance, the three descriptions of ~_v 1 agree.

    For sampled units a: a ~_v 1 (relation oracle) iff the leading term of a
    is 1 iff a lies in the group generated by 1 + m_v, where membership is
    decided on the truncated expansion of a (constant term 1, nothing below
    order zero, checked as v(expansion - 1) < 1). Also confirms that the
    value-1 elements are exactly the invertibles with value-1 inverse.
    """
    for oracle in ("unit_sample", "leading_term", "invert", "expand"):
        if getattr(val, oracle) is None:
            raise WitnessError(f"{val.name} has no {oracle} oracle")
    eq = sv_relation(val)
    ring, m = val.ring, val.target
    rng = random.Random(seed)
    c = Checker(f"sampled({samples})")
    one = m.one
    ones = 0
    for _ in range(samples):
        a = val.unit_sample(rng)
        by_rel = eq(a, ring.one)
        by_lt = val.leading_term(a) == ring.one
        series = val.expand(a, truncation)
        d = ring.sub(series, ring.one)
        by_member = d == ring.zero or (m.le(val.v(d), one) and val.v(d) != one)
        c.expect("relation matches leading term", by_rel == by_lt, (a,))
        c.expect("leading term matches subgroup membership", by_lt == by_member, (a,))
        if by_lt:
            ones += 1
        inv = val.invert(a)
        c.expect(
            "value-1 elements are the order units",
            (val.v(a) == one) == (m.le(val.v(a), one) and m.le(val.v(inv), one)),
            (a,),
        )
    c.info["units_equivalent_to_one"] = ones
    c.info["truncation"] = truncation
    return c.report()
