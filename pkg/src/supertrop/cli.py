"""Command-line surface: validate tables, build MFCE lattices, run
tropicalization experiments, and query corner loci.

Machine-readable output (JSON, or DOT for lattices) goes to stdout or --out;
one-line human summaries go to stderr. Identical invocations produce
byte-identical output, so reports can be diffed across runs.

Exit codes: 0 ok, 1 witnesses or failed trials, 2 parse/input errors,
3 carrier bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .core_order import (
    FiniteSemiringTable,
    check_bipotent,
    check_semiring_axioms,
    theta_semiring,
)
from .equiv_lattice import check_mfce, hat_v, mfc_lattice, t_e_of
from .superval import is_tangibly_additive
from .fixtures import data_dir, fixture_names
from .instances import padic_valuation, puiseux_valuation
from .parsing import ParseError, parse_point, parse_polynomial
from .reporting import BoundExceeded, WitnessError
from .supertropical import (
    FiniteSupertropical,
    check_supertropical_axioms,
    finite_from_json,
    finite_from_table,
)
from .trop_poly import (
    check_ub_semiring,
    coeff_map,
    corner_query,
    evaluate,
    kapranov_corner_check,
    kapranov_gs_check,
    manufactured_root_trial,
)

OK, WITNESSES, PARSE_ERROR, BOUND = 0, 1, 2, 3


@dataclass
class RunConfig:
    seed: int = 42
    samples: int = 1000
    degree_bound: int = 4
    var_bound: int = 3
    carrier_bound: int = 12
    output: Optional[str] = None

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        return cls(
            seed=args.seed,
            samples=getattr(args, "samples", 1000),
            degree_bound=getattr(args, "deg", 4),
            var_bound=getattr(args, "vars", 3),
            carrier_bound=getattr(args, "bound", 12),
            output=args.out,
        )


def _default_seed() -> int:
    raw = os.environ.get("STV_SEED")
    if raw is None:
        return 42
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"STV_SEED is not an integer: {raw!r}")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit(body: str, out: Optional[str]) -> None:
    if not body.endswith("\n"):
        body += "\n"
    if out is None or out == "-":
        sys.stdout.write(body)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(body)


def _json_body(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _load_doc(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_table(path: str) -> FiniteSemiringTable:
    return FiniteSemiringTable.from_json(_load_doc(path))


def _load_supertropical(path: str) -> FiniteSupertropical:
    doc = _load_doc(path)
    if "e" in doc and "nu" in doc:
        return finite_from_json(doc)
    return finite_from_table(FiniteSemiringTable.from_json(doc))


def _load_partition(path: str, u: FiniteSupertropical) -> list[tuple[int, ...]]:
    doc = _load_doc(path)
    if not isinstance(doc, list):
        raise ParseError(f"{path}: partition file must be a JSON list of blocks")
    blocks = []
    for block in doc:
        if not isinstance(block, list):
            raise ParseError(f"{path}: each block must be a list")
        resolved = []
        for x in block:
            if isinstance(x, int):
                resolved.append(x)
            else:
                resolved.append(u.table.index(str(x)))
        blocks.append(tuple(resolved))
    return blocks


# ---------------------------------------------------------------------------
# check

_SUITES = ("semiring", "bipotent", "supertropical", "ub", "mfce")


def cmd_check(args) -> int:
    if args.which == "mfce":
        if not args.partition:
            raise ParseError("--partition is required for the mfce suite")
        u = _load_supertropical(args.table)
        rep = check_mfce(u, _load_partition(args.partition, u))
    elif args.which == "supertropical":
        rep = check_supertropical_axioms(_load_table(args.table))
    elif args.which == "semiring":
        rep = check_semiring_axioms(_load_table(args.table))
    elif args.which == "bipotent":
        rep = check_bipotent(_load_table(args.table))
    else:
        rep = check_ub_semiring(_load_table(args.table))

    doc = rep.to_json()
    doc["command"] = "check"
    doc["suite"] = args.which
    doc["input"] = os.path.basename(args.table)
    if args.format == "text":
        lines = [f"{args.which} on {doc['input']}: {'ok' if rep.ok else 'FAIL'}"]
        lines += [f"  checked {name}" for name in doc["checked"]]
        lines += [f"  witness {axiom}: {w}" for axiom, w in doc["witnesses"]]
        _emit("\n".join(lines), args.out)
    else:
        _emit(_json_body(doc), args.out)
    verdict = "ok" if rep.ok else f"{len(rep.witnesses)} witness(es)"
    _say(f"check {args.which} on {args.table}: {verdict}")
    return OK if rep.ok else WITNESSES


# ---------------------------------------------------------------------------
# lattice

def _subgroups(u: FiniteSupertropical, group: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All subsets of a finite group closed under the table product."""
    rest = [g for g in group if g != u.one]
    found = []
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            cand = (u.one, *extra)
            inside = set(cand)
            if all(u.mul(a, b) in inside for a in cand for b in cand):
                found.append(cand)
    return found


def _tangible_group_data(u: FiniteSupertropical, relations: int) -> Optional[dict]:
    te = t_e_of(u)
    if not te:
        return None
    inside = set(te)
    if u.one not in inside:
        return None
    for a in te:
        if any(u.mul(a, b) not in inside for b in te):
            return None
        if not any(u.mul(a, b) == u.one for b in te):
            return None
    subgroups = _subgroups(u, te)
    # expected: one orbital relation per subgroup, plus the full fiber relation
    expected = len(subgroups) + 1
    return {
        "tangible_group": [u.name(i) for i in te],
        "subgroups": len(subgroups),
        "expected_relations": expected,
        "relations": relations,
        "match": expected == relations,
    }


def cmd_lattice(args) -> int:
    cfg = RunConfig.from_args(args)
    u = _load_supertropical(args.table)
    if u.size > cfg.carrier_bound:
        raise BoundExceeded(f"carrier size {u.size} exceeds bound {cfg.carrier_bound}")
    lat = mfc_lattice(u, cfg.carrier_bound)
    doc = lat.to_json()
    doc["command"] = "lattice"
    doc["input"] = os.path.basename(args.table)
    cross = _tangible_group_data(u, len(lat.relations))
    if cross is not None:
        doc["subgroup_crosscheck"] = cross
    if args.format == "dot":
        _emit(lat.to_dot(), args.out)
    elif args.format == "text":
        lines = [f"{len(lat.relations)} MFCE relation(s) on {doc['input']}"]
        for i, rel in enumerate(lat.relations):
            blocks = " ".join("{" + ",".join(n) + "}" for n in rel.block_names())
            lines.append(f"  [{i}] {blocks}")
        _emit("\n".join(lines), args.out)
    else:
        _emit(_json_body(doc), args.out)
    note = ""
    if cross is not None:
        note = " (subgroup cross-check {})".format("ok" if cross["match"] else "MISMATCH")
    _say(f"lattice on {args.table}: {len(lat.relations)} relation(s){note}")
    if cross is not None and not cross["match"]:
        return WITNESSES
    return OK


# ---------------------------------------------------------------------------
# kapranov

def _kapranov_instance(name: str):
    if name == "puiseux":
        val = puiseux_valuation()
    else:
        val = padic_valuation(2)
    return val, hat_v(val)


def cmd_kapranov(args) -> int:
    cfg = RunConfig.from_args(args)
    val, sv = _kapranov_instance(args.instance)
    ring = val.ring
    # SV5 precondition of the gs check, reported separately from trial failures
    sv5 = is_tangibly_additive(sv, samples=200, seed=cfg.seed)
    rng = random.Random(cfg.seed)
    corner_pass = gs_pass = failures = rejected = 0
    first_witness = None
    for trial in range(cfg.samples):
        nvars = rng.randint(1, cfg.var_bound)
        f, a = manufactured_root_trial(ring, rng, nvars, cfg.degree_bound)
        if args.inject_nonroot:
            a = tuple(ring.domain.draw(rng) for _ in range(nvars))
            if evaluate(ring, f, a) != ring.zero:
                rejected += 1
                continue
        corner = kapranov_corner_check(val, f, a)
        gs_rep = kapranov_gs_check(sv, f, a)
        corner_pass += corner.ok
        gs_pass += gs_rep.ok
        if not (corner.ok and gs_rep.ok):
            failures += 1
            if first_witness is None:
                bad = corner if not corner.ok else gs_rep
                first_witness = {
                    "trial": trial,
                    "poly": repr(f),
                    "point": [repr(x) for x in a],
                    "witnesses": [[axiom, repr(w)] for axiom, w in bad.witnesses],
                }
    checked = cfg.samples - rejected
    doc = {
        "command": "kapranov",
        "instance": args.instance,
        "seed": cfg.seed,
        "samples": cfg.samples,
        "degree_bound": cfg.degree_bound,
        "var_bound": cfg.var_bound,
        "checked": checked,
        "corner_pass": corner_pass,
        "gs_pass": gs_pass,
        "failures": failures,
        "rejected_precondition": rejected,
        "tangibly_additive": sv5.ok,
        "first_witness": first_witness,
    }
    if args.format == "text":
        lines = [
            f"kapranov {args.instance}: {checked} trial(s), "
            f"corner {corner_pass}/{checked}, gs {gs_pass}/{checked}, "
            f"{rejected} precondition rejection(s)",
        ]
        if first_witness is not None:
            lines.append(f"  first witness: {first_witness}")
        _emit("\n".join(lines), args.out)
    else:
        _emit(_json_body(doc), args.out)
    _say(
        f"kapranov {args.instance} seed={cfg.seed}: corner {corner_pass}/{checked}, "
        f"gs {gs_pass}/{checked}, rejected {rejected}"
    )
    return WITNESSES if failures or not sv5.ok else OK


# ---------------------------------------------------------------------------
# corner

def cmd_corner(args) -> int:
    f = parse_polynomial(args.poly)
    point = parse_point(args.point)
    if len(point) < f.nvars:
        raise ParseError(
            f"polynomial uses {f.nvars} variable(s) but the point has {len(point)}"
        )
    point = point[: f.nvars]
    val = puiseux_valuation()
    m = theta_semiring()
    trop = coeff_map(val.v, f, m.zero)
    rep = corner_query(m, trop, tuple(val.v(x) for x in point))
    doc = rep.to_json()
    doc["command"] = "corner"
    doc["poly"] = args.poly
    doc["tropicalized"] = repr(trop)
    if args.format == "text":
        verdict = "in the corner locus" if rep.in_locus else "not in the corner locus"
        _emit(
            f"{args.poly} at {args.point}: {verdict}; "
            f"dominating monomials {doc['dominating']}, value {doc['value']}",
            args.out,
        )
    else:
        _emit(_json_body(doc), args.out)
    _say(f"corner: in_locus={rep.in_locus} with {len(rep.dominating)} dominating term(s)")
    return OK


# ---------------------------------------------------------------------------
# fixtures (convenience: list or dump the packaged tables)

def cmd_fixtures(args) -> int:
    names = fixture_names()
    if args.name is None:
        _emit(_json_body({"command": "fixtures", "names": list(names)}), args.out)
        _say(f"{len(names)} packaged fixture(s)")
        return OK
    if args.name not in names:
        raise ParseError(f"unknown fixture {args.name!r}; choices: {', '.join(names)}")
    path = data_dir() / f"{args.name}.json"
    _emit(path.read_text(encoding="utf-8"), args.out)
    _say(f"fixture {args.name} from {path}")
    return OK


# ---------------------------------------------------------------------------
# wiring

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stv",
        description="Supertropical valuation toolkit: validators, lattices, "
        "tropicalization trials, corner queries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, samples=False, poly_knobs=False, bound=False):
        p.add_argument("--seed", type=int, default=None, help="RNG seed (default 42, or STV_SEED)")
        if samples:
            p.add_argument("--samples", type=int, default=1000)
        if poly_knobs:
            p.add_argument("--deg", type=int, default=4, help="degree bound")
            p.add_argument("--vars", type=int, default=3, help="variable bound")
        if bound:
            p.add_argument("--bound", type=int, default=12, help="carrier size bound")
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument("--format", choices=("json", "dot", "text"), default="json")

    p = sub.add_parser("check", help="run an axiom suite on a table file")
    p.add_argument("table", help="JSON table file")
    p.add_argument("--which", choices=_SUITES, required=True)
    p.add_argument("--partition", default=None, help="JSON partition file (mfce)")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("lattice", help="enumerate MFCE relations and emit the Hasse diagram")
    p.add_argument("table", help="JSON supertropical table file")
    common(p, bound=True)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("kapranov", help="manufactured-root tropicalization trials")
    p.add_argument("--instance", choices=("puiseux", "padic"), default="puiseux")
    p.add_argument(
        "--inject-nonroot",
        action="store_true",
        help="replace each root with a random point; non-roots count as precondition rejections",
    )
    common(p, samples=True, poly_knobs=True)
    p.set_defaults(func=cmd_kapranov)

    p = sub.add_parser("corner", help="corner-locus query for a tropical polynomial")
    p.add_argument("poly", help='polynomial text, e.g. "x1^2 + x1 + 1"')
    p.add_argument("point", help='point text, e.g. "1" or "t^2, t"')
    common(p)
    p.set_defaults(func=cmd_corner)

    p = sub.add_parser("fixtures", help="list or dump packaged fixture tables")
    p.add_argument("name", nargs="?", default=None)
    common(p)
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = _default_seed()
        if args.format == "dot" and args.command != "lattice":
            raise ParseError("--format dot is only available for the lattice command")
        return args.func(args)
    except BoundExceeded as exc:
        _say(f"error: {exc}")
        return BOUND
    except (ParseError, WitnessError, json.JSONDecodeError, OSError) as exc:
        _say(f"error: {exc}")
        return PARSE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
