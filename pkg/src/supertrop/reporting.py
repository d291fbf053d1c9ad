"""Shared check-report machinery.

Every validator in this package returns a Report: the list of axiom names it
checked, the witnesses it found (empty means pass), and whether the coverage
was exhaustive or sampled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


def exhaustive() -> str:
    return "exhaustive"


def sampled(n: int) -> str:
    return f"sampled({n})"


@dataclass
class Report:
    checked: list[str]
    witnesses: list[tuple[str, tuple]]
    mode: str
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.witnesses

    def witnesses_for(self, axiom: str) -> list[tuple]:
        return [w for (name, w) in self.witnesses if name == axiom]

    def to_json(self) -> dict:
        return {
            "checked": sorted(self.checked),
            "mode": self.mode,
            "ok": self.ok,
            "witnesses": sorted(
                [name, [repr(x) for x in wit]] for (name, wit) in self.witnesses
            ),
            "info": {k: _jsonable(v) for k, v in sorted(self.info.items())},
        }


def _jsonable(value: Any):
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in value]
        if isinstance(value, (set, frozenset)):
            items = sorted(items, key=repr)
        return items
    return repr(value)


class Checker:
    """Accumulates axiom checks into a Report.

    `expect` records a witness when `ok` is false; `max_witnesses` caps the
    number kept per axiom so exhaustive scans of broken tables stay readable.
    """

    def __init__(self, mode: str, max_witnesses: int = 8):
        self.checked: list[str] = []
        self.witnesses: list[tuple[str, tuple]] = []
        self.info: dict = {}
        self.mode = mode
        self.max_witnesses = max_witnesses
        self._counts: dict[str, int] = {}

    def note(self, axiom: str) -> None:
        if axiom not in self.checked:
            self.checked.append(axiom)

    def expect(self, axiom: str, ok: bool, witness: tuple = ()) -> bool:
        self.note(axiom)
        if not ok:
            n = self._counts.get(axiom, 0)
            if n < self.max_witnesses:
                self.witnesses.append((axiom, witness))
            self._counts[axiom] = n + 1
        return ok

    def report(self) -> Report:
        rep = Report(self.checked, self.witnesses, self.mode)
        rep.info = self.info
        return rep


class WitnessError(ValueError):
    """Raised when a precondition fails; carries the offending inputs."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message if not witness else f"{message}: witness {witness!r}")
        self.witness = witness


class BoundExceeded(RuntimeError):
    """Raised when a carrier exceeds the configured enumeration bound."""
