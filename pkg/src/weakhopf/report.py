"""Verdict containers shared by the checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .exactlin import Mor


class LawFailure(AssertionError):
    """A displayed identity that was expected to hold did not."""

    def __init__(self, label: str, witness=None, detail: str = ""):
        self.label = label
        self.witness = witness
        msg = f"({label}) fails"
        if witness is not None:
            msg += f" at entry {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


@dataclass(frozen=True)
class Check:
    label: str
    ok: bool
    witness: tuple | None = None
    kind: str = "axiom"

    def line(self) -> str:
        verdict = "pass" if self.ok else "FAIL"
        s = f"({self.label}) {verdict}"
        if self.witness is not None:
            s += f"  witness={self.witness}"
        if self.kind != "axiom":
            s += f"  [{self.kind}]"
        return s

    def as_dict(self) -> dict:
        return {"label": self.label, "ok": self.ok, "kind": self.kind,
                "witness": list(self.witness) if self.witness is not None else None}


def compare(label: str, lhs: Mor, rhs: Mor, kind: str = "axiom") -> Check:
    """Exact equality check; on failure records the first differing ``(row, col)``."""
    if lhs.shape != rhs.shape:
        return Check(label, False, ("shape", lhs.shape, rhs.shape), kind)
    w = lhs.first_difference(rhs)
    return Check(label, w is None, w, kind)


def compare_all(label: str, mors: Iterable[Mor], kind: str = "axiom") -> Check:
    """All morphisms equal to the first one."""
    mors = list(mors)
    for m in mors[1:]:
        c = compare(label, mors[0], m, kind)
        if not c.ok:
            return c
    return Check(label, True, None, kind)


@dataclass
class Report:
    """Ordered list of checks; ``ok`` only counts checks of kind ``axiom``."""

    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks: Iterable[Check]):
        self.checks.extend(checks)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks if c.kind == "axiom")

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def first_failure(self) -> Check | None:
        f = self.failures
        return f[0] if f else None

    def __getitem__(self, label: str) -> Check:
        for c in self.checks:
            if c.label == label:
                return c
        raise KeyError(label)

    def labels(self) -> list[str]:
        return [c.label for c in self.checks]

    def raise_on_failure(self):
        f = self.first_failure()
        if f is not None:
            raise LawFailure(f.label, f.witness)

    def text(self) -> str:
        lines = [f"== {self.title}"]
        lines += ["  " + c.line() for c in self.checks]
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {"title": self.title, "ok": self.ok, "checks": [c.as_dict() for c in self.checks]}


AxiomReport = Report
IdentityReport = Report
