"""Report containers shared by the validators and the exactness certificates.

Reports are plain data, deterministic in content and ordering, and convert
to JSON-safe dictionaries (ints, strings, bools, lists, dicts only).
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Violation:
    law: str
    witness: tuple
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"law": self.law, "witness": [str(w) for w in self.witness]}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class ValidationReport:
    subject: str
    violations: list[Violation] = field(default_factory=list)
    flags: dict = field(default_factory=dict)
    axiom_status: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.violations

    def record(self, law: str, witness: tuple, detail: str = ""):
        self.violations.append(Violation(law, witness, detail))
        if law in self.axiom_status:
            self.axiom_status[law] = False

    def to_dict(self) -> dict:
        out = {
            "subject": self.subject,
            "valid": self.valid,
            "violations": [v.to_dict() for v in self.violations],
        }
        if self.flags:
            out["flags"] = dict(self.flags)
        if self.axiom_status:
            out["axioms"] = dict(self.axiom_status)
        return out


@dataclass
class CheckItem:
    name: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"name": self.name, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class ExactnessReport:
    subject: str
    items: list[CheckItem] = field(default_factory=list)
    dims: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(item.ok for item in self.items)

    def check(self, name: str, ok: bool, detail: str = ""):
        self.items.append(CheckItem(name, bool(ok), detail))

    def failures(self) -> list[CheckItem]:
        return [i for i in self.items if not i.ok]

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [i.to_dict() for i in self.items],
            "dims": dict(self.dims),
        }
