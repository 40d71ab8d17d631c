"""Pass/fail checklists produced by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .semigroup import first_true


@dataclass(frozen=True)
class Check:
    name: str
    holds: bool
    witness: tuple | None = None

    def to_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds,
                "witness": list(self.witness) if self.witness is not None else None}


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, holds: bool, witness: tuple | None = None) -> Check:
        check = Check(name, bool(holds), witness)
        self.checks.append(check)
        return check

    def add_mask(self, name: str, ok: np.ndarray) -> Check:
        """Record an exhaustive check given the boolean grid of where it holds."""
        ok = np.asarray(ok)
        return self.add(name, bool(ok.all()), first_true(~ok))

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.holds, c.witness))

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.holds]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"title": self.title, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}

    def format_text(self) -> str:
        width = max((len(c.name) for c in self.checks), default=0)
        lines = [self.title]
        for c in self.checks:
            status = "PASS" if c.holds else "FAIL"
            line = f"  {c.name.ljust(width)}  {status}"
            if not c.holds and c.witness is not None:
                line += f"  witness={c.witness}"
            lines.append(line)
        return "\n".join(lines)
