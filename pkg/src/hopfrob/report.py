"""Pass/fail reports shared by the axiom checkers and the bijection verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    """Verdict for one property; on failure, the first violating witness."""

    name: str
    passed: bool
    witness: Any = None
    lhs: Any = None
    rhs: Any = None
    detail: str = ""

    def describe(self) -> str:
        if self.passed:
            return f"{self.name}: pass" + (f" ({self.detail})" if self.detail else "")
        msg = f"{self.name}: FAIL"
        if self.witness is not None:
            w = self.witness
            msg += " at " + ("(" + ", ".join(str(x) for x in w) + ")" if isinstance(w, tuple) else str(w))
        if self.lhs is not None or self.rhs is not None:
            msg += f"; lhs={_fmt(self.lhs)} rhs={_fmt(self.rhs)}"
        if self.detail:
            msg += f" ({self.detail})"
        return msg


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)


@dataclass
class Report:
    """An ordered collection of :class:`Check` results."""

    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def record(self, name: str, passed: bool, **kw) -> Check:
        return self.add(Check(name, passed, **kw))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def render(self) -> str:
        lines = [self.title]
        lines += ["  " + c.describe() for c in self.checks]
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()


def first_mismatch(pairs):
    """First ``(witness, lhs, rhs)`` with ``lhs != rhs`` from an iterable, else None."""
    for witness, lhs, rhs in pairs:
        if list(lhs) != list(rhs):
            return witness, lhs, rhs
    return None


def check_equal_family(name: str, pairs) -> Check:
    hit = first_mismatch(pairs)
    if hit is None:
        return Check(name, True)
    witness, lhs, rhs = hit
    return Check(name, False, witness=witness, lhs=list(lhs), rhs=list(rhs))


class TheoremViolation(AssertionError):
    """Two routes that must agree by a theorem disagreed; always a bug."""
