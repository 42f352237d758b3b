"""Exception types and the small report record shared by the verifiers."""
from __future__ import annotations

from dataclasses import dataclass, field


class CycsoergelError(Exception):
    pass


class DivisionByZero(CycsoergelError, ZeroDivisionError):
    pass


class ContextMismatch(CycsoergelError, ValueError):
    pass


class InvalidSplit(CycsoergelError, ValueError):
    pass


class InvalidParameter(CycsoergelError, ValueError):
    pass


class InternalInconsistency(CycsoergelError, RuntimeError):
    """Raised when a multiset rewrite that must succeed does not."""


class VerificationFailure(CycsoergelError, AssertionError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass
class Report:
    """Named pass/fail checks collected by a verifier."""

    name: str
    checks: list[tuple[str, bool]] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def record(self, label: str, ok: bool, witness=None) -> None:
        self.checks.append((label, bool(ok)))
        if not ok:
            raise VerificationFailure(f"{self.name}: {label}", witness)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def lines(self) -> list[str]:
        return [f"{'PASS' if ok else 'FAIL'} {self.name}: {label}" for label, ok in self.checks]
