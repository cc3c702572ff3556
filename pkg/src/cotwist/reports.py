"""Check results with failure witnesses.

A report is a flat list of named checks.  Each check compares two exact
arrays; on failure the witness pins down the first basis index tuple where
the two sides disagree, together with both scalar values, so a failing run
can be replayed by hand.
"""

from dataclasses import dataclass, field

import numpy as np

from .exactlin import scalar_to_str

__all__ = ["Witness", "CheckResult", "AxiomReport", "check_equal", "first_mismatch"]


@dataclass(frozen=True)
class Witness:
    indices: tuple
    lhs: object
    rhs: object

    def to_jsonable(self):
        return {
            "indices": list(self.indices),
            "lhs": scalar_to_str(self.lhs),
            "rhs": scalar_to_str(self.rhs),
        }


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Witness | None = None

    def to_jsonable(self):
        out = {"name": self.name, "passed": self.passed}
        out["witness"] = self.witness.to_jsonable() if self.witness else None
        return out


@dataclass
class AxiomReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failing(self):
        return [c for c in self.checks if not c.passed]

    def add(self, check):
        self.checks.append(check)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_jsonable(self):
        return {
            "passed": self.passed,
            "checks": [c.to_jsonable() for c in self.checks],
        }


def first_mismatch(lhs, rhs):
    """First index tuple where two exact arrays differ, or None."""
    lhs = np.asarray(lhs, dtype=object)
    rhs = np.asarray(rhs, dtype=object)
    if lhs.shape != rhs.shape:
        raise ValueError("mismatched shapes in comparison")
    for idx in np.ndindex(*lhs.shape) if lhs.ndim else [()]:
        if lhs[idx] != rhs[idx]:
            return Witness(idx, lhs[idx], rhs[idx])
    return None


def check_equal(name, lhs, rhs):
    w = first_mismatch(lhs, rhs)
    return CheckResult(name, w is None, w)
