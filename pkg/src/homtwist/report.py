"""Axiom sweep outcomes.

Checkers never raise on a failed identity; failure is data.  A report is a
pass verdict or a list of counterexamples, each recording the raw input
tuple together with rendered left and right sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Counterexample:
    inputs: tuple
    rendered_inputs: tuple
    lhs: str
    rhs: str

    def to_dict(self):
        return {
            "inputs": list(self.rendered_inputs),
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass
class CheckReport:
    name: str
    equation: str = ""
    checked: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def record(self, inputs, rendered_inputs, lhs, rhs):
        self.counterexamples.append(
            Counterexample(tuple(inputs), tuple(rendered_inputs), str(lhs), str(rhs))
        )

    def merge(self, other: "CheckReport") -> "CheckReport":
        merged = CheckReport(
            name=f"{self.name} & {other.name}",
            equation=self.equation or other.equation,
            checked=self.checked + other.checked,
        )
        merged.counterexamples = self.counterexamples + other.counterexamples
        return merged

    def summary(self) -> str:
        tag = f" [{self.equation}]" if self.equation else ""
        if self.passed:
            return f"PASS {self.name}{tag}: {self.checked} cases"
        return (
            f"FAIL {self.name}{tag}: {len(self.counterexamples)} counterexamples "
            f"out of {self.checked} cases"
        )

    def to_dict(self):
        return {
            "name": self.name,
            "equation": self.equation,
            "status": "pass" if self.passed else "fail",
            "checked": self.checked,
            "counterexamples": [ce.to_dict() for ce in self.counterexamples],
        }


class RangeEscapeError(RuntimeError):
    """An oracle produced a value outside the carrier's known basis."""
