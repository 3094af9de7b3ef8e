from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Union

from .algebra import Index, format_fraction, format_index

Value = Union[Fraction, int, float]


def _value_text(v: Value) -> str:
    if isinstance(v, float):
        return repr(v)
    return format_fraction(Fraction(v))


@dataclass(frozen=True)
class Mismatch:
    degree: int
    index: Index
    expected: Value
    actual: Value

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "index": format_index(self.index),
            "expected": _value_text(self.expected),
            "actual": _value_text(self.actual),
        }


@dataclass
class Report:
    """Outcome of one verification. ``passed`` iff there are no mismatches."""

    identity: str
    parameter: int
    mismatches: List[Mismatch] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "parameter": self.parameter,
            "status": self.status,
            "mismatches": [m.to_dict() for m in self.mismatches],
        }

    def summary(self) -> str:
        line = f"{self.identity} [{self.parameter}]: {self.status}"
        if self.mismatches:
            line += f" ({len(self.mismatches)} mismatches)"
        return line


REPORT_SCHEMA = {
    "type": "object",
    "required": ["identity", "parameter", "status", "mismatches"],
    "properties": {
        "identity": {"type": "string"},
        "parameter": {"type": "integer"},
        "status": {"enum": ["pass", "fail"]},
        "mismatches": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["degree", "index", "expected", "actual"],
                "properties": {
                    "degree": {"type": "integer"},
                    "index": {"type": "string", "pattern": r"^\[(\d+(,\d+)*)?\]$"},
                    "expected": {"type": "string"},
                    "actual": {"type": "string"},
                },
            },
        },
    },
}
