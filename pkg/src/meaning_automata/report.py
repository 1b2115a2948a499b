"""Complexity reports with a human table form and a stable JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Measure:
    name: str
    value: object
    note: str
    expected: str | None = None
    passed: bool | None = None  # None for plain measurements


@dataclass(frozen=True)
class ComplexityReport:
    subject: str
    measures: tuple[Measure, ...] = ()
    caveats: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "measures", tuple(self.measures))
        object.__setattr__(self, "caveats", tuple(self.caveats))
        for m in self.measures:
            if not m.note:
                raise ValueError(f"measure {m.name!r} has no provenance note")

    @property
    def failed(self) -> list[str]:
        return [m.name for m in self.measures if m.passed is False]

    def value(self, name: str):
        for m in self.measures:
            if m.name == name:
                return m.value
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "measures": [
                {
                    "name": m.name,
                    "value": m.value,
                    "expected": m.expected,
                    "passed": m.passed,
                    "note": m.note,
                }
                for m in self.measures
            ],
            "caveats": list(self.caveats),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False, default=str) + "\n"

    def to_text(self) -> str:
        header = ("measure", "value", "expected", "status", "note")
        rows = [
            (
                m.name,
                _fmt(m.value),
                m.expected or "",
                {True: "PASS", False: "FAIL", None: ""}[m.passed],
                m.note,
            )
            for m in self.measures
        ]
        widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
        lines = [self.subject, ""]
        for r in [header, *rows]:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
        if self.caveats:
            lines.append("")
            lines.extend(f"note: {c}" for c in self.caveats)
        return "\n".join(lines) + "\n"


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_fmt(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)
