"""Pass/fail reports produced by the validators and verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field

_GREEN = "\x1b[32m"
_RED = "\x1b[31m"
_RESET = "\x1b[0m"


@dataclass
class CheckLine:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    lines: list = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.lines.append(CheckLine(name, bool(ok), detail))
        return bool(ok)

    def extend(self, other: "Report"):
        self.lines.extend(other.lines)

    @property
    def ok(self) -> bool:
        return all(line.ok for line in self.lines)

    def format(self, color: bool = False) -> str:
        rows = []
        for line in self.lines:
            tag = "PASS" if line.ok else "FAIL"
            if color:
                paint = _GREEN if line.ok else _RED
                tag = f"{paint}{tag}{_RESET}"
            text = f"[{tag}] {line.name}"
            if line.detail:
                text += f": {line.detail}"
            rows.append(text)
        verdict = "OK" if self.ok else "FAILED"
        if color:
            paint = _GREEN if self.ok else _RED
            verdict = f"{paint}{verdict}{_RESET}"
        rows.append(f"overall: {verdict}")
        return "\n".join(rows)
