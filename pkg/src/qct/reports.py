"""Structured verification records and their two output formats."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List

VERDICTS = ("verified", "refuted", "mismatch-reported", "skipped")


@dataclass
class VerificationReport:
    """One identity check: both sides in canonical text plus the verdict."""

    statement: str
    params: dict
    lhs: str
    rhs: str
    verdict: str
    ms: int
    spots: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_json(self) -> str:
        return json.dumps({
            "statement": self.statement,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "verdict": self.verdict,
            "ms": self.ms,
            "spots": self.spots,
        }, sort_keys=True)

    @staticmethod
    def from_json(line: str) -> "VerificationReport":
        d = json.loads(line)
        return VerificationReport(d["statement"], d["params"], d["lhs"],
                                  d["rhs"], d["verdict"], d["ms"], d["spots"])


def _fmt_params(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in sorted(params.items()))


def emit_structured(reports: List[VerificationReport]) -> str:
    return "\n".join(r.to_json() for r in reports) + ("\n" if reports else "")


def emit_human(reports: List[VerificationReport], width: int = 100) -> str:
    lines = []
    for r in reports:
        head = f"[{r.verdict:>17}] {r.statement:<12} {_fmt_params(r.params)}"
        lines.append(head)
        if r.verdict in ("refuted", "mismatch-reported"):
            lhs = r.lhs if len(r.lhs) < width else r.lhs[: width - 3] + "..."
            rhs = r.rhs if len(r.rhs) < width else r.rhs[: width - 3] + "..."
            lines.append(f"    lhs: {lhs}")
            lines.append(f"    rhs: {rhs}")
    counts = {}
    for r in reports:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    total_ms = sum(r.ms for r in reports)
    summary = ", ".join(f"{v}: {counts[v]}" for v in sorted(counts)) or "0 checks"
    lines.append(f"-- {len(reports)} checks ({summary}) in {total_ms} ms")
    return "\n".join(lines) + "\n"


def emit_report(reports: List[VerificationReport], fmt: str = "human") -> str:
    if fmt == "human":
        return emit_human(reports)
    if fmt == "structured":
        return emit_structured(reports)
    raise ValueError(f"unknown report format {fmt!r}")
