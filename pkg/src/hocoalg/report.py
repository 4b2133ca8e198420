"""Check reports: a verdict plus the witnesses that refute it."""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Witness:
    location: str
    residual: str

    def __str__(self) -> str:
        return f"{self.location}: {self.residual}"


@dataclass
class Report:
    check: str
    params: dict[str, Any] = field(default_factory=dict)
    witnesses: list[Witness] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    max_witnesses: int = 20
    #: number of failures seen, including those past ``max_witnesses``
    failures: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def fail(self, location: str, residual: Any) -> None:
        self.failures += 1
        if len(self.witnesses) < self.max_witnesses:
            self.witnesses.append(Witness(location, str(residual)))

    def note(self, msg: str) -> None:
        self.notes.append(msg)

    @contextmanager
    def timed(self):
        t0 = time.perf_counter()
        try:
            yield self
        finally:
            self.elapsed += time.perf_counter() - t0

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "verdict": self.verdict,
            "failures": self.failures,
            "witnesses": [{"location": w.location, "residual": w.residual} for w in self.witnesses],
            "notes": self.notes,
            "elapsed": round(self.elapsed, 4),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __str__(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"[{self.verdict.upper()}] {self.check} ({params}) {self.elapsed:.2f}s"]
        lines += [f"    note: {n}" for n in self.notes]
        lines += [f"    witness {w}" for w in self.witnesses]
        if self.failures > len(self.witnesses):
            lines.append(f"    ... {self.failures - len(self.witnesses)} more failures")
        return "\n".join(lines)
