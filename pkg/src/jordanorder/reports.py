"""Sampling specs and axiom reports.

Every property checker in the package takes a :class:`SampleSpec` and
returns an :class:`AxiomReport`.  Reports render deterministically so that
two runs with the same seed give byte-identical output.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Any

DEFAULT_SEED = 0
DEFAULT_CASES = 1000
DEFAULT_BOUND = 10


@dataclass(frozen=True)
class SampleSpec:
    seed: int = DEFAULT_SEED
    cases: int = DEFAULT_CASES
    bound: int = DEFAULT_BOUND

    def rng(self, salt: str = "") -> random.Random:
        # string seeds are hashed with sha512 by Random, so this is stable
        # across interpreter runs (unlike hash()).
        return random.Random(f"{self.seed}:{salt}")

    def with_cases(self, cases: int) -> "SampleSpec":
        return SampleSpec(self.seed, cases, self.bound)


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    cases: int = 0
    skipped: int = 0
    witness: dict | None = None
    note: str = ""
    nontrivial: int = 0

    def record(self, ok: bool, witness_fn=None, premise: bool = True) -> None:
        """Count one evaluated case; keep the first failing witness.

        ``premise`` marks whether an implication was non-vacuous here.
        """
        self.cases += 1
        if premise:
            self.nontrivial += 1
        if not ok and self.passed:
            self.passed = False
            self.witness = witness_fn() if witness_fn is not None else {}

    def skip(self) -> None:
        self.skipped += 1

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


@dataclass
class AxiomReport:
    title: str
    instance: str
    seed: int
    cases: int
    checks: list[CheckResult] = field(default_factory=list)
    exploratory: bool = False
    findings: list[dict] = field(default_factory=list)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        c = CheckResult(name)
        self.checks.append(c)
        return c

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def ok(self) -> bool:
        """True when every check passed; exploratory reports are never failing."""
        return self.exploratory or all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "title": self.title,
            "instance": self.instance,
            "seed": self.seed,
            "cases": self.cases,
            "exploratory": self.exploratory,
            "checks": [
                {
                    "name": c.name,
                    "status": c.status,
                    "cases": c.cases,
                    "skipped": c.skipped,
                    "witness": c.witness,
                    "note": c.note,
                }
                for c in self.checks
            ],
            "findings": self.findings,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        mode = " (exploratory)" if self.exploratory else ""
        lines = [
            f"# {self.title}{mode}",
            f"instance: {self.instance}",
            f"seed: {self.seed}  cases: {self.cases}",
        ]
        for c in self.checks:
            line = f"{c.status}  {c.name}  evaluated={c.cases} skipped={c.skipped}"
            if c.note:
                line += f"  ({c.note})"
            lines.append(line)
            if c.witness is not None:
                lines.append("      witness: " + json.dumps(c.witness, sort_keys=True))
        for f in self.findings:
            lines.append("finding: " + json.dumps(f, sort_keys=True))
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.to_text()
