"""Verification reports and their text/JSON renderings."""
import json
from dataclasses import dataclass, field

from . import __version__

STATUSES = ("pass", "fail", "skip")


@dataclass
class CaseResult:
    name: str
    params: dict
    status: str
    witness: str = None
    ms: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(self.status)
        if self.status == "fail" and not self.witness:
            self.witness = "(no witness recorded)"

    def sort_key(self):
        return (self.name, tuple(sorted(self.params.items())))


@dataclass
class VerificationReport:
    suite: str
    cases: list = field(default_factory=list)
    version: str = __version__
    backend: str = ""

    @property
    def summary(self):
        out = dict.fromkeys(STATUSES, 0)
        for c in self.cases:
            out[c.status] += 1
        return out

    @property
    def ok(self):
        return self.summary["fail"] == 0

    def first_failure(self):
        """The failing case with the lexicographically smallest (name, params)."""
        bad = [c for c in self.cases if c.status == "fail"]
        return min(bad, key=CaseResult.sort_key) if bad else None

    def to_dict(self):
        return {
            "suite": self.suite,
            "version": self.version,
            "cases": [
                {"name": c.name, "params": c.params, "status": c.status,
                 "witness": c.witness, "ms": c.ms}
                for c in self.cases
            ],
            "summary": self.summary,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text):
        raw = json.loads(text)
        rep = cls(raw["suite"], version=raw.get("version", __version__))
        rep.cases = [CaseResult(**c) for c in raw["cases"]]
        if rep.summary != raw["summary"]:
            raise ValueError("summary does not match the case list")
        return rep

    def to_text(self, verbose=False):
        lines = [f"covering-serre {self.version} ({self.backend or 'unknown'} backend)"
                 f"  suite={self.suite}"]
        for c in self.cases:
            if verbose or c.status != "pass":
                args = ",".join(f"{k}={v}" for k, v in c.params.items())
                line = f"  {c.status.upper():4} {c.name}({args}) {c.ms}ms"
                if c.witness:
                    line += f"\n       {c.witness}"
                lines.append(line)
        s = self.summary
        lines.append(f"pass {s['pass']}  fail {s['fail']}  skip {s['skip']}")
        first = self.first_failure()
        if first is not None:
            lines.append(f"first failure: {first.name} {first.params}: {first.witness}")
        return "\n".join(lines) + "\n"
