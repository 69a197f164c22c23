from __future__ import annotations

from dataclasses import dataclass, field

MAX_FAILURES = 10


@dataclass
class Failure:
    check: str
    indices: tuple
    lhs: object = None
    rhs: object = None

    def __str__(self):
        idx = ",".join(str(i) for i in self.indices)
        return f"{self.check}[{idx}]: {_short(self.lhs)} != {_short(self.rhs)}"


def _short(x, limit=80):
    if isinstance(x, tuple):
        s = "(" + ", ".join(str(v) for v in x) + ")"
    elif isinstance(x, dict):
        s = "{" + ", ".join(f"{k}: {v}" for k, v in sorted(x.items())) + "}"
    else:
        s = str(x)
    return s if len(s) <= limit else s[: limit - 3] + "..."


@dataclass
class VerificationReport:
    """Outcome of a batch of exact identity checks.

    ``counts`` holds how many instances of each labelled identity were
    evaluated; ``failures`` keeps the first ``MAX_FAILURES`` counterexamples
    while ``n_failed`` keeps the full tally per label.
    """

    title: str
    counts: dict = field(default_factory=dict)
    n_failed: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def check(self, label: str, indices, lhs, rhs) -> bool:
        ok = lhs == rhs
        self.record(label, indices, ok, lhs, rhs)
        return ok

    def record(self, label: str, indices, ok: bool, lhs=None, rhs=None) -> bool:
        self.counts[label] = self.counts.get(label, 0) + 1
        self.n_failed.setdefault(label, 0)
        if not ok:
            self.n_failed[label] += 1
            if len(self.failures) < MAX_FAILURES:
                if not isinstance(indices, tuple):
                    indices = (indices,)
                self.failures.append(Failure(label, indices, lhs, rhs))
        return ok

    def skip(self, label: str, reason: str):
        self.skipped.append((label, reason))

    @property
    def ok(self) -> bool:
        return not any(self.n_failed.values())

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __bool__(self):
        return self.ok

    def failed(self) -> list[str]:
        return [k for k, v in self.n_failed.items() if v]

    def passed(self, label: str) -> bool:
        return label in self.counts and not self.n_failed.get(label)

    def extend(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        for k, v in other.counts.items():
            self.counts[prefix + k] = self.counts.get(prefix + k, 0) + v
        for k, v in other.n_failed.items():
            self.n_failed[prefix + k] = self.n_failed.get(prefix + k, 0) + v
        for f in other.failures:
            if len(self.failures) < MAX_FAILURES:
                self.failures.append(Failure(prefix + f.check, f.indices, f.lhs, f.rhs))
        self.skipped.extend((prefix + k, r) for k, r in other.skipped)
        return self

    def lines(self) -> list[str]:
        out = [f"{self.title}: {'pass' if self.ok else 'FAIL'}"]
        for k in self.counts:
            status = "ok" if not self.n_failed.get(k) else f"{self.n_failed[k]} failed"
            out.append(f"  {k}: {self.counts[k]} checked, {status}")
        for k, r in self.skipped:
            out.append(f"  {k}: skipped ({r})")
        for f in self.failures:
            out.append(f"  ! {f}")
        return out

    def __str__(self):
        return "\n".join(self.lines())
