"""Certification records and deterministic report serialization.

A report is a list of check records for one algebra instance.  The JSON
form is byte-stable: keys are sorted, values are exact decimal or
fraction strings, and nothing time- or host-dependent is included, so
rerunning the same certification yields the identical document.
"""

import json

from . import __version__

PASS = "pass"
FAIL = "fail"
SKIP = "skipped"


class CheckRecord:
    """Outcome of one certification check."""

    __slots__ = ("check_id", "identity", "params", "status", "detail", "note")

    def __init__(self, check_id, identity, params, status, detail=None, note=""):
        if status not in (PASS, FAIL, SKIP):
            raise ValueError(f"unknown status {status!r}")
        self.check_id = check_id
        self.identity = identity
        self.params = dict(params)
        self.status = status
        self.detail = {k: str(v) for k, v in (detail or {}).items()}
        self.note = note

    def to_dict(self):
        return {
            "check": self.check_id,
            "identity": self.identity,
            "params": self.params,
            "status": self.status,
            "detail": self.detail,
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            d["check"], d["identity"], d["params"], d["status"],
            d.get("detail"), d.get("note", ""),
        )


class Report:
    """All check records for one run, with deterministic rendering."""

    __slots__ = ("algebra", "n", "records")

    def __init__(self, algebra: str, n: int, records=None):
        self.algebra = algebra
        self.n = n
        self.records = list(records or [])

    @property
    def family(self) -> str:
        return f"{self.algebra}({2 * self.n})"

    def add(self, record: CheckRecord):
        self.records.append(record)

    def counts(self):
        out = {PASS: 0, FAIL: 0, SKIP: 0}
        for r in self.records:
            out[r.status] += 1
        return out

    @property
    def status(self) -> str:
        return FAIL if any(r.status == FAIL for r in self.records) else PASS

    def to_dict(self):
        c = self.counts()
        return {
            "schema": 1,
            "tool": {"name": "liecert", "version": __version__},
            "algebra": self.algebra,
            "n": self.n,
            "family": self.family,
            "status": self.status,
            "summary": {
                "total": len(self.records),
                "passed": c[PASS],
                "failed": c[FAIL],
                "skipped": c[SKIP],
            },
            "checks": [r.to_dict() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        if d.get("schema") != 1:
            raise ValueError("unsupported report schema")
        report = cls(d["algebra"], d["n"])
        for c in d["checks"]:
            report.add(CheckRecord.from_dict(c))
        return report

    def to_text(self) -> str:
        c = self.counts()
        lines = [
            f"liecert certification: {self.family}",
            f"status: {self.status} "
            f"({c[PASS]} passed, {c[FAIL]} failed, {c[SKIP]} skipped)",
            "",
        ]
        for r in self.records:
            tag = r.status.upper()
            lines.append(f"[{tag}] {r.check_id}: {r.identity}")
            extras = dict(r.detail)
            shown = " ".join(f"{k}={v}" for k, v in sorted(extras.items()))
            if shown:
                lines.append(f"    {shown}")
            if r.note:
                lines.append(f"    note: {r.note}")
        lines.append("")
        return "\n".join(lines)
