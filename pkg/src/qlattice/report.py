"""Structured outcome of a single verification."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

STATUSES = ("pass", "fail", "warn")


@dataclass(frozen=True)
class CheckReport:
    suite: str
    check: str
    params: dict = field(default_factory=dict)
    status: str = "pass"
    witness: dict | None = None
    detail: dict | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and not self.witness:
            raise ValueError("a failing report needs a witness")

    @classmethod
    def passed(cls, suite, check, params=None, detail=None) -> CheckReport:
        return cls(suite, check, dict(params or {}), "pass", None, detail)

    @classmethod
    def failed(cls, suite, check, params, witness, detail=None) -> CheckReport:
        return cls(suite, check, dict(params or {}), "fail", witness, detail)

    @classmethod
    def warned(cls, suite, check, params, witness=None, detail=None) -> CheckReport:
        return cls(suite, check, dict(params or {}), "warn", witness, detail)

    @classmethod
    def from_bool(cls, suite, check, params, ok: bool, witness=None, detail=None) -> CheckReport:
        if ok:
            return cls.passed(suite, check, params, detail)
        return cls.failed(suite, check, params, witness or {"note": "check returned false"}, detail)

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def __bool__(self):
        return self.ok

    def sort_key(self):
        return (self.suite, self.check, json.dumps(self.params, sort_keys=True, default=str))

    def to_dict(self) -> dict:
        d = {
            "suite": self.suite,
            "check": self.check,
            "params": self.params,
            "status": self.status,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail is not None:
            d["detail"] = self.detail
        return d

    @classmethod
    def from_dict(cls, d: dict) -> CheckReport:
        return cls(d["suite"], d["check"], d.get("params", {}), d["status"],
                   d.get("witness"), d.get("detail"))


def combine(suite: str, check: str, params: dict, reports) -> CheckReport:
    """Fold several reports into one: first failure wins, then first warning."""
    reports = list(reports)
    for rep in reports:
        if rep.status == "fail":
            return CheckReport.failed(suite, check, params, rep.witness,
                                      {"failed_at": rep.params, "count": len(reports)})
    for rep in reports:
        if rep.status == "warn":
            return CheckReport.warned(suite, check, params, rep.witness,
                                      {"warned_at": rep.params, "count": len(reports)})
    return CheckReport.passed(suite, check, params, {"count": len(reports)})
