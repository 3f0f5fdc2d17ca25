"""Verification reports and their JSON / CSV / text renderings."""

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

VERIFIED = "verified-at-all-points"
FAILED = "failed"


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if hasattr(value, "parts"):  # Partition
        return list(value.parts)
    if hasattr(value, "positions"):  # PositionVector
        return list(value.positions)
    return value


@dataclass
class Failure:
    assignment: Dict[str, str]
    lhs: str
    rhs: str
    check: str = ""

    def to_json(self):
        return {"assignment": dict(self.assignment), "check": self.check,
                "lhs": str(self.lhs), "rhs": str(self.rhs)}

    @classmethod
    def from_json(cls, d):
        return cls(dict(d["assignment"]), d["lhs"], d["rhs"], d.get("check", ""))


@dataclass
class IdentityReport:
    identity: str
    params: Dict[str, object]
    points: int = 0
    failures: List[Failure] = field(default_factory=list)
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return VERIFIED if self.points >= 1 and not self.failures else FAILED

    @property
    def ok(self) -> bool:
        return self.verdict == VERIFIED

    def fail(self, point, lhs, rhs, check=""):
        assignment = point.to_json() if hasattr(point, "to_json") else _jsonable(point)
        self.failures.append(Failure(assignment, str(lhs), str(rhs), check))

    def compare(self, point, lhs, rhs, check=""):
        if lhs != rhs:
            self.fail(point, lhs, rhs, check)

    def cell(self) -> str:
        return ",".join(f"{k}={_cell_value(v)}" for k, v in sorted(self.params.items()))

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "params": _jsonable(self.params),
            "points": self.points,
            "failures": [f.to_json() for f in self.failures],
            "verdict": self.verdict,
        }
        if self.details:
            out["details"] = _jsonable(self.details)
        return out

    @classmethod
    def from_json(cls, d) -> "IdentityReport":
        rep = cls(d["identity"], dict(d["params"]), d["points"],
                  [Failure.from_json(f) for f in d["failures"]], dict(d.get("details", {})))
        if rep.verdict != d["verdict"]:
            raise ValueError(f"inconsistent verdict in report for {d['identity']}")
        return rep


def _cell_value(v):
    v = _jsonable(v)
    if isinstance(v, list):
        return "(" + " ".join(map(str, v)) + ")"
    return str(v)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_json(reports) -> str:
    if isinstance(reports, IdentityReport):
        return dumps(reports.to_json())
    return dumps([r.to_json() for r in reports])


def render_csv(reports) -> str:
    if isinstance(reports, IdentityReport):
        reports = [reports]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["identity", "params", "points", "failures", "verdict"])
    for r in reports:
        writer.writerow([r.identity, r.cell(), r.points, len(r.failures), r.verdict])
    return buf.getvalue()


def render_text(reports) -> str:
    if isinstance(reports, IdentityReport):
        reports = [reports]
    lines = []
    for r in reports:
        mark = "PASS" if r.ok else "FAIL"
        lines.append(f"[{mark}] {r.identity} {r.cell()} points={r.points}")
        for f in r.failures[:3]:
            label = f" ({f.check})" if f.check else ""
            lines.append(f"    witness{label}: lhs={f.lhs} rhs={f.rhs} at {f.assignment}")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}
