"""Structured verification reports: named identities, witnesses, aggregation."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Entry:
    identity_name: str
    lhs_description: str
    rhs_description: str
    passed: bool
    witness: tuple | None = None  # (row, col, lhs_value, rhs_value) as strings

    def to_json(self) -> dict:
        obj = {
            "identity": self.identity_name,
            "lhs": self.lhs_description,
            "rhs": self.rhs_description,
            "passed": self.passed,
        }
        if self.witness is not None:
            row, col, lv, rv = self.witness
            obj["witness"] = {"row": row, "col": col, "lhs_value": lv, "rhs_value": rv}
        return obj


@dataclass
class Report:
    subject: str
    entries: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def add(self, name: str, lhs, rhs, lhs_desc: str = "", rhs_desc: str = "") -> bool:
        """Record an exact-equality check between two LinMaps."""
        from .linalg import maps_equal

        equal, witness = maps_equal(lhs, rhs)
        self.entries.append(Entry(name, lhs_desc, rhs_desc, equal, witness))
        return equal

    def add_bool(self, name: str, passed: bool, lhs_desc: str = "", rhs_desc: str = ""):
        self.entries.append(Entry(name, lhs_desc, rhs_desc, bool(passed), None))
        return passed

    def extend(self, other: "Report", prefix: str = ""):
        for e in other.entries:
            name = f"{prefix}{e.identity_name}" if prefix else e.identity_name
            self.entries.append(
                Entry(name, e.lhs_description, e.rhs_description, e.passed, e.witness)
            )
        return self

    def first_failure(self) -> Entry | None:
        for e in self.entries:
            if not e.passed:
                return e
        return None

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.ok,
            "entries": [e.to_json() for e in self.entries],
        }

    def render_text(self) -> str:
        lines = [f"subject: {self.subject}"]
        for e in self.entries:
            mark = "PASS" if e.passed else "FAIL"
            line = f"  [{mark}] {e.identity_name}"
            if e.witness is not None:
                row, col, lv, rv = e.witness
                line += f"  (row {row}, col {col}: {lv} != {rv})"
            lines.append(line)
        lines.append(f"overall: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)


def merge(reports) -> Report:
    """Concatenate reports; the verdict is the conjunction."""
    reports = list(reports)
    out = Report("; ".join(r.subject for r in reports) if reports else "(empty)")
    for r in reports:
        out.extend(r)
    return out
