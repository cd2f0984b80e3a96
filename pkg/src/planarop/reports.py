"""Check reports: full value vectors, not just pass/fail.

Every verification routine returns a :class:`CheckReport` carrying the whole
vector of residues/coefficients it inspected, so an exact-arithmetic
regression can be diagnosed from the report alone.
"""

from __future__ import annotations

from .rational import GaussianRational, format_complex

SCHEMA_REPORT = "planarop/report@1"


class CheckReport:
    """Outcome of one exact check.

    ``values`` holds every (label, value) pair inspected; ``violations`` the
    subset that deviates from its expected value (stored as the deviation).
    """

    __slots__ = ("check", "values", "violations", "notes")

    def __init__(self, check: str, values, violations, notes=()):
        object.__setattr__(self, "check", check)
        object.__setattr__(self, "values", tuple(values))
        object.__setattr__(self, "violations", tuple(violations))
        object.__setattr__(self, "notes", tuple(notes))

    def __setattr__(self, name, value):
        raise AttributeError("CheckReport is immutable")

    @property
    def passed(self) -> bool:
        return not self.violations

    def value_at(self, label):
        for lab, v in self.values:
            if lab == label:
                return v
        raise KeyError(label)

    def to_json(self) -> dict:
        def fmt(v):
            return format_complex(v) if isinstance(v, GaussianRational) else str(v)

        return {
            "schema": SCHEMA_REPORT,
            "check": self.check,
            "pass": self.passed,
            "values": [{"k": lab, "value": fmt(v)} for lab, v in self.values],
            "violations": [{"k": lab, "value": fmt(v)} for lab, v in self.violations],
            "notes": list(self.notes),
        }

    def __repr__(self):
        state = "pass" if self.passed else f"FAIL({len(self.violations)})"
        return f"CheckReport({self.check}: {state})"


def report_from_expected(check: str, labeled_values, expected, notes=()) -> CheckReport:
    """Build a report comparing each labeled value against its expected value."""
    values, violations = [], []
    for lab, got in labeled_values:
        values.append((lab, got))
        want = expected(lab)
        if got != want:
            violations.append((lab, got - want))
    return CheckReport(check, values, violations, notes)
