import json
import time
from dataclasses import dataclass, field

try:
    from .hamgen_settings import REPORT_SCHEMA
except ImportError:
    from hamgen_settings import REPORT_SCHEMA


PASS = "pass"
FAIL = "fail"
FINDING = "finding"
SKIP = "skip"

SOURCES = ("paper", "trivial", "derived")


def expect(value, source):
    if source not in SOURCES:
        raise ValueError("unknown provenance {!r}".format(source))
    return {"value": value, "source": source}


def paper(value):
    return expect(value, "paper")


def trivial(value):
    return expect(value, "trivial")


def derived(value):
    return expect(value, "derived")


def to_jsonable(value):
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in value]
        return sorted(items, key=repr) if isinstance(value, (set, frozenset)) else items
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if hasattr(value, "to_string"):
        return value.to_string()
    if hasattr(value, "vertices") and not callable(value.vertices):
        return str(value)
    if hasattr(value, "item"):
        return value.item()
    return value


@dataclass
class VerificationReport:
    check_id: str
    status: str
    computed: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    elapsed: float = 0.0
    witness: object = None
    diff: list = field(default_factory=list)
    note: str = ""

    @classmethod
    def evaluate(cls, check_id, computed, expected, finding=False, witness=None, note=""):
        diff = []
        for key, spec in expected.items():
            got = to_jsonable(computed.get(key))
            want = to_jsonable(spec["value"])
            if got != want:
                diff.append({"key": key, "expected": want, "computed": got})
        if finding:
            status = FINDING
        else:
            status = FAIL if diff else PASS
        return cls(check_id, status, computed, expected, 0.0, witness, diff, note)

    @classmethod
    def skipped(cls, check_id, reason):
        return cls(check_id, SKIP, note=reason)

    def soften(self, keys, note):
        """Downgrade a failure to a finding when only the given keys differ."""
        if self.status == FAIL and self.diff and all(d["key"] in keys for d in self.diff):
            self.status = FINDING
            self.note = note
        return self

    @property
    def ok(self):
        return self.status != FAIL

    def to_dict(self):
        return {
            "check_id": self.check_id,
            "status": self.status,
            "computed": to_jsonable(self.computed),
            "expected": to_jsonable(self.expected),
            "elapsed": round(self.elapsed, 6),
            "witness": to_jsonable(self.witness),
            "diff": to_jsonable(self.diff),
            "note": self.note,
        }


def timed(check_id, fn):
    started = time.perf_counter()
    report = fn()
    report.check_id = check_id
    report.elapsed = time.perf_counter() - started
    return report


def summarize(reports):
    counts = {PASS: 0, FAIL: 0, FINDING: 0, SKIP: 0}
    for report in reports:
        counts[report.status] = counts.get(report.status, 0) + 1
    return counts


def suite_document(suite, reports, with_elapsed=True):
    reports = sorted(reports, key=lambda r: r.check_id)
    items = []
    for report in reports:
        item = report.to_dict()
        if not with_elapsed:
            item.pop("elapsed")
        items.append(item)
    return {
        "schema": REPORT_SCHEMA,
        "suite": suite,
        "reports": items,
        "summary": summarize(reports),
    }


def dumps(document):
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def format_text(reports):
    lines = []
    for report in sorted(reports, key=lambda r: r.check_id):
        lines.append("{:<8} {}".format(report.status.upper(), report.check_id))
        if report.note:
            lines.append("         {}".format(report.note))
        for item in report.diff:
            lines.append(
                "         {}: expected {} got {}".format(
                    item["key"], item["expected"], item["computed"]
                )
            )
    counts = summarize(reports)
    lines.append(
        "{} passed, {} failed, {} findings, {} skipped".format(
            counts[PASS], counts[FAIL], counts[FINDING], counts[SKIP]
        )
    )
    return "\n".join(lines)
