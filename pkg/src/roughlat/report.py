from dataclasses import dataclass, field


@dataclass
class LawResult:
    law: str
    passed: bool
    witness: object = None
    checked: int = 0


@dataclass
class LawReport:
    """Per-law pass/fail record. Only the first witness per law is kept."""

    subject: str
    results: dict = field(default_factory=dict)

    def record(self, law, ok, witness=None):
        res = self.results.get(law)
        if res is None:
            res = self.results[law] = LawResult(law, True)
        res.checked += 1
        if not ok and res.passed:
            res.passed = False
            res.witness = witness
        return ok

    def declare(self, law):
        self.results.setdefault(law, LawResult(law, True))

    @property
    def ok(self):
        return all(r.passed for r in self.results.values())

    @property
    def failures(self):
        return [r for r in self.results.values() if not r.passed]

    def lines(self):
        for r in self.results.values():
            status = "pass" if r.passed else f"FAIL witness={r.witness!r}"
            yield f"{r.law:<28} {status}  ({r.checked} checks)"

    def to_dict(self):
        return {
            "subject": self.subject,
            "ok": self.ok,
            "laws": {
                r.law: {"passed": r.passed, "checked": r.checked, "witness": _plain(r.witness)}
                for r in self.results.values()
            },
        }


def _plain(w):
    if isinstance(w, (tuple, list)):
        return [_plain(v) for v in w]
    if isinstance(w, (frozenset, set)):
        return sorted(map(str, w))
    if isinstance(w, dict):
        return {str(k): _plain(v) for k, v in w.items()}
    return w
