"""Named property suites over generated instances.

Each suite maps one instance spec to ``(ok, law, witness, instance)``; the
summary is a reduction over instance indices, so the result does not depend
on how instances are scheduled.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from roughlat import canonical, frame, galois, order, rough, spatial, terms
from roughlat.document import to_record
from roughlat.errors import LGCError, UnknownSuite
from roughlat.generate import gen_algebra, gen_frame, gen_quasiorder, gen_space, instance_specs
from roughlat.lattice import coimplication, implication
from roughlat.report import LawReport

VALID_IDENTITIES = (
    "f(g(f(x))) = f(x)",
    "g(f(g(x))) = g(x)",
    "f(x | y) = f(x) | f(y)",
    "g(x & y) = g(x) & g(y)",
)


def _from_report(rep: LawReport, instance):
    bad = rep.failures
    if bad:
        return False, bad[0].law, bad[0].witness, instance
    return True, None, None, instance


def galois_laws(spec):
    pair = gen_algebra(spec)
    rep = galois.galois_law_report(pair, seed=spec.seed)
    try:
        galois.validate_by_characterization(pair.base, pair.f, pair.g)
        rep.record("characterization accepts", True)
    except LGCError as exc:
        rep.record("characterization accepts", False, str(exc))
    return _from_report(rep, pair)


def rough_adjunction(spec):
    space = gen_space(spec)
    subsets = range(1 << space.n)
    ups, lows = rough.approximate_all(space, subsets)
    rep = LawReport("rough-adjunction")
    for a in subsets:
        ua = ups[a]
        for b in subsets:
            ok = (ua & ~b == 0) == (a & ~lows[b] == 0)
            if not ok:
                rep.record("upper(A) <= B iff A <= lower(B)", False, (sorted(space.to_set(a)), sorted(space.to_set(b))))
                break
        else:
            rep.record("upper(A) <= B iff A <= lower(B)", True)
    return _from_report(rep, space)


def frame_closure_report(fr, operations=False):
    """Closure of up-sets under the rough operators and the adjunction on the complex
    algebra; with ``operations`` also compares -> and <- against the lattice-order
    definitions (quadratic in the number of up-sets, so off by default)."""
    rep = LawReport("frame-closure")
    alg = frame.complex_algebra(fr, "HBGC")
    q = fr.order
    for a in alg.sets:
        rep.record("upper(A) is an up-set", order.is_up_closed(q, alg.upper(a)), alg.name(a))
        rep.record("lower(A) is an up-set", order.is_up_closed(q, alg.lower(a)), alg.name(a))
    try:
        pair = frame.as_galois_pair(alg)
        rep.record("as_galois_pair validates", True)
    except LGCError as exc:
        rep.record("as_galois_pair validates", False, str(exc))
        return rep
    if not operations:
        return rep
    lat = pair.base
    for a in range(lat.n):
        for b in range(lat.n):
            imp = implication(lat, a, b)
            co = coimplication(lat, a, b)
            rep.record("-> is Rauszer's", lat.carrier[imp] == alg.name(alg.implies(alg.sets[a], alg.sets[b])), (a, b))
            rep.record("<- is Rauszer's", lat.carrier[co] == alg.name(alg.coimplies(alg.sets[a], alg.sets[b])), (a, b))
    return rep


def frame_closure(spec):
    fr = gen_frame(spec)
    return _from_report(frame_closure_report(fr), fr)


def canonical_iso(spec):
    pair = gen_algebra(spec)
    return _from_report(canonical.finite_iso_report(pair, "HBGC"), pair)


def spatial_iso(spec):
    pair = gen_algebra(spec)
    rep = spatial.verify_representation(pair, "HBGC")
    rep.record("spatial frame = canonical frame", spatial.frames_agree(pair))
    return _from_report(rep, pair)


def star_equivalence_report(pair):
    rep = LawReport("star-equivalence")
    try:
        cf = canonical.canonical_frame(pair)
    except LGCError as exc:
        rep.record("canonical frame satisfies (CR)", False, str(exc))
        return rep
    rep.record("canonical frame satisfies (CR)", True)
    for i, F in enumerate(cf.filters):
        for j, G in enumerate(cf.filters):
            r = cf.frame.related(i, j)
            w = (cf.frame.carrier[i], cf.frame.carrier[j])
            rep.record("second clause agrees", canonical.star_alternative(pair, F, G) == r, w)
            rep.record("first clause pointwise", canonical.star_primary(pair, F, G) == r, w)
    return rep


def star_equivalence(spec):
    pair = gen_algebra(spec)
    return _from_report(star_equivalence_report(pair), pair)


def topology_roundtrip(spec):
    q = gen_quasiorder(spec)
    t = order.upsets(q)
    back = order.specialization_order(t)
    rep = LawReport("topology-roundtrip")
    rep.record("specialization(upsets(q)) = q", back == q)
    rep.record("upsets(specialization(t)) = t", order.upsets(back) == t)
    return _from_report(rep, q)


def rauszer_report(q):
    rep = LawReport("rauszer-agreement")
    t = order.upsets(q)
    top = q.full
    for a in t.sets:
        for b in t.sets:
            w = (sorted(q.to_set(a)), sorted(q.to_set(b)))
            imp = order.rauszer_implication(q, a, b)
            co = order.rauszer_coimplication(q, a, b)
            rep.record("A -> B = I(-A u B)", imp == order.interior(t, (top & ~a) | b), w)
            least = [x for x in t.sets if b & ~(a | x) == 0]
            smallest = [x for x in least if all(x & ~y == 0 for y in least)]
            rep.record("A <- B least X with B in A u X", smallest == [co], w)
            rep.record("outputs are up-sets", imp in t and co in t, w)
    return rep


def rauszer_agreement(spec):
    q = gen_quasiorder(spec)
    return _from_report(rauszer_report(q), q)


def identity_corpus(spec):
    pair = gen_algebra(spec)
    rep = LawReport("identity-corpus")
    for text in VALID_IDENTITIES:
        verdict = terms.check_identity(text, pair)
        rep.record(text, verdict.valid, str(verdict))
    return _from_report(rep, pair)


SUITES = {
    "galois-laws": ("algebra", galois_laws),
    "rough-adjunction": ("space", rough_adjunction),
    "frame-closure": ("frame", frame_closure),
    "canonical-iso": ("algebra", canonical_iso),
    "spatial-iso": ("algebra", spatial_iso),
    "star-equivalence": ("algebra", star_equivalence),
    "topology-roundtrip": ("quasiorder", topology_roundtrip),
    "rauszer-agreement": ("quasiorder", rauszer_agreement),
    "identity-corpus": ("algebra", identity_corpus),
}

# suites whose size argument is exact rather than an upper bound
_FIXED_SIZE = {"rough-adjunction"}


@dataclass
class SuiteSummary:
    name: str
    count: int
    passed: int = 0
    failed: int = 0
    first_failure: dict | None = None
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return self.failed == 0

    def to_dict(self):
        return {
            "suite": self.name,
            "count": self.count,
            "passed": self.passed,
            "failed": self.failed,
            "first_failure": self.first_failure,
        }


def suite_specs(name, count, seed, size):
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    kind, _ = SUITES[name]
    gen_kind = "frame" if kind == "space" else kind
    return instance_specs(
        gen_kind, count, seed, size,
        signature="HBGC",
        min_size=size if name in _FIXED_SIZE else 0,
    )


def _run_one(args):
    name, spec = args
    ok, law, witness, instance = SUITES[name][1](spec)
    if ok:
        return True, None
    return False, {"law": law, "witness": witness, "spec": spec.__dict__, "document": to_record(instance)}


def run_suite(name, count, seed, size, workers=1) -> SuiteSummary:
    specs = suite_specs(name, count, seed, size)
    jobs = [(name, s) for s in specs]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_one, jobs, chunksize=max(1, count // (4 * workers))))
    else:
        results = [_run_one(j) for j in jobs]
    summary = SuiteSummary(name, count)
    for i, (ok, failure) in enumerate(results):
        if ok:
            summary.passed += 1
            continue
        summary.failed += 1
        failure["index"] = i
        summary.failures.append(failure)
        if summary.first_failure is None:
            summary.first_failure = failure
    return summary
