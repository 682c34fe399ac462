"""Command-line interface: ``roughlat <command> ...`` (see ``roughlat --help``)."""
from __future__ import annotations

import argparse
import json
import sys

from roughlat import canonical, document, frame, galois, lattice, order, rough, spatial, suites, terms
from roughlat.errors import LGCError
from roughlat.generate import InstanceSpec, generate
from roughlat.report import LawReport

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _emit(text, path=None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _print_report(rep: LawReport, as_json=False):
    if as_json:
        print(json.dumps(rep.to_dict(), indent=2, ensure_ascii=False))
        return
    print(rep.subject)
    for line in rep.lines():
        print("  " + line)
    print("ok" if rep.ok else "FAILED")


def _validate_report(obj):
    if isinstance(obj, galois.GaloisPair):
        rep = galois.galois_law_report(obj)
        try:
            galois.validate_by_characterization(obj.base, obj.f, obj.g)
            rep.record("characterization accepts", True)
        except LGCError as exc:
            rep.record("characterization accepts", False, str(exc))
        rep.record("lattice distributive", lattice.is_distributive(obj.base))
        if obj.base.distributive:
            for r in canonical.finite_iso_report(obj).results.values():
                rep.results[r.law] = r
        return rep
    if isinstance(obj, lattice.FiniteLattice):
        rep = LawReport("lattice")
        for key, value in lattice.profile(obj).__dict__.items():
            rep.record(key, value)
        return rep
    if isinstance(obj, frame.GCFrame):
        return suites.frame_closure_report(obj, operations=obj.n <= 5)
    rep = LawReport("quasiorder")
    t = order.upsets(obj)
    rep.record("specialization(upsets(q)) = q", order.specialization_order(t) == obj)
    return rep


def cmd_validate(args):
    obj = document.load(args.file)
    rep = _validate_report(obj)
    rep.subject = f"{args.file}: {type(obj).__name__}"
    _print_report(rep, args.json)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_gen(args):
    spec = InstanceSpec(args.kind, args.size, args.seed, args.density, args.signature)
    _emit(document.serialize(generate(spec)), args.output)
    return EXIT_OK


def cmd_canonical(args):
    pair = document.load(args.file)
    if not isinstance(pair, galois.GaloisPair):
        raise LGCError("canonical expects an algebra document")
    _emit(document.serialize(canonical.canonical_frame(pair).frame), args.output)
    return EXIT_OK


def complex_record(fr, signature):
    alg = frame.complex_algebra(fr, signature)
    pair = frame.as_galois_pair(alg)
    rec = document.to_record(pair)
    names = pair.base.carrier
    sets = alg.sets

    def table(op):
        return {names[i]: {names[j]: alg.name(op(a, b)) for j, b in enumerate(sets)} for i, a in enumerate(sets)}

    rec["join"] = table(lambda a, b: a | b)
    rec["meet"] = table(lambda a, b: a & b)
    if signature in ("HGC", "HBGC"):
        rec["implication"] = table(alg.implies)
    if signature == "HBGC":
        rec["coimplication"] = table(alg.coimplies)
    return rec


def cmd_complex(args):
    fr = document.load(args.file)
    if not isinstance(fr, frame.GCFrame):
        raise LGCError("complex expects a frame document")
    rec = complex_record(fr, args.signature)
    _emit(json.dumps(rec, sort_keys=True, indent=2, ensure_ascii=False) + "\n", args.output)
    return EXIT_OK


def cmd_represent(args):
    pair = document.load(args.file)
    if not isinstance(pair, galois.GaloisPair):
        raise LGCError("represent expects an algebra document")
    signature = args.signature or pair.signature
    if args.method == "canonical":
        rep = canonical.finite_iso_report(pair, signature)
    else:
        rep = spatial.verify_representation(pair, signature)
        rep.record("spatial frame = canonical frame", spatial.frames_agree(pair))
    _print_report(rep, args.json)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_approx(args):
    fr = document.load(args.file)
    if not isinstance(fr, frame.GCFrame):
        raise LGCError("approx expects a frame document")
    space = fr.space
    items = [s.strip() for s in args.set.split(",") if s.strip()]
    mask = space.to_mask(items)
    result = rough.upper(space, mask) if args.op == "upper" else rough.lower(space, mask)
    print(",".join(space.universe[i] for i in range(space.n) if (result >> i) & 1))
    return EXIT_OK


def cmd_check(args):
    pair = document.load(args.file)
    if not isinstance(pair, galois.GaloisPair):
        raise LGCError("check expects an algebra document")
    verdict = terms.check_identity(args.identity, pair)
    if args.json:
        print(json.dumps({"valid": verdict.valid, "assignment": verdict.assignment,
                          "lhs": verdict.lhs, "rhs": verdict.rhs, "checked": verdict.checked}))
    else:
        print(verdict)
    return EXIT_OK if verdict.valid else EXIT_FAIL


def cmd_suite(args):
    summary = suites.run_suite(args.name, args.count, args.seed, args.size, workers=args.jobs)
    if args.json:
        print(json.dumps(summary.to_dict(), indent=2, ensure_ascii=False))
    else:
        print(f"{summary.name}: {summary.passed}/{summary.count} passed")
        if summary.first_failure:
            ff = summary.first_failure
            print(f"first failure: instance {ff['index']} law {ff['law']!r} witness {ff['witness']!r}")
            print(json.dumps(ff["document"], sort_keys=True, ensure_ascii=False))
    return EXIT_OK if summary.ok else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="roughlat", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="detect the document type and run its invariant checks")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("gen", help="generate a seeded random instance")
    s.add_argument("--kind", choices=["poset", "quasiorder", "lattice", "algebra", "frame"], required=True)
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--density", type=float, default=0.3)
    s.add_argument("--signature", choices=galois.SIGNATURES, default="BDLGC")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("canonical", help="emit the canonical frame of an algebra")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_canonical)

    s = sub.add_parser("complex", help="emit the complex algebra of a frame with operation tables")
    s.add_argument("file")
    s.add_argument("--signature", choices=galois.SIGNATURES, default="BDLGC")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_complex)

    s = sub.add_parser("represent", help="verify a representation theorem on an algebra")
    s.add_argument("file")
    s.add_argument("--method", choices=["canonical", "spatial"], default="canonical")
    s.add_argument("--signature", choices=galois.SIGNATURES)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_represent)

    s = sub.add_parser("approx", help="upper or lower approximation of a set in a frame")
    s.add_argument("file")
    s.add_argument("--set", required=True, help="comma-separated element identifiers")
    s.add_argument("--op", choices=["upper", "lower"], required=True)
    s.set_defaults(func=cmd_approx)

    s = sub.add_parser("check", help="exhaustively check an identity on an algebra")
    s.add_argument("file")
    s.add_argument("--identity", required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("suite", help="run a named property suite")
    s.add_argument("name", choices=sorted(suites.SUITES))
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--size", type=int, default=5)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_suite)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LGCError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
