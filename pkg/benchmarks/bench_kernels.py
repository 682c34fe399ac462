"""Compiled vs pure-Python kernels on the hot loops.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Prints one row per kernel with the best-of-N wall time of each backend and the
speed-up. Both backends are fed identical inputs and their outputs are
compared before timing.
"""
import argparse
import random
import sys
import timeit

from roughlat import kernels
from roughlat.generate import InstanceSpec, gen_frame, gen_lattice, gen_quasiorder


def cases(rng):
    q12 = gen_quasiorder(InstanceSpec("quasiorder", 12, 1, 0.15))
    fr = gen_frame(InstanceSpec("frame", 12, 2, 0.3))
    subsets = [rng.getrandbits(fr.n) for _ in range(4000)]
    lat = gen_lattice(InstanceSpec("lattice", 6, 3, 0.2))
    f = list(range(lat.n))
    rel = [rng.getrandbits(12) for _ in range(12)]
    return [
        ("upsets, 12 points", "upsets", (q12.up, q12.down, q12.n)),
        ("approx_all, 4000 subsets", "approx_all", (fr.succ, fr.pred, subsets)),
        ("implication x4000", None, (fr.order.up, subsets)),
        (f"adjunction, |L|={lat.n}", "adjunction_witness", (lat.up, f, f)),
        (f"distributivity, |L|={lat.n}", "distributivity_witness", (lat.join, lat.meet)),
        ("(CR) scan, 12 points", "cr_witness", (fr.order.up, fr.order.down, rel)),
    ]


def call(backend, name, args):
    if name is None:
        up, subsets = args
        return [backend.implication(up, a, b) for a, b in zip(subsets, reversed(subsets))]
    out = getattr(backend, name)(*args)
    return sorted(out) if name == "upsets" else out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    if kernels.compiled_backend is None:
        print("compiled kernels are not built; run `python3 setup.py build_ext --inplace`", file=sys.stderr)
        return 1
    py, cy = kernels.python_backend, kernels.compiled_backend
    print(f"{'kernel':<28} {'python (ms)':>12} {'cython (ms)':>12} {'speed-up':>9}")
    for label, name, inp in cases(random.Random(0)):
        assert call(py, name, inp) == call(cy, name, inp), label
        t_py = min(timeit.repeat(lambda: call(py, name, inp), number=1, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: call(cy, name, inp), number=1, repeat=args.repeat))
        print(f"{label:<28} {t_py * 1e3:>12.2f} {t_cy * 1e3:>12.2f} {t_py / t_cy:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
