"""Order-preserving Galois connections (f, g) on a finite lattice."""
from __future__ import annotations

import random
from dataclasses import dataclass

from roughlat import kernels
from roughlat.bits import members
from roughlat.errors import (
    AdjunctionFails,
    BadSignature,
    CounitFails,
    LGCError,
    NotCoResiduated,
    NotMonotone,
    NotResiduated,
    UnitFails,
    UnknownElement,
)
from roughlat.lattice import FiniteLattice
from roughlat.report import LawReport

SIGNATURES = ("BDLGC", "HGC", "HBGC")


def check_signature(signature):
    if signature not in SIGNATURES:
        raise BadSignature(f"unknown signature {signature!r}; expected one of {', '.join(SIGNATURES)}")
    return signature


@dataclass(frozen=True)
class GaloisPair:
    """A lattice with maps satisfying ``f(p) <= q  <=>  p <= g(q)``.

    ``signature`` records which operations the algebra is meant to carry
    (BDLGC, HGC with ->, HBGC with -> and <-).
    """

    base: FiniteLattice
    f: tuple
    g: tuple
    signature: str = "BDLGC"

    def named(self, which):
        m = self.f if which == "f" else self.g
        return {self.base.carrier[x]: self.base.carrier[y] for x, y in enumerate(m)}


def as_index_map(lat, m):
    """Accept a sequence of indices or a mapping of identifiers."""
    if isinstance(m, dict):
        try:
            return tuple(lat.index(m[name]) for name in lat.carrier)
        except KeyError as exc:
            raise LGCError(f"map is missing element {exc.args[0]!r}") from None
    m = tuple(m)
    if len(m) != lat.n:
        raise LGCError(f"map has {len(m)} entries, lattice has {lat.n} elements")
    for v in m:
        if not isinstance(v, int) or not 0 <= v < lat.n:
            raise UnknownElement(v)
    return m


def validate_galois(lat, f, g, signature="BDLGC"):
    f = as_index_map(lat, f)
    g = as_index_map(lat, g)
    w = kernels.adjunction_witness(lat.up, f, g)
    if w is not None:
        p, q, direction = w
        raise AdjunctionFails(lat.carrier[p], lat.carrier[q], direction)
    return GaloisPair(lat, f, g, check_signature(signature))


def _monotone_witness(lat, m):
    for x in range(lat.n):
        for y in members(lat.up[x]):
            if not lat.leq(m[x], m[y]):
                return x, y
    return None


def validate_by_characterization(lat, f, g, signature="BDLGC"):
    """Accept (f, g) iff both are monotone, ``p <= g(f(p))`` and ``f(g(q)) <= q``.

    Monotonicity is tested first so that a non-monotone map is reported as such
    even when the unit or counit also fails.
    """
    f = as_index_map(lat, f)
    g = as_index_map(lat, g)
    for name, m in (("f", f), ("g", g)):
        w = _monotone_witness(lat, m)
        if w is not None:
            raise NotMonotone(name, lat.carrier[w[0]], lat.carrier[w[1]])
    for p in range(lat.n):
        if not lat.leq(p, g[f[p]]):
            raise UnitFails(lat.carrier[p])
    for q in range(lat.n):
        if not lat.leq(f[g[q]], q):
            raise CounitFails(lat.carrier[q])
    return GaloisPair(lat, f, g, check_signature(signature))


def right_adjoint_of(lat, f):
    """``g(q) = join {p | f(p) <= q}``, verified to form a Galois pair with f."""
    f = as_index_map(lat, f)
    g = tuple(lat.join_all(p for p in range(lat.n) if lat.leq(f[p], q)) for q in range(lat.n))
    w = kernels.adjunction_witness(lat.up, f, g)
    if w is not None:
        raise NotResiduated(tuple(lat.carrier[i] for i in w[:2]))
    return g


def left_adjoint_of(lat, g):
    """``f(p) = meet {q | p <= g(q)}``, verified to form a Galois pair with g."""
    g = as_index_map(lat, g)
    f = tuple(lat.meet_all(q for q in range(lat.n) if lat.leq(p, g[q])) for p in range(lat.n))
    w = kernels.adjunction_witness(lat.up, f, g)
    if w is not None:
        raise NotCoResiduated(tuple(lat.carrier[i] for i in w[:2]))
    return f


def random_galois_pair(lat, rng: random.Random, signature="BDLGC"):
    """Random join-preserving f via a monotone map on join-irreducibles, g its right adjoint.

    Join-irreducibles are visited in index order, which is a linear extension
    whenever the carrier is listed compatibly with the order (true for
    generated lattices); otherwise they are sorted by down-set size first.
    """
    irr = sorted(lat.irreducibles, key=lambda j: (bin(lat.down[j]).count("1"), j))
    f0 = {}
    for j in irr:
        floor = lat.join_all(f0[k] for k in irr if k in f0 and lat.leq(k, j))
        choices = members(lat.up[floor])
        f0[j] = choices[rng.randrange(len(choices))]
    f = tuple(lat.join_all(f0[j] for j in irr if lat.leq(j, x)) for x in range(lat.n))
    g = right_adjoint_of(lat, f)
    return GaloisPair(lat, f, g, check_signature(signature))


def _subset_sample(n, exhaustive_bound, samples, rng):
    if n <= exhaustive_bound:
        return range(1 << n)
    return [rng.getrandbits(n) for _ in range(samples)]


def galois_law_report(pair, exhaustive_bound=10, samples=2000, seed=0):
    """Composition, preservation and mutual-determination laws of a Galois pair."""
    lat, f, g = pair.base, pair.f, pair.g
    rep = LawReport("galois-laws")
    name = lat.carrier
    for x in range(lat.n):
        rep.record("f.g.f = f", f[g[f[x]]] == f[x], name[x])
        rep.record("g.f.g = g", g[f[g[x]]] == g[x], name[x])
    rng = random.Random(seed)
    for s in _subset_sample(lat.n, exhaustive_bound, samples, rng):
        xs = members(s)
        rep.record(
            "f preserves joins",
            f[lat.join_all(xs)] == lat.join_all(f[x] for x in xs),
            [name[x] for x in xs],
        )
        rep.record(
            "g preserves meets",
            g[lat.meet_all(xs)] == lat.meet_all(g[x] for x in xs),
            [name[x] for x in xs],
        )
    try:
        rep.record("right adjoint of f is g", right_adjoint_of(lat, f) == g)
    except NotResiduated as exc:
        rep.record("right adjoint of f is g", False, exc.witness)
    try:
        rep.record("left adjoint of g is f", left_adjoint_of(lat, g) == f)
    except NotCoResiduated as exc:
        rep.record("left adjoint of g is f", False, exc.witness)
    return rep
