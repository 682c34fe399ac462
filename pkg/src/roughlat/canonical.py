"""Prime filters, the canonical frame of a finite algebra, and the embedding h.

Prime filters of a finite distributive lattice are exactly the principal
filters of its join-irreducibles; they are stored by generator and
materialized as masks over the lattice carrier.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from roughlat.bits import full, mask_of, members
from roughlat.config import FILTER_BOUND, enumeration_bound
from roughlat.errors import CarrierTooLarge, LGCError
from roughlat.frame import ComplexAlgebra, GCFrame, complex_algebra, validate_gcframe
from roughlat.galois import GaloisPair, check_signature
from roughlat.lattice import FiniteLattice, coimplication, implication, require_distributive
from roughlat.order import from_rows, upsets
from roughlat.report import LawReport


@dataclass(frozen=True)
class PrimeFilter:
    generator: int
    members: int

    def __contains__(self, x):
        return bool((self.members >> x) & 1)


def is_filter(lat, mask):
    if mask == 0:
        return False
    for x in members(mask):
        if lat.up[x] & ~mask:
            return False
        for y in members(mask):
            if not (mask >> lat.meet[x][y]) & 1:
                return False
    return True


def is_prime_filter(lat, mask):
    if not is_filter(lat, mask) or (mask >> lat.bottom) & 1:
        return False
    for x in range(lat.n):
        for y in range(x, lat.n):
            if (mask >> lat.join[x][y]) & 1 and not ((mask >> x) & 1 or (mask >> y) & 1):
                return False
    return True


def prime_filters(lat: FiniteLattice):
    require_distributive(lat)
    out = []
    for a in lat.irreducibles:
        pf = PrimeFilter(a, lat.up[a])
        if not is_prime_filter(lat, pf.members):
            raise LGCError(f"principal filter of {lat.carrier[a]!r} failed the prime-filter axioms")
        out.append(pf)
    return out


def enumerate_filters(lat: FiniteLattice, bound=None):
    """Every nonempty up-closed meet-closed subset, found by exhaustive enumeration."""
    bound = enumeration_bound(FILTER_BOUND) if bound is None else bound
    if lat.n > bound:
        raise CarrierTooLarge(lat.n, bound)
    return [m for m in upsets(lat.order(), max(bound, lat.n)).sets if is_filter(lat, m)]


@dataclass(frozen=True)
class CanonicalFrame:
    algebra: GaloisPair
    filters: tuple
    frame: GCFrame

    @cached_property
    def position(self):
        return {pf.generator: k for k, pf in enumerate(self.filters)}


def point_name(lat, a):
    return "^" + str(lat.carrier[a])


def star_relation(algebra, filters):
    """Rows of F R G iff every a in G has f(a) in F."""
    f = algebra.f
    images = [mask_of(f[a] for a in members(pf.members)) for pf in filters]
    return tuple(
        mask_of(k for k, img in enumerate(images) if img & ~pf.members == 0) for pf in filters
    )


def canonical_frame(algebra: GaloisPair) -> CanonicalFrame:
    lat = algebra.base
    filters = tuple(prime_filters(lat))
    up = [mask_of(k for k, other in enumerate(filters) if pf.members & ~other.members == 0) for pf in filters]
    order = from_rows(tuple(point_name(lat, pf.generator) for pf in filters), up)
    frame = validate_gcframe(order, star_relation(algebra, filters))
    return CanonicalFrame(algebra, filters, frame)


def star_alternative(algebra: GaloisPair, F: PrimeFilter, G: PrimeFilter) -> bool:
    """For all a: g(a) in G implies a in F."""
    g = algebra.g
    return all(a in F for a in range(algebra.base.n) if g[a] in G)


def star_primary(algebra: GaloisPair, F: PrimeFilter, G: PrimeFilter) -> bool:
    """For all a: a in G implies f(a) in F, evaluated pointwise."""
    f = algebra.f
    return all(f[a] in F for a in members(G.members))


def stone_map(algebra: GaloisPair, cf: CanonicalFrame | None = None):
    """``h[x]`` is the mask of canonical points (prime filters) containing x."""
    cf = canonical_frame(algebra) if cf is None else cf
    return tuple(
        mask_of(k for k, pf in enumerate(cf.filters) if x in pf) for x in range(algebra.base.n)
    )


def _embedding_laws(algebra, signature, rep, cf, alg: ComplexAlgebra, h):
    lat = algebra.base
    name = lat.carrier
    n = lat.n
    rep.declare("h injective")
    seen = {}
    for x in range(n):
        if h[x] in seen:
            rep.record("h injective", False, (name[seen[h[x]]], name[x]))
        seen.setdefault(h[x], x)
        rep.record("h(x) is an up-set", h[x] in alg.family, name[x])
    rep.record("h(0) = empty", h[lat.bottom] == 0)
    rep.record("h(1) = all points", h[lat.top] == full(cf.frame.n))
    for x in range(n):
        hx = h[x]
        rep.record("h(f(x)) = h(x) upper", h[algebra.f[x]] == alg.upper(hx), name[x])
        rep.record("h(g(x)) = h(x) lower", h[algebra.g[x]] == alg.lower(hx), name[x])
        for y in range(n):
            hy = h[y]
            w = (name[x], name[y])
            rep.record("h(x | y) = h(x) U h(y)", h[lat.join[x][y]] == hx | hy, w)
            rep.record("h(x & y) = h(x) n h(y)", h[lat.meet[x][y]] == hx & hy, w)
            if signature in ("HGC", "HBGC"):
                rep.record("h(x -> y) = h(x) -> h(y)", h[implication(lat, x, y)] == alg.implies(hx, hy), w)
            if signature == "HBGC":
                rep.record("h(x <- y) = h(x) <- h(y)", h[coimplication(lat, x, y)] == alg.coimplies(hx, hy), w)


def verify_embedding(algebra: GaloisPair, signature=None) -> LawReport:
    signature = check_signature(signature or algebra.signature)
    require_distributive(algebra.base)
    cf = canonical_frame(algebra)
    alg = complex_algebra(cf.frame, signature)
    rep = LawReport(f"canonical embedding ({signature})")
    _embedding_laws(algebra, signature, rep, cf, alg, stone_map(algebra, cf))
    return rep


def finite_iso_report(algebra: GaloisPair, signature=None) -> LawReport:
    """Embedding laws plus surjectivity: each up-set A of points is h of the join of
    the generators of the filters in A."""
    signature = check_signature(signature or algebra.signature)
    lat = algebra.base
    require_distributive(lat)
    cf = canonical_frame(algebra)
    alg = complex_algebra(cf.frame, signature)
    h = stone_map(algebra, cf)
    rep = LawReport(f"canonical isomorphism ({signature})")
    _embedding_laws(algebra, signature, rep, cf, alg, h)
    for a_mask in alg.sets:
        x = lat.join_all(cf.filters[k].generator for k in members(a_mask))
        rep.record("h onto up-sets", h[x] == a_mask, alg.name(a_mask))
    rep.record("|L| = |up-sets|", len(alg.sets) == lat.n, (lat.n, len(alg.sets)))
    return rep


def verify_finite_iso(algebra: GaloisPair, signature=None) -> bool:
    return finite_iso_report(algebra, signature).ok


def prime_filter_theorem_report(lat: FiniteLattice, bound=None) -> LawReport:
    """Enumeration-backed finite checks of the prime filter theorem and co-filter lemma.

    Co-filter instances range over proper filters F and supersets Q whose
    complement is a nonempty join-closed set.
    """
    require_distributive(lat)
    rep = LawReport("prime filter theorem")
    filters = enumerate_filters(lat, bound)
    primes = [pf.members for pf in prime_filters(lat)]
    rep.record(
        "prime filters = enumerated primes",
        sorted(primes) == sorted(m for m in filters if is_prime_filter(lat, m)),
    )
    for F in filters:
        rep.record("every filter principal", any(F == lat.up[a] for a in range(lat.n)), F)
    for F in filters:
        for a in range(lat.n):
            if (F >> a) & 1:
                continue
            ok = any(F & ~P == 0 and not (P >> a) & 1 for P in primes)
            rep.record("F in P, a not in P", ok, (sorted(lat.carrier[i] for i in members(F)), lat.carrier[a]))
    everything = full(lat.n)
    cofilters = []
    for Q in range(1 << lat.n):
        comp = everything & ~Q
        if comp == 0:
            continue
        if all((comp >> lat.join[x][y]) & 1 for x in members(comp) for y in members(comp)):
            cofilters.append(Q)
    rep.declare("F in P in Q")
    for F in filters:
        for Q in cofilters:
            if F & ~Q:
                continue
            ok = any(F & ~P == 0 and P & ~Q == 0 for P in primes)
            rep.record("F in P in Q", ok, (F, Q))
    return rep
