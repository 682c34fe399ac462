"""Spatial representation: the frame on join-irreducibles and the isomorphism onto its up-sets.

Join-irreducibles are ordered by the reverse of the lattice order and related
by ``j R k  iff  j <= f(k)``; an element x is sent to the join-irreducibles
below it.
"""
from __future__ import annotations

from dataclasses import dataclass

from roughlat.bits import full, mask_of, members
from roughlat.canonical import canonical_frame
from roughlat.errors import UnknownElement
from roughlat.frame import GCFrame, complex_algebra, validate_gcframe
from roughlat.galois import GaloisPair, check_signature
from roughlat.lattice import coimplication, implication, require_distributive
from roughlat.order import from_rows
from roughlat.report import LawReport


@dataclass(frozen=True)
class SpatialFrame:
    source: GaloisPair
    points: tuple  # lattice indices of the join-irreducibles, one per frame point
    frame: GCFrame


def build_spatial_frame(algebra: GaloisPair) -> SpatialFrame:
    lat = algebra.base
    require_distributive(lat)
    irr = lat.irreducibles
    up = [mask_of(k for k, kk in enumerate(irr) if lat.leq(kk, j)) for j in irr]
    order = from_rows(tuple(lat.carrier[j] for j in irr), up)
    rel = [mask_of(k for k, kk in enumerate(irr) if lat.leq(j, algebra.f[kk])) for j in irr]
    return SpatialFrame(algebra, irr, validate_gcframe(order, rel))


def phi(algebra: GaloisPair, x) -> int:
    """Mask over join-irreducible positions of those below x."""
    lat = algebra.base
    if not isinstance(x, int) or not 0 <= x < lat.n:
        raise UnknownElement(x)
    return mask_of(k for k, j in enumerate(lat.irreducibles) if lat.leq(j, x))


def phi_by_neighbourhoods(sf: SpatialFrame, x) -> int:
    """Union of the least neighbourhoods N(j) over join-irreducibles j below x."""
    lat = sf.source.base
    out = 0
    for k, j in enumerate(sf.points):
        if lat.leq(j, x):
            out |= sf.frame.order.up[k]
    return out


def verify_representation(algebra: GaloisPair, signature=None) -> LawReport:
    signature = check_signature(signature or algebra.signature)
    lat = algebra.base
    sf = build_spatial_frame(algebra)
    alg = complex_algebra(sf.frame, signature)
    name = lat.carrier
    image = [phi(algebra, x) for x in range(lat.n)]
    rep = LawReport(f"spatial representation ({signature})")
    rep.record("phi bijective onto up-sets", sorted(image) == sorted(alg.sets) and len(set(image)) == lat.n)
    rep.record("phi(0) = empty", image[lat.bottom] == 0)
    rep.record("phi(1) = J(L)", image[lat.top] == full(len(sf.points)))
    for x in range(lat.n):
        px = image[x]
        rep.record("phi by neighbourhoods", phi_by_neighbourhoods(sf, x) == px, name[x])
        rep.record("phi(f(x)) = phi(x) upper", image[algebra.f[x]] == alg.upper(px), name[x])
        rep.record("phi(g(x)) = phi(x) lower", image[algebra.g[x]] == alg.lower(px), name[x])
        for y in range(lat.n):
            py = image[y]
            w = (name[x], name[y])
            rep.record("x <= y iff phi(x) in phi(y)", lat.leq(x, y) == (px & ~py == 0), w)
            rep.record("phi(x | y) = phi(x) U phi(y)", image[lat.join[x][y]] == px | py, w)
            rep.record("phi(x & y) = phi(x) n phi(y)", image[lat.meet[x][y]] == px & py, w)
            if signature in ("HGC", "HBGC"):
                rep.record("phi(x -> y) = phi(x) -> phi(y)", image[implication(lat, x, y)] == alg.implies(px, py), w)
            if signature == "HBGC":
                rep.record("phi(x <- y) = phi(x) <- phi(y)", image[coimplication(lat, x, y)] == alg.coimplies(px, py), w)
    return rep


def frames_agree(algebra: GaloisPair) -> bool:
    """Whether j -> (principal filter of j) is a GC-frame isomorphism spatial -> canonical."""
    sf = build_spatial_frame(algebra)
    cf = canonical_frame(algebra)
    target = [cf.position.get(j) for j in sf.points]
    if None in target or sorted(target) != list(range(cf.frame.n)):
        return False
    s, c = sf.frame, cf.frame
    for a in range(s.n):
        for b in range(s.n):
            ta, tb = target[a], target[b]
            if s.order.leq(a, b) != c.order.leq(ta, tb):
                return False
            if s.related(a, b) != c.related(ta, tb):
                return False
    return True
