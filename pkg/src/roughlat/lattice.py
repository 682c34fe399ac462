"""Finite bounded lattices given by their order, with Heyting and Brouwer operations.

Elements are carrier indices; identifiers appear only in errors and I/O.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property

from roughlat import kernels
from roughlat.bits import full, mask_of, members
from roughlat.config import JID_EXHAUSTIVE_BOUND, JID_SAMPLES
from roughlat.errors import (
    LGCError,
    NoBounds,
    NoCoimplication,
    NoGLB,
    NoLUB,
    NoRelativePseudocomplement,
    NotAPartialOrder,
    NotDistributive,
    UnknownElement,
)
from roughlat.order import QuasiOrder, UpSetFamily, from_rows, relation_rows, transpose


@dataclass(frozen=True)
class FiniteLattice:
    carrier: tuple
    up: tuple = field(repr=False)
    down: tuple = field(repr=False)
    join: tuple = field(repr=False)
    meet: tuple = field(repr=False)
    bottom: int
    top: int

    @property
    def n(self):
        return len(self.carrier)

    def index(self, element):
        try:
            return self.carrier.index(element)
        except ValueError:
            raise UnknownElement(element) from None

    def name(self, x):
        return self.carrier[x]

    def leq(self, x, y):
        return bool((self.up[x] >> y) & 1)

    def join_all(self, xs):
        acc = self.bottom
        for x in xs:
            acc = self.join[acc][x]
        return acc

    def meet_all(self, xs):
        acc = self.top
        for x in xs:
            acc = self.meet[acc][x]
        return acc

    def order(self):
        return from_rows(self.carrier, self.up)

    @cached_property
    def distributivity_witness(self):
        return kernels.distributivity_witness(self.join, self.meet)

    @cached_property
    def distributive(self):
        return self.distributivity_witness is None

    @cached_property
    def irreducibles(self):
        """Join-irreducible elements, ascending by index.

        Uses the finite characterisation: ``a`` is join-irreducible iff the join of
        everything strictly below ``a`` is not ``a`` itself.
        """
        out = []
        for a in range(self.n):
            if a == self.bottom:
                continue
            below = self.down[a] & ~(1 << a)
            if self.join_all(members(below)) != a:
                out.append(a)
        return tuple(out)

    @cached_property
    def upper_covers(self):
        """``upper_covers[a]`` is the mask of elements covering ``a``."""
        covers = []
        for a in range(self.n):
            strict = self.up[a] & ~(1 << a)
            c = 0
            for b in members(strict):
                if self.down[b] & strict == 1 << b:
                    c |= 1 << b
            covers.append(c)
        return tuple(covers)


def lattice_from_order(carrier, leq):
    """Synthesize join/meet tables from a partial order by bound search."""
    carrier = tuple(carrier)
    n = len(carrier)
    up = relation_rows(carrier, leq)
    for x in range(n):
        if not (up[x] >> x) & 1:
            raise NotAPartialOrder(f"not reflexive at {carrier[x]!r}")
    for x in range(n):
        for y in members(up[x]):
            if up[y] & ~up[x]:
                raise NotAPartialOrder(f"not transitive through {carrier[x]!r} <= {carrier[y]!r}")
            if y != x and (up[y] >> x) & 1:
                raise NotAPartialOrder(f"not antisymmetric on {carrier[x]!r}, {carrier[y]!r}")
    down = transpose(up, n)
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            ub = up[x] & up[y]
            least = [u for u in members(ub) if ub & ~up[u] == 0]
            if not least:
                raise NoLUB(carrier[x], carrier[y])
            lb = down[x] & down[y]
            greatest = [d for d in members(lb) if lb & ~down[d] == 0]
            if not greatest:
                raise NoGLB(carrier[x], carrier[y])
            join[x][y] = join[y][x] = least[0]
            meet[x][y] = meet[y][x] = greatest[0]
    everything = full(n)
    bottoms = [x for x in range(n) if up[x] == everything]
    tops = [x for x in range(n) if down[x] == everything]
    if not bottoms or not tops:
        raise NoBounds("lattice needs a least and a greatest element")
    return FiniteLattice(
        carrier, tuple(up), tuple(down),
        tuple(map(tuple, join)), tuple(map(tuple, meet)),
        bottoms[0], tops[0],
    )


def lattice_from_family(family: UpSetFamily, names=None):
    """The lattice (family, subset-inclusion); join is union and meet intersection."""
    sets = family.sets
    n = len(sets)
    pos = {m: i for i, m in enumerate(sets)}
    if names is None:
        names = [set_name(family.carrier, m) for m in sets]
    up = [0] * n
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if a & ~b == 0:
                up[i] |= 1 << j
    join = tuple(tuple(pos[a | b] for b in sets) for a in sets)
    meet = tuple(tuple(pos[a & b] for b in sets) for a in sets)
    return FiniteLattice(
        tuple(names), tuple(up), tuple(transpose(up, n)), join, meet, pos[0], pos[full(family.n)]
    )


def set_name(carrier, mask):
    return "{" + ",".join(str(carrier[i]) for i in members(mask)) + "}"


def is_distributive(lat):
    return lat.distributive


def require_distributive(lat):
    w = lat.distributivity_witness
    if w is not None:
        raise NotDistributive(*(lat.carrier[i] for i in w))


def join_irreducibles(lat):
    return lat.irreducibles


def _check(lat, *xs):
    for x in xs:
        if not isinstance(x, int) or not 0 <= x < lat.n:
            raise UnknownElement(x)


def implication(lat, a, b):
    """Greatest x with a & x <= b."""
    _check(lat, a, b)
    bdown = lat.down[b]
    row = lat.meet[a]
    cand = mask_of(x for x in range(lat.n) if (bdown >> row[x]) & 1)
    for m in members(cand):
        if cand & ~lat.down[m] == 0:
            return m
    raise NoRelativePseudocomplement(lat.carrier[a], lat.carrier[b])


def coimplication(lat, a, b):
    """Least x with b <= a | x."""
    _check(lat, a, b)
    bup = lat.up[b]
    row = lat.join[a]
    cand = mask_of(x for x in range(lat.n) if (bup >> row[x]) & 1)
    for m in members(cand):
        if cand & ~lat.up[m] == 0:
            return m
    raise NoCoimplication(lat.carrier[a], lat.carrier[b])


def _subset_folds(lat, table, unit, subsets):
    """For each subset mask, fold ``table`` over its members starting from ``unit``."""
    out = {}
    for s in subsets:
        acc = unit
        for x in members(s):
            acc = table[acc][x]
        out[s] = acc
    return out


def _all_subset_folds(table, unit, n):
    folds = [unit] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        folds[s] = table[folds[s ^ low]][low.bit_length() - 1]
    return folds


def _infinite_law(lat, outer, inner, unit_outer, unit_inner, exhaustive_bound, samples, seed):
    """x outer (inner-fold S) == inner-fold {x outer y | y in S} for all x and (sampled) S."""
    n = lat.n
    if n <= exhaustive_bound:
        folds = _all_subset_folds(inner, unit_inner, n)
        for x in range(n):
            row = outer[x]
            image = _all_subset_folds_mapped(inner, unit_inner, row, n)
            for s in range(1 << n):
                if row[folds[s]] != image[s]:
                    return x, s
        return None
    rng = random.Random(seed)
    subsets = [rng.getrandbits(n) for _ in range(samples)]
    folds = _subset_folds(lat, inner, unit_inner, subsets)
    for s in subsets:
        x = rng.randrange(n)
        row = outer[x]
        acc = unit_inner
        for y in members(s):
            acc = inner[acc][row[y]]
        if row[folds[s]] != acc:
            return x, s
    return None


def _all_subset_folds_mapped(table, unit, row, n):
    folds = [unit] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        folds[s] = table[folds[s ^ low]][row[low.bit_length() - 1]]
    return folds


def jid_witness(lat, exhaustive_bound=JID_EXHAUSTIVE_BOUND, samples=JID_SAMPLES, seed=0):
    """A violating (x, S) of x & (join S) == join {x & y | y in S}, or None."""
    return _infinite_law(lat, lat.meet, lat.join, lat.top, lat.bottom, exhaustive_bound, samples, seed)


def mid_witness(lat, exhaustive_bound=JID_EXHAUSTIVE_BOUND, samples=JID_SAMPLES, seed=0):
    return _infinite_law(lat, lat.join, lat.meet, lat.bottom, lat.top, exhaustive_bound, samples, seed)


def check_jid(lat, **kwargs):
    return jid_witness(lat, **kwargs) is None


def check_mid(lat, **kwargs):
    return mid_witness(lat, **kwargs) is None


def is_spatial(lat):
    irr = mask_of(lat.irreducibles)
    return all(lat.join_all(members(lat.down[a] & irr)) == a for a in range(lat.n))


def is_weakly_atomic(lat):
    covers = lat.upper_covers
    for x in range(lat.n):
        for y in members(lat.up[x] & ~(1 << x)):
            interval = lat.up[x] & lat.down[y]
            if not any(covers[a] & interval for a in members(interval)):
                return False
    return True


@dataclass(frozen=True)
class LatticeProfile:
    distributive: bool
    heyting: bool
    heyting_brouwer: bool
    spatial: bool
    weakly_atomic: bool
    jid: bool
    mid: bool


def _all_defined(op, lat):
    try:
        for a in range(lat.n):
            for b in range(lat.n):
                op(lat, a, b)
    except LGCError:
        return False
    return True


def profile(lat):
    heyting = _all_defined(implication, lat)
    return LatticeProfile(
        distributive=is_distributive(lat),
        heyting=heyting,
        heyting_brouwer=heyting and _all_defined(coimplication, lat),
        spatial=is_spatial(lat),
        weakly_atomic=is_weakly_atomic(lat),
        jid=check_jid(lat),
        mid=check_mid(lat),
    )


def birkhoff_dual(lat) -> QuasiOrder:
    """Join-irreducibles ordered by the reverse of the lattice order."""
    require_distributive(lat)
    irr = lat.irreducibles
    up = []
    for j in irr:
        up.append(mask_of(k for k, kk in enumerate(irr) if lat.leq(kk, j)))
    return from_rows(tuple(lat.carrier[j] for j in irr), up)


def birkhoff_image(lat, x):
    """Mask over positions of ``lat.irreducibles`` of the join-irreducibles below ``x``."""
    return mask_of(k for k, j in enumerate(lat.irreducibles) if lat.leq(j, x))
