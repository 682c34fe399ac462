"""GC-frames and their complex algebras of up-sets."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from roughlat import kernels
from roughlat.bits import members
from roughlat.errors import ClosureViolation, CRViolation, LGCError, NotUpClosed, UnsupportedOperation
from roughlat.galois import GaloisPair, check_signature, validate_galois
from roughlat.lattice import lattice_from_family, set_name
from roughlat.order import QuasiOrder, UpSetFamily, relation_rows, transpose, upsets
from roughlat.rough import ApproximationSpace


@dataclass(frozen=True)
class GCFrame:
    """A quasiordered set with a relation R closed under ``>= . R . >=``."""

    order: QuasiOrder
    succ: tuple
    pred: tuple = field(repr=False)

    @property
    def carrier(self):
        return self.order.carrier

    @property
    def n(self):
        return self.order.n

    @property
    def space(self):
        return ApproximationSpace(self.order.carrier, self.succ, self.pred)

    def related(self, x, y):
        return bool((self.succ[x] >> y) & 1)

    def relation_pairs(self):
        c = self.carrier
        return [(c[x], c[y]) for x in range(self.n) for y in members(self.succ[x])]


def cr_witness(order, succ):
    """First (x, x', y, y') violating (CR), via the composite ``>= . R . >=``."""
    return kernels.cr_witness(order.up, order.down, tuple(succ))


def cr_witness_quantified(order, succ):
    """The same search by direct quantifier evaluation; kept as an independent check."""
    n = order.n
    for x2 in range(n):
        for y2 in range(n):
            if (succ[x2] >> y2) & 1:
                continue
            for x in range(n):
                if not order.leq(x, x2):
                    continue
                for y in range(n):
                    if (succ[x] >> y) & 1 and order.leq(y2, y):
                        return x, x2, y, y2
    return None


def validate_gcframe(order: QuasiOrder, relation) -> GCFrame:
    if isinstance(relation, (tuple, list)) and len(relation) == order.n and all(
        isinstance(r, int) and not isinstance(r, bool) for r in relation
    ):
        succ = tuple(relation)
    else:
        succ = tuple(relation_rows(order.carrier, relation))
    w = cr_witness(order, succ)
    if w is not None:
        raise CRViolation(*(order.carrier[i] for i in w))
    return GCFrame(order, succ, tuple(transpose(succ, order.n)))


def cr_closure(order, succ):
    """Smallest relation containing ``succ`` that satisfies (CR)."""
    n = order.n
    out = []
    for x2 in range(n):
        acc = 0
        for x in members(order.down[x2]):
            for y in members(succ[x]):
                acc |= order.down[y]
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class ComplexAlgebra:
    """Up-sets of a GC-frame with union, intersection, the rough operators and,
    per signature, Rauszer's implication and co-implication.

    ``upper_of[i]`` / ``lower_of[i]`` are positions in ``family.sets``.
    """

    frame: GCFrame
    family: UpSetFamily
    signature: str
    upper_of: tuple = field(repr=False)
    lower_of: tuple = field(repr=False)

    @property
    def sets(self):
        return self.family.sets

    def upper(self, mask):
        return kernels.upper(self.frame.succ, mask)

    def lower(self, mask):
        return kernels.lower(self.frame.pred, mask)

    def implies(self, a, b):
        if self.signature == "BDLGC":
            raise UnsupportedOperation("->", self.signature)
        return kernels.implication(self.frame.order.up, a, b)

    def coimplies(self, a, b):
        if self.signature != "HBGC":
            raise UnsupportedOperation("<-", self.signature)
        return kernels.coimplication(self.frame.order.down, a, b)

    def name(self, mask):
        return set_name(self.frame.carrier, mask)

    @cached_property
    def lattice(self):
        return lattice_from_family(self.family)


def complex_algebra(frame: GCFrame, signature="BDLGC", bound=None) -> ComplexAlgebra:
    check_signature(signature)
    fam = upsets(frame.order, bound)
    ups, lows = kernels.approx_all(frame.succ, frame.pred, fam.sets)
    pos = fam._positions
    upper_of, lower_of = [], []
    for a, u, l in zip(fam.sets, ups, lows):
        if u not in pos:
            raise ClosureViolation(fam.to_set(a), "upper")
        if l not in pos:
            raise ClosureViolation(fam.to_set(a), "lower")
        upper_of.append(pos[u])
        lower_of.append(pos[l])
    return ComplexAlgebra(frame, fam, signature, tuple(upper_of), tuple(lower_of))


def as_galois_pair(alg: ComplexAlgebra) -> GaloisPair:
    """(upper, lower) on the lattice of up-sets, validated by the adjunction law."""
    return validate_galois(alg.lattice, alg.upper_of, alg.lower_of, alg.signature)


def require_upset(alg, mask):
    if mask not in alg.family:
        q = alg.frame.order
        for x in members(mask):
            outside = q.up[x] & ~mask
            if outside:
                raise NotUpClosed(q.to_set(mask), q.carrier[x], q.carrier[members(outside)[0]])
        raise LGCError(f"{mask:#b} is not a subset of the carrier")
    return mask
