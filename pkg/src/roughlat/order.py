"""Finite quasiorders and their Alexandrov topologies of up-closed sets.

Subsets are int bitmasks over carrier positions (see :mod:`roughlat.bits`).
Element arguments are carrier indices; use :meth:`QuasiOrder.index` to
translate identifiers.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from roughlat import kernels
from roughlat.bits import canonical_sort, full, mask_of, members
from roughlat.config import UPSET_BOUND, enumeration_bound
from roughlat.errors import (
    CarrierTooLarge,
    LGCError,
    NotReflexive,
    NotTransitive,
    NotUpClosed,
    UnknownElement,
)


@dataclass(frozen=True)
class QuasiOrder:
    """A reflexive, transitive relation on a finite carrier.

    ``up[x]`` is the mask of ``{y | x <= y}`` and ``down[x]`` of ``{y | y <= x}``.
    Build instances with :func:`validate_quasiorder` unless the rows are known good.
    """

    carrier: tuple
    up: tuple
    down: tuple = field(repr=False)

    @property
    def n(self):
        return len(self.carrier)

    def index(self, element):
        try:
            return self.carrier.index(element)
        except ValueError:
            raise UnknownElement(element) from None

    def leq(self, x, y):
        return bool((self.up[x] >> y) & 1)

    def to_mask(self, elements):
        return mask_of(self.index(e) for e in elements)

    def to_set(self, mask):
        return frozenset(self.carrier[i] for i in members(mask))

    def matrix(self):
        return [[self.leq(x, y) for y in range(self.n)] for x in range(self.n)]

    def pairs(self):
        return [(self.carrier[x], self.carrier[y]) for x in range(self.n) for y in members(self.up[x])]

    @property
    def full(self):
        return full(self.n)

    def is_antisymmetric(self):
        return all(self.up[x] & self.down[x] == 1 << x for x in range(self.n))

    def reverse(self):
        return QuasiOrder(self.carrier, self.down, self.up)


def _rows_from_table(n, table):
    up = []
    for x in range(n):
        row = table[x]
        if len(row) != n:
            raise LGCError(f"relation table row {x} has length {len(row)}, expected {n}")
        up.append(mask_of(y for y in range(n) if row[y]))
    return up


def _looks_like_table(n, relation):
    if len(relation) != n:
        return False
    for row in relation:
        if not hasattr(row, "__len__") or len(row) != n:
            return False
        # ints are never table entries: (0, 1) is an identifier pair on an int carrier
        if not all(isinstance(v, bool) or type(v).__name__ == "bool_" for v in row):
            return False
    return True


def relation_rows(carrier, relation):
    """Row masks from either an n x n table of bools or an iterable of identifier pairs."""
    carrier = tuple(carrier)
    n = len(carrier)
    relation = list(relation)
    if n and _looks_like_table(n, relation):
        return _rows_from_table(n, relation)
    pos = {c: i for i, c in enumerate(carrier)}
    rows = [0] * n
    for a, b in relation:
        if a not in pos:
            raise UnknownElement(a)
        if b not in pos:
            raise UnknownElement(b)
        rows[pos[a]] |= 1 << pos[b]
    return rows


def transpose(rows, n=None):
    n = len(rows) if n is None else n
    cols = [0] * n
    for x, row in enumerate(rows):
        for y in members(row):
            cols[y] |= 1 << x
    return cols


def from_rows(carrier, up):
    """Unchecked constructor from up-rows."""
    return QuasiOrder(tuple(carrier), tuple(up), tuple(transpose(up, len(up))))


def validate_quasiorder(carrier, relation):
    carrier = tuple(carrier)
    if len(set(carrier)) != len(carrier):
        raise LGCError("carrier contains duplicate identifiers")
    up = relation_rows(carrier, relation)
    n = len(carrier)
    for x in range(n):
        if not (up[x] >> x) & 1:
            raise NotReflexive(carrier[x])
    for x in range(n):
        for y in members(up[x]):
            missing = up[y] & ~up[x]
            if missing:
                z = members(missing)[0]
                raise NotTransitive(carrier[x], carrier[y], carrier[z])
    return from_rows(carrier, up)


def reflexive_transitive_closure(carrier, rows):
    """Warshall closure of row masks, returned as a QuasiOrder."""
    n = len(rows)
    up = [rows[x] | (1 << x) for x in range(n)]
    for k in range(n):
        bit = 1 << k
        for x in range(n):
            if up[x] & bit:
                up[x] |= up[k]
    return from_rows(carrier, up)


@dataclass(frozen=True)
class UpSetFamily:
    """A union/intersection-closed family of subsets containing the empty set and the carrier.

    ``sets`` is kept in canonical (cardinality, bit pattern) order, so two
    families are equal iff their ``sets`` tuples are.
    """

    carrier: tuple
    sets: tuple
    base: QuasiOrder | None = field(default=None, compare=False, repr=False)

    @property
    def n(self):
        return len(self.carrier)

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, mask):
        return mask in self._positions

    @property
    def _positions(self):
        pos = self.__dict__.get("_pos")
        if pos is None:
            pos = {m: i for i, m in enumerate(self.sets)}
            object.__setattr__(self, "_pos", pos)
        return pos

    def position(self, mask):
        return self._positions[mask]

    def to_set(self, mask):
        return frozenset(self.carrier[i] for i in members(mask))


def validate_family(carrier, sets):
    """Check the Alexandrov axioms on a finite family of masks."""
    carrier = tuple(carrier)
    fam = set(sets)
    top = full(len(carrier))
    if 0 not in fam or top not in fam:
        raise LGCError("family must contain the empty set and the carrier")
    for a in fam:
        if a & ~top:
            raise LGCError(f"member {a:#b} is not a subset of the carrier")
        for b in fam:
            if a | b not in fam or a & b not in fam:
                raise LGCError(f"family not closed under union/intersection at {a:#b}, {b:#b}")
    return UpSetFamily(carrier, canonical_sort(fam))


def upsets(q, bound=None):
    bound = enumeration_bound(UPSET_BOUND) if bound is None else bound
    if q.n > bound:
        raise CarrierTooLarge(q.n, bound)
    return UpSetFamily(q.carrier, canonical_sort(kernels.upsets(q.up, q.down)), q)


def is_up_closed(q, mask):
    return kernels.is_up_closed(q.up, mask)


def up_closure(q, mask):
    return kernels.up_closure(q.up, mask)


def _check_element(q, x):
    if not isinstance(x, int) or not 0 <= x < q.n:
        raise UnknownElement(x)


def least_neighborhood(q, x):
    _check_element(q, x)
    return q.up[x]


def minimal_base(q):
    return canonical_sort(q.up)


def specialization_order(t):
    """x <= y iff y lies in every member of ``t`` that contains x."""
    n = t.n
    top = full(n)
    up = []
    for x in range(n):
        bit = 1 << x
        nbhd = top
        for s in t.sets:
            if s & bit:
                nbhd &= s
        up.append(nbhd)
    return from_rows(t.carrier, up)


def interior(t, subset):
    out = 0
    for s in t.sets:
        if s & ~subset == 0:
            out |= s
    return out


def _require_up_closed(q, mask):
    for x in members(mask):
        outside = q.up[x] & ~mask
        if outside:
            raise NotUpClosed(q.to_set(mask), q.carrier[x], q.carrier[members(outside)[0]])


def rauszer_implication(q, a, b):
    """``{x | every y >= x in a is also in b}``."""
    _require_up_closed(q, a)
    _require_up_closed(q, b)
    return kernels.implication(q.up, a, b)


def rauszer_coimplication(q, a, b):
    """``{x | some y <= x lies in b but not in a}``."""
    _require_up_closed(q, a)
    _require_up_closed(q, b)
    return kernels.coimplication(q.down, a, b)
