"""Upper and lower rough approximations induced by an arbitrary relation."""
from __future__ import annotations

from dataclasses import dataclass, field

from roughlat import kernels
from roughlat.bits import members
from roughlat.errors import LGCError, UnknownElement
from roughlat.order import relation_rows, transpose


@dataclass(frozen=True)
class ApproximationSpace:
    """A universe with relation R; ``succ[x] = {y | x R y}``, ``pred[x] = {y | y R x}``."""

    universe: tuple
    succ: tuple
    pred: tuple = field(repr=False)

    @property
    def n(self):
        return len(self.universe)

    def index(self, element):
        try:
            return self.universe.index(element)
        except ValueError:
            raise UnknownElement(element) from None

    def to_mask(self, elements):
        m = 0
        for e in elements:
            m |= 1 << self.index(e)
        return m

    def to_set(self, mask):
        return frozenset(self.universe[i] for i in members(mask))

    def related(self, x, y):
        return bool((self.succ[x] >> y) & 1)


def approximation_space(universe, relation):
    """Build from an n x n boolean table or an iterable of identifier pairs."""
    universe = tuple(universe)
    if len(set(universe)) != len(universe):
        raise LGCError("universe contains duplicate identifiers")
    rows = relation_rows(universe, relation)
    return ApproximationSpace(universe, tuple(rows), tuple(transpose(rows, len(rows))))


def from_succ(universe, succ):
    return ApproximationSpace(tuple(universe), tuple(succ), tuple(transpose(succ, len(succ))))


def upper(space, subset):
    """``{x | x R y for some y in subset}``."""
    return kernels.upper(space.succ, subset)


def lower(space, subset):
    """``{x | y R x implies y in subset}``."""
    return kernels.lower(space.pred, subset)


def approximate_all(space, subsets):
    """Upper and lower approximations of many subsets in one kernel call."""
    return kernels.approx_all(space.succ, space.pred, list(subsets))
