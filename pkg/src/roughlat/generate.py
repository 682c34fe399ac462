"""Seeded random instances. Equal specs give identical instances.

Every generator draws from one ``random.Random(seed)`` stream in a fixed
order, so the output depends only on the spec.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from roughlat.errors import BadSpec
from roughlat.frame import GCFrame, cr_closure, validate_gcframe
from roughlat.galois import GaloisPair, SIGNATURES, random_galois_pair, validate_galois
from roughlat.lattice import FiniteLattice, lattice_from_family
from roughlat.order import QuasiOrder, reflexive_transitive_closure, upsets
from roughlat.rough import ApproximationSpace, from_succ

KINDS = ("poset", "quasiorder", "lattice", "frame", "algebra")
MAX_SIZE = {"poset": 12, "quasiorder": 12, "lattice": 7, "frame": 12, "algebra": 7}


@dataclass(frozen=True)
class InstanceSpec:
    kind: str
    size: int
    seed: int
    density: float = 0.3
    signature: str = "BDLGC"

    def validate(self):
        if self.kind not in KINDS:
            raise BadSpec(f"unknown kind {self.kind!r}")
        if not 0 <= self.size <= MAX_SIZE[self.kind]:
            raise BadSpec(f"size {self.size} outside 0..{MAX_SIZE[self.kind]} for {self.kind}")
        if not 0.0 <= self.density <= 1.0:
            raise BadSpec(f"density {self.density} outside [0, 1]")
        if self.signature not in SIGNATURES:
            raise BadSpec(f"unknown signature {self.signature!r}")
        if not -(2**63) <= self.seed < 2**64:
            raise BadSpec("seed must fit in 64 bits")
        return self


def point_names(n):
    return tuple(f"p{i}" for i in range(n))


def _random_dag(rng, n, density):
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                rows[i] |= 1 << j
    return rows


def _random_relation(rng, n, density, loops=True):
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if (loops or i != j) and rng.random() < density:
                rows[i] |= 1 << j
    return rows


def _poset(rng, spec):
    return reflexive_transitive_closure(point_names(spec.size), _random_dag(rng, spec.size, spec.density))


def _quasiorder(rng, spec):
    rows = _random_relation(rng, spec.size, spec.density / 2, loops=False)
    return reflexive_transitive_closure(point_names(spec.size), rows)


def gen_poset(spec: InstanceSpec) -> QuasiOrder:
    """Closure of a random DAG: edge i -> j (i < j) with probability ``density``."""
    spec.validate()
    return _poset(random.Random(spec.seed), spec)


def gen_quasiorder(spec: InstanceSpec) -> QuasiOrder:
    """Closure of an arbitrary random relation, so cycles (non-antisymmetric pairs) occur.

    Off-diagonal pairs are drawn at half the density to keep some orders sparse.
    """
    spec.validate()
    return _quasiorder(random.Random(spec.seed), spec)


def gen_lattice(spec: InstanceSpec) -> FiniteLattice:
    """The up-set lattice of a random poset (finite distributive by construction)."""
    spec.validate()
    return lattice_from_family(upsets(_poset(random.Random(spec.seed), spec)))


def gen_algebra(spec: InstanceSpec) -> GaloisPair:
    spec.validate()
    rng = random.Random(spec.seed)
    lat = lattice_from_family(upsets(_poset(rng, spec)))
    pair = random_galois_pair(lat, rng, spec.signature)
    return validate_galois(lat, pair.f, pair.g, spec.signature)


def gen_frame(spec: InstanceSpec) -> GCFrame:
    """Random quasiorder plus a random relation closed under (CR)."""
    spec.validate()
    rng = random.Random(spec.seed)
    order = _quasiorder(rng, spec)
    rel = _random_relation(rng, spec.size, spec.density / 3)
    return validate_gcframe(order, cr_closure(order, rel))


def gen_space(spec: InstanceSpec) -> ApproximationSpace:
    """An approximation space with an arbitrary random relation."""
    spec.validate()
    rng = random.Random(spec.seed)
    return from_succ(point_names(spec.size), _random_relation(rng, spec.size, spec.density))


def generate(spec: InstanceSpec):
    return {
        "poset": gen_poset,
        "quasiorder": gen_quasiorder,
        "lattice": gen_lattice,
        "frame": gen_frame,
        "algebra": gen_algebra,
    }[spec.validate().kind](spec)


def instance_specs(kind, count, seed, max_size, signature="BDLGC", min_size=0, density=None):
    """Specs for a batch run, all drawn from a master stream seeded with ``seed``.

    Four in five instances have ``max_size`` points; every fifth cycles through
    ``min_size..max_size`` so degenerate carriers are covered too.
    """
    master = random.Random(seed)
    span = max_size - min_size + 1
    out = []
    for i in range(count):
        d = density if density is not None else round(master.uniform(0.1, 0.7), 3)
        size = min_size + (i // 5) % span if i % 5 == 4 else max_size
        out.append(InstanceSpec(kind, size, master.getrandbits(63), d, signature))
    return out
