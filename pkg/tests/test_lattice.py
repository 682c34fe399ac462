import itertools
import random

import pytest

from roughlat import lattice as lt
from roughlat.errors import (
    NoCoimplication,
    NoLUB,
    NoRelativePseudocomplement,
    NotAPartialOrder,
    NotDistributive,
)
from roughlat.generate import InstanceSpec, gen_lattice
from roughlat.order import upsets


def idx(lat, *names):
    return [lat.index(n) for n in names]


def moore_lattice(rng, base=4, picks=5):
    """Random closure-system lattice; every finite lattice arises this way."""
    top = (1 << base) - 1
    fam = {top} | {rng.getrandbits(base) for _ in range(picks)}
    changed = True
    while changed:
        changed = False
        for a, b in list(itertools.product(fam, repeat=2)):
            if a & b not in fam:
                fam.add(a & b)
                changed = True
    elems = sorted(fam)
    names = [f"s{m}" for m in elems]
    leq = [(names[i], names[j]) for i, a in enumerate(elems) for j, b in enumerate(elems) if a & ~b == 0]
    return lt.lattice_from_order(names, leq)


def sample_lattices():
    rng = random.Random(2024)
    out = [moore_lattice(rng, rng.randint(1, 4), rng.randint(0, 6)) for _ in range(60)]
    out += [gen_lattice(InstanceSpec("lattice", rng.randint(0, 3), rng.getrandbits(32), rng.random())) for _ in range(20)]
    return out


LATTICES = sample_lattices()


class TestConstruction:
    def test_chain(self, chain2):
        assert chain2.join == ((0, 1), (1, 1))
        assert chain2.meet == ((0, 0), (0, 1))
        assert (chain2.bottom, chain2.top) == (0, 1)

    def test_b4(self, b4):
        a, b, zero, one = idx(b4, "a", "b", "0", "1")
        assert b4.join[a][b] == one
        assert b4.meet[a][b] == zero

    def test_fork(self):
        leq = [("0", "0"), ("a", "a"), ("b", "b"), ("0", "a"), ("0", "b")]
        with pytest.raises(NoLUB) as e:
            lt.lattice_from_order(["0", "a", "b"], leq)
        assert (e.value.x, e.value.y) == ("a", "b")

    def test_not_partial_order(self):
        with pytest.raises(NotAPartialOrder):
            lt.lattice_from_order("ab", [("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")])


class TestDistributive:
    def test_examples(self, chain3, b4, m3, n5):
        assert lt.is_distributive(chain3)
        assert lt.is_distributive(b4)
        assert not lt.is_distributive(m3)
        assert not lt.is_distributive(n5)

    def test_require(self, m3):
        with pytest.raises(NotDistributive):
            lt.require_distributive(m3)


class TestIrreducibles:
    def test_examples(self, chain3, b4, singleton):
        assert lt.join_irreducibles(chain3) == tuple(idx(chain3, "m", "1"))
        assert lt.join_irreducibles(b4) == tuple(idx(b4, "a", "b"))
        assert lt.join_irreducibles(singleton) == ()

    @pytest.mark.parametrize("lat", LATTICES)
    def test_pairwise_definition(self, lat):
        want = tuple(
            a for a in range(lat.n)
            if a != lat.bottom and all(a in (b, c) for b in range(lat.n) for c in range(lat.n) if lat.join[b][c] == a)
        )
        assert lt.join_irreducibles(lat) == want


class TestImplication:
    def test_examples(self, b4):
        zero, a, b, one = idx(b4, "0", "a", "b", "1")
        assert lt.implication(b4, zero, a) == one
        assert lt.implication(b4, a, b) == b
        assert lt.implication(b4, one, a) == a

    def test_coimplication_examples(self, b4):
        zero, a, b, one = idx(b4, "0", "a", "b", "1")
        assert lt.coimplication(b4, one, a) == zero
        assert lt.coimplication(b4, a, one) == b
        assert lt.coimplication(b4, zero, b) == b

    def test_missing_in_m3(self, m3):
        a, b = idx(m3, "a", "b")
        with pytest.raises(NoRelativePseudocomplement):
            lt.implication(m3, a, b)
        with pytest.raises(NoCoimplication):
            lt.coimplication(m3, a, b)

    @pytest.mark.parametrize("lat", LATTICES)
    def test_adjunction_laws(self, lat):
        n = lat.n
        for a, b in itertools.product(range(n), repeat=2):
            try:
                imp = lt.implication(lat, a, b)
            except NoRelativePseudocomplement:
                assert not lat.distributive
            else:
                for x in range(n):
                    assert lat.leq(lat.meet[a][x], b) == lat.leq(x, imp)
            try:
                co = lt.coimplication(lat, a, b)
            except NoCoimplication:
                assert not lat.distributive
            else:
                for x in range(n):
                    assert lat.leq(b, lat.join[a][x]) == lat.leq(co, x)


class TestInfiniteLaws:
    def test_examples(self, chain3, b4, m3):
        assert lt.check_jid(chain3)
        assert lt.check_jid(b4) and lt.check_mid(b4)
        assert not lt.check_jid(m3)
        assert not lt.check_mid(m3)

    @pytest.mark.parametrize("lat", LATTICES)
    def test_match_distributivity(self, lat):
        assert lt.check_jid(lat) == lat.distributive == lt.check_mid(lat)

    def test_sampled_path(self, m3, b4):
        assert not lt.check_jid(m3, exhaustive_bound=0, samples=500)
        assert lt.check_jid(b4, exhaustive_bound=0, samples=500)

    def test_sampled_path_large(self):
        big = gen_lattice(InstanceSpec("lattice", 5, 3, 0.2))
        assert big.n > 10
        assert lt.check_jid(big) and lt.check_mid(big)

    def test_empty_join_is_bottom(self, b4):
        # S = empty: x & bottom == bottom for every x
        w = lt.jid_witness(b4)
        assert w is None


class TestSpatialWeaklyAtomic:
    @pytest.mark.parametrize("lat", LATTICES)
    def test_every_finite_lattice(self, lat):
        assert lt.is_spatial(lat)
        assert lt.is_weakly_atomic(lat)

    def test_named(self, singleton, b4, m3, n5):
        for lat in (singleton, b4, m3, n5):
            assert lt.is_spatial(lat) and lt.is_weakly_atomic(lat)

    def test_b4_covers(self, b4):
        zero, a = idx(b4, "0", "a")
        assert (b4.upper_covers[zero] >> a) & 1

    @pytest.mark.parametrize("lat", LATTICES[:20])
    def test_spatial_definition_oracle(self, lat):
        irr = [a for a in range(lat.n) if a != lat.bottom
               and all(a in (b, c) for b in range(lat.n) for c in range(lat.n) if lat.join[b][c] == a)]
        for a in range(lat.n):
            acc = lat.bottom
            for j in irr:
                if lat.leq(j, a):
                    acc = lat.join[acc][j]
            assert acc == a

    def test_profile_consistency(self, m3, b4):
        assert lt.profile(b4) == lt.LatticeProfile(True, True, True, True, True, True, True)
        p = lt.profile(m3)
        assert not p.distributive and not p.heyting and not p.heyting_brouwer and not p.jid


class TestBirkhoff:
    def test_examples(self, chain3, b4, chain2):
        d = lt.birkhoff_dual(chain3)
        assert d.carrier == ("m", "1")
        assert d.leq(d.index("1"), d.index("m")) and not d.leq(d.index("m"), d.index("1"))
        d = lt.birkhoff_dual(b4)
        assert d.carrier == ("a", "b") and d.up == (0b01, 0b10)
        assert lt.birkhoff_dual(chain2).carrier == ("1",)

    def test_not_distributive(self, m3):
        with pytest.raises(NotDistributive):
            lt.birkhoff_dual(m3)

    @pytest.mark.parametrize("lat", [l for l in LATTICES if l.distributive])
    def test_isomorphism(self, lat):
        t = upsets(lt.birkhoff_dual(lat))
        image = [lt.birkhoff_image(lat, x) for x in range(lat.n)]
        assert sorted(image) == sorted(t.sets)
        for x, y in itertools.product(range(lat.n), repeat=2):
            assert image[lat.join[x][y]] == image[x] | image[y]
            assert image[lat.meet[x][y]] == image[x] & image[y]
