import itertools

import pytest

from roughlat import canonical as cn
from roughlat.errors import CarrierTooLarge, NotDistributive
from roughlat.galois import GaloisPair, validate_galois
from roughlat.generate import InstanceSpec, gen_algebra, gen_lattice


def identity_pair(lat, signature="HBGC"):
    ident = list(range(lat.n))
    return validate_galois(lat, ident, ident, signature)


def brute_prime_filters(lat):
    """Oracle: every subset tested against the textbook axioms."""
    out = []
    for m in range(1, 1 << lat.n):
        s = {x for x in range(lat.n) if (m >> x) & 1}
        if lat.bottom in s:
            continue
        if any(y not in s for x in s for y in range(lat.n) if lat.leq(x, y)):
            continue
        if any(lat.meet[x][y] not in s for x in s for y in s):
            continue
        if any(lat.join[x][y] in s and x not in s and y not in s for x in range(lat.n) for y in range(lat.n)):
            continue
        out.append(m)
    return sorted(out)


class TestPrimeFilters:
    def test_b4(self, b4):
        pfs = cn.prime_filters(b4)
        assert [b4.carrier[p.generator] for p in pfs] == ["a", "b"]
        assert [p.members for p in pfs] == [b4.up[b4.index("a")], b4.up[b4.index("b")]]

    def test_chain(self, chain3):
        assert [chain3.carrier[p.generator] for p in cn.prime_filters(chain3)] == ["m", "1"]

    def test_singleton_has_none(self, singleton):
        assert cn.prime_filters(singleton) == []

    def test_non_distributive(self, m3):
        with pytest.raises(NotDistributive):
            cn.prime_filters(m3)

    @pytest.mark.parametrize("seed", range(25))
    def test_against_oracle(self, seed):
        lat = gen_lattice(InstanceSpec("lattice", seed % 4, seed, 0.35))
        assert sorted(p.members for p in cn.prime_filters(lat)) == brute_prime_filters(lat)

    def test_filter_bound(self):
        lat = gen_lattice(InstanceSpec("lattice", 5, 3, 0.1))
        with pytest.raises(CarrierTooLarge):
            cn.enumerate_filters(lat, bound=4)


class TestCanonicalFrame:
    def test_b4_identity(self, b4):
        cf = cn.canonical_frame(identity_pair(b4))
        assert cf.frame.carrier == ("^a", "^b")
        assert set(cf.frame.relation_pairs()) == {("^a", "^a"), ("^b", "^b")}

    def test_chain_identity(self, chain3):
        cf = cn.canonical_frame(identity_pair(chain3))
        # ^1 = {1} is contained in ^m = {m, 1}
        o = cf.frame.order
        assert o.leq(o.index("^1"), o.index("^m")) and not o.leq(o.index("^m"), o.index("^1"))

    @pytest.mark.parametrize("seed", range(30))
    def test_relation_oracle_and_star_clauses(self, seed):
        pair = gen_algebra(InstanceSpec("algebra", seed % 5, seed, 0.3, "HBGC"))
        cf = cn.canonical_frame(pair)
        lat = pair.base
        for (i, F), (k, G) in itertools.product(enumerate(cf.filters), repeat=2):
            want = all(pair.f[a] in F for a in range(lat.n) if a in G)
            assert cf.frame.related(i, k) == want
            assert cn.star_primary(pair, F, G) == want == cn.star_alternative(pair, F, G)


class TestEmbedding:
    @pytest.mark.parametrize("seed", range(30))
    def test_random_algebras(self, seed):
        pair = gen_algebra(InstanceSpec("algebra", seed % 5, 100 + seed, 0.4, "HBGC"))
        rep = cn.finite_iso_report(pair)
        assert rep.ok, [r.law for r in rep.failures]
        assert cn.verify_embedding(pair).ok
        h = cn.stone_map(pair)
        cf = cn.canonical_frame(pair)
        for x in range(pair.base.n):
            assert h[x] == sum(1 << k for k, pf in enumerate(cf.filters) if (pf.members >> x) & 1)

    def test_signatures(self, b4):
        for sig in ("BDLGC", "HGC", "HBGC"):
            assert cn.verify_finite_iso(identity_pair(b4, sig))

    def test_report_flags_fake_pair(self, b4):
        # constant maps do not form a Galois pair: h(f(0)) = h(1) but upper(h(0)) is empty
        fake = GaloisPair(b4, (3, 3, 3, 3), (0, 0, 0, 0), "HBGC")
        rep = cn.finite_iso_report(fake)
        assert not rep.ok
        assert "h(f(x)) = h(x) upper" in [r.law for r in rep.failures]


@pytest.mark.parametrize("seed", range(12))
def test_prime_filter_theorem(seed):
    lat = gen_lattice(InstanceSpec("lattice", seed % 4, seed, 0.4))
    rep = cn.prime_filter_theorem_report(lat)
    assert rep.ok, [r.law for r in rep.failures]
