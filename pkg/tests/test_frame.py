import random

import pytest

from roughlat import frame as fr
from roughlat.errors import ClosureViolation, CRViolation, UnsupportedOperation
from roughlat.generate import InstanceSpec, gen_frame, gen_quasiorder
from roughlat.order import rauszer_coimplication, rauszer_implication, validate_quasiorder


@pytest.fixture
def chain():
    return validate_quasiorder("xy", [("x", "x"), ("y", "y"), ("x", "y")])


def test_cr_violation_witness(chain):
    with pytest.raises(CRViolation) as e:
        fr.validate_gcframe(chain, [("x", "x")])
    assert e.value.witness == ("x", "y", "x", "x")


def test_cr_closure_repairs(chain):
    succ = fr.cr_closure(chain, (0b01, 0))
    frame = fr.validate_gcframe(chain, succ)
    assert set(frame.relation_pairs()) == {("x", "x"), ("y", "x")}


def test_row_masks_and_pairs_agree(chain):
    a = fr.validate_gcframe(chain, (0b01, 0b01))
    b = fr.validate_gcframe(chain, [("x", "x"), ("y", "x")])
    assert a == b


def test_composite_equals_quantifier_form():
    rng = random.Random(17)
    violations = 0
    for s in range(400):
        q = gen_quasiorder(InstanceSpec("quasiorder", rng.randint(0, 6), s, rng.random()))
        succ = tuple(rng.getrandbits(q.n) if q.n else 0 for _ in range(q.n))
        a = fr.cr_witness(q, succ)
        b = fr.cr_witness_quantified(q, succ)
        assert (a is None) == (b is None)
        violations += a is not None
        if a is not None:
            x, x2, y, y2 = a
            assert (succ[x] >> y) & 1 and q.leq(x, x2) and q.leq(y2, y) and not (succ[x2] >> y2) & 1
        closed = fr.cr_closure(q, succ)
        assert fr.cr_witness(q, closed) is None
        assert all(s_ & ~c == 0 for s_, c in zip(succ, closed))
    assert violations > 50


def test_complex_algebra_example(chain):
    frame = fr.validate_gcframe(chain, (0b01, 0b01))
    alg = fr.complex_algebra(frame, "HBGC")
    assert alg.sets == (0, 0b10, 0b11)
    # upper: x R y for some y in A; only {x,y} contains x
    assert [alg.upper(a) for a in alg.sets] == [0, 0, 0b11]
    # nothing is R-related to y, so y lies in every lower approximation
    assert [alg.lower(a) for a in alg.sets] == [0b10, 0b10, 0b11]
    assert alg.implies(0b10, 0) == 0
    assert alg.coimplies(0b11, 0b10) == 0


def test_signature_gates_operations(chain):
    frame = fr.validate_gcframe(chain, (0, 0))
    with pytest.raises(UnsupportedOperation):
        fr.complex_algebra(frame, "BDLGC").implies(0, 0)
    with pytest.raises(UnsupportedOperation):
        fr.complex_algebra(frame, "HGC").coimplies(0, 0)


def test_closure_violation_on_bypassed_frame(chain):
    # R = {(x, x)} fails (CR); bypassing validation, upper({x, y}) = {x} is not an up-set
    bad = fr.GCFrame(chain, (0b01, 0), (0b01, 0))
    with pytest.raises(ClosureViolation):
        fr.complex_algebra(bad)


FRAMES = [gen_frame(InstanceSpec("frame", s % 8, s, 0.2 + (s % 6) / 10)) for s in range(100)]


@pytest.mark.parametrize("frame", FRAMES)
def test_random_frame_algebra(frame):
    alg = fr.complex_algebra(frame, "HBGC")
    n, q = frame.n, frame.order
    sets = alg.sets
    for a in sets:
        up = sum(1 << x for x in range(n) if frame.succ[x] & a)
        lo = sum(1 << x for x in range(n) if all((a >> y) & 1 for y in range(n) if frame.related(y, x)))
        assert alg.upper(a) == up and alg.lower(a) == lo
        assert up in alg.family and lo in alg.family
    for a in sets:
        for b in sets:
            assert (alg.upper(a) & ~b == 0) == (a & ~alg.lower(b) == 0)
            assert alg.implies(a, b) == rauszer_implication(q, a, b)
            assert alg.coimplies(a, b) == rauszer_coimplication(q, a, b)
    pair = fr.as_galois_pair(alg)
    assert pair.base.n == len(sets)
