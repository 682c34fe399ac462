import itertools
import random

import pytest

from roughlat.rough import approximate_all, approximation_space, from_succ, lower, upper
from roughlat.errors import LGCError, UnknownElement


def oracle_upper(n, rel, a):
    return {x for x in range(n) if any((x, y) in rel for y in a)}


def oracle_lower(n, rel, a):
    return {x for x in range(n) if all(y in a for y in range(n) if (y, x) in rel)}


def to_set(mask):
    return {i for i in range(mask.bit_length()) if (mask >> i) & 1}


def to_mask(s):
    return sum(1 << i for i in s)


def test_example():
    sp = approximation_space("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    a = sp.to_mask("c")
    assert sp.to_set(upper(sp, a)) == {"a", "b"}
    assert sp.to_set(lower(sp, a)) == {"a"}


def test_empty_relation():
    sp = approximation_space("ab", [])
    assert upper(sp, 0b11) == 0
    assert lower(sp, 0) == 0b11


def test_boolean_table_and_errors():
    sp = approximation_space("ab", [[False, True], [False, False]])
    assert sp.related(0, 1) and not sp.related(1, 0)
    with pytest.raises(UnknownElement):
        approximation_space("ab", [("a", "q")])
    with pytest.raises(LGCError):
        approximation_space("aa", [])


def check_space(n, rel):
    succ = [to_mask(y for (x, y) in rel if x == i) for i in range(n)]
    sp = from_succ(range(n), succ)
    subsets = list(range(1 << n))
    ups, lows = approximate_all(sp, subsets)
    for a in subsets:
        assert to_set(ups[a]) == oracle_upper(n, rel, to_set(a))
        assert to_set(lows[a]) == oracle_lower(n, rel, to_set(a))
    for a, b in itertools.product(subsets, repeat=2):
        assert (ups[a] & ~b == 0) == (a & ~lows[b] == 0)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_adjunction_every_relation(n):
    pairs = list(itertools.product(range(n), repeat=2))
    for bits in range(1 << len(pairs)):
        check_space(n, {p for k, p in enumerate(pairs) if (bits >> k) & 1})


@pytest.mark.parametrize("n", [4, 5, 6])
def test_adjunction_random_relations(n):
    rng = random.Random(n)
    for _ in range(25 if n < 6 else 8):
        d = rng.random()
        check_space(n, {p for p in itertools.product(range(n), repeat=2) if rng.random() < d})
