"""Subsets of a finite carrier as Python ints: bit ``i`` set iff element ``i`` is a member."""


def mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members(mask):
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def full(n):
    return (1 << n) - 1


def popcount(mask):
    return mask.bit_count()


def canonical_key(mask):
    return (popcount(mask), mask)


def canonical_sort(masks):
    """Deduplicate and order by (cardinality, bit pattern)."""
    return tuple(sorted(set(masks), key=canonical_key))
