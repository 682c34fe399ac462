# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counterparts of ``_pykernels``. Masks are limited to 64 bits."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64


cdef inline int low_index(uint64_t m) noexcept nogil:
    return __builtin_ctzll(m)


cdef int load(rows, uint64_t* out) except -1:
    cdef Py_ssize_t i, n = len(rows)
    if n > MAXN:
        raise OverflowError("compiled kernels support at most 64 elements")
    for i in range(n):
        out[i] = <uint64_t>rows[i]
    return 0


def upsets(up, down, int n):
    """All up-closed subsets, by filtering every candidate mask."""
    cdef uint64_t rows[MAXN]
    cdef uint64_t mask, m, limit
    cdef int x
    cdef bint ok
    if n >= 63:
        raise OverflowError("compiled kernels support at most 62 elements for enumeration")
    load(up, rows)
    out = []
    limit = (<uint64_t>1) << n
    mask = 0
    while mask < limit:
        ok = True
        m = mask
        while m:
            x = low_index(m)
            if rows[x] & ~mask:
                ok = False
                break
            m &= m - 1
        if ok:
            out.append(mask)
        mask += 1
    return out


def is_up_closed(up, mask):
    cdef uint64_t rows[MAXN]
    cdef uint64_t s = <uint64_t>mask, m = s
    load(up, rows)
    while m:
        if rows[low_index(m)] & ~s:
            return False
        m &= m - 1
    return True


def up_closure(up, mask):
    cdef uint64_t rows[MAXN]
    cdef uint64_t m = <uint64_t>mask, out = 0
    load(up, rows)
    while m:
        out |= rows[low_index(m)]
        m &= m - 1
    return out


def upper(succ, mask):
    cdef uint64_t rows[MAXN]
    cdef uint64_t s = <uint64_t>mask, out = 0
    cdef Py_ssize_t x, n = len(succ)
    load(succ, rows)
    for x in range(n):
        if rows[x] & s:
            out |= (<uint64_t>1) << x
    return out


def lower(pred, mask):
    cdef uint64_t rows[MAXN]
    cdef uint64_t s = <uint64_t>mask, out = 0
    cdef Py_ssize_t x, n = len(pred)
    load(pred, rows)
    for x in range(n):
        if not (rows[x] & ~s):
            out |= (<uint64_t>1) << x
    return out


def approx_all(succ, pred, masks):
    cdef uint64_t srows[MAXN]
    cdef uint64_t prows[MAXN]
    cdef uint64_t s, u, l
    cdef Py_ssize_t x, n = len(succ)
    load(succ, srows)
    load(pred, prows)
    ups = []
    lows = []
    for mask in masks:
        s = <uint64_t>mask
        u = 0
        l = 0
        for x in range(n):
            if srows[x] & s:
                u |= (<uint64_t>1) << x
            if not (prows[x] & ~s):
                l |= (<uint64_t>1) << x
        ups.append(u)
        lows.append(l)
    return ups, lows


def implication(up, a, b):
    cdef uint64_t rows[MAXN]
    cdef uint64_t bad = (<uint64_t>a) & ~(<uint64_t>b), out = 0
    cdef Py_ssize_t x, n = len(up)
    load(up, rows)
    for x in range(n):
        if not (rows[x] & bad):
            out |= (<uint64_t>1) << x
    return out


def coimplication(down, a, b):
    cdef uint64_t rows[MAXN]
    cdef uint64_t good = (<uint64_t>b) & ~(<uint64_t>a), out = 0
    cdef Py_ssize_t x, n = len(down)
    load(down, rows)
    for x in range(n):
        if rows[x] & good:
            out |= (<uint64_t>1) << x
    return out


def adjunction_witness(up, f, g):
    cdef uint64_t rows[MAXN]
    cdef int fm[MAXN]
    cdef int gm[MAXN]
    cdef Py_ssize_t p, q, n = len(up)
    cdef int left, right
    load(up, rows)
    for p in range(n):
        fm[p] = f[p]
        gm[p] = g[p]
    for p in range(n):
        for q in range(n):
            left = (rows[fm[p]] >> q) & 1
            right = (rows[p] >> gm[q]) & 1
            if left != right:
                return p, q, ("⇒" if right else "⇐")
    return None


def distributivity_witness(join, meet):
    cdef Py_ssize_t n = len(join)
    cdef int* jt
    cdef int* mt
    cdef Py_ssize_t x, y, z
    if n == 0:
        return None
    jt = <int*>malloc(n * n * sizeof(int))
    mt = <int*>malloc(n * n * sizeof(int))
    try:
        for x in range(n):
            for y in range(n):
                jt[x * n + y] = join[x][y]
                mt[x * n + y] = meet[x][y]
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if mt[x * n + jt[y * n + z]] != jt[mt[x * n + y] * n + mt[x * n + z]]:
                        return x, y, z
        return None
    finally:
        free(jt)
        free(mt)


def cr_witness(up, down, rel):
    cdef uint64_t urows[MAXN]
    cdef uint64_t drows[MAXN]
    cdef uint64_t rrows[MAXN]
    cdef uint64_t reach[MAXN]
    cdef uint64_t acc, m, comp, missing, hits
    cdef Py_ssize_t x, x2, n = len(up)
    cdef int y2
    load(up, urows)
    load(down, drows)
    load(rel, rrows)
    for x in range(n):
        acc = 0
        m = rrows[x]
        while m:
            acc |= drows[low_index(m)]
            m &= m - 1
        reach[x] = acc
    for x2 in range(n):
        comp = 0
        m = drows[x2]
        while m:
            comp |= reach[low_index(m)]
            m &= m - 1
        missing = comp & ~rrows[x2]
        if missing:
            y2 = low_index(missing)
            for x in range(n):
                if not ((drows[x2] >> x) & 1):
                    continue
                hits = rrows[x] & urows[y2]
                if hits:
                    return x, x2, low_index(hits), y2
    return None
