"""Pure-Python hot kernels. ``_speedups.pyx`` mirrors this module function for function.

All relations arrive as row masks: ``up[x]`` is the set of elements above ``x``,
``succ[x]`` the R-successors of ``x`` and so on.
"""


def upsets(up, down, n):
    """All up-closed subsets of ``range(n)``, by include/exclude backtracking."""
    out = []
    stack = [(0, 0, 0)]  # (next element, forced in, forced out)
    while stack:
        i, inside, outside = stack.pop()
        while i < n and ((inside | outside) >> i) & 1:
            i += 1
        if i == n:
            out.append(inside)
            continue
        if not up[i] & outside:
            stack.append((i + 1, inside | up[i], outside))
        if not down[i] & inside:
            stack.append((i + 1, inside, outside | down[i]))
    return out


def is_up_closed(up, mask):
    m = mask
    while m:
        low = m & -m
        if up[low.bit_length() - 1] & ~mask:
            return False
        m ^= low
    return True


def up_closure(up, mask):
    out = 0
    while mask:
        low = mask & -mask
        out |= up[low.bit_length() - 1]
        mask ^= low
    return out


def upper(succ, mask):
    out = 0
    for x, row in enumerate(succ):
        if row & mask:
            out |= 1 << x
    return out


def lower(pred, mask):
    out = 0
    for x, row in enumerate(pred):
        if not row & ~mask:
            out |= 1 << x
    return out


def approx_all(succ, pred, masks):
    return [upper(succ, m) for m in masks], [lower(pred, m) for m in masks]


def implication(up, a, b):
    bad = a & ~b
    out = 0
    for x, row in enumerate(up):
        if not row & bad:
            out |= 1 << x
    return out


def coimplication(down, a, b):
    good = b & ~a
    out = 0
    for x, row in enumerate(down):
        if row & good:
            out |= 1 << x
    return out


def adjunction_witness(up, f, g):
    """First (p, q, direction) breaking ``f(p) <= q  <=>  p <= g(q)``, or None."""
    n = len(up)
    for p in range(n):
        fp_up = up[f[p]]
        row = up[p]
        for q in range(n):
            left = (fp_up >> q) & 1
            right = (row >> g[q]) & 1
            if left != right:
                return p, q, ("⇒" if right else "⇐")
    return None


def distributivity_witness(join, meet):
    n = len(join)
    for x in range(n):
        mx = meet[x]
        for y in range(n):
            jy = join[y]
            for z in range(n):
                if mx[jy[z]] != join[mx[y]][mx[z]]:
                    return x, y, z
    return None


def cr_witness(up, down, rel):
    """First (x, x2, y, y2) with x <= x2, x R y, y2 <= y and not x2 R y2, or None.

    Scans candidate pairs (x2, y2) of the composite >= . R . >= in carrier order.
    """
    n = len(up)
    reach = [0] * n  # reach[x] = union of down[y] for y in rel[x]
    for x in range(n):
        acc = 0
        m = rel[x]
        while m:
            low = m & -m
            acc |= down[low.bit_length() - 1]
            m ^= low
        reach[x] = acc
    for x2 in range(n):
        comp = 0
        m = down[x2]
        while m:
            low = m & -m
            comp |= reach[low.bit_length() - 1]
            m ^= low
        missing = comp & ~rel[x2]
        if missing:
            y2 = (missing & -missing).bit_length() - 1
            for x in range(n):
                if not (down[x2] >> x) & 1:
                    continue
                hits = rel[x] & up[y2]
                if hits:
                    y = (hits & -hits).bit_length() - 1
                    return x, x2, y, y2
    return None
