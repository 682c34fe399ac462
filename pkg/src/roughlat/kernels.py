"""Kernel dispatch: the compiled extension when importable, else the pure-Python twin.

Set ``ROUGHLAT_PURE_PYTHON=1`` to force the fallback. Carriers wider than the
compiled word size always route to the fallback.
"""
import os

from roughlat import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("ROUGHLAT_PURE_PYTHON"):
    try:
        from roughlat import _speedups as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

BACKEND = "cython" if compiled_backend is not None else "python"
_WORD = 62
_BRUTE_FORCE_LIMIT = 24  # compiled enumeration filters all 2^n candidates


def _pick(n):
    if compiled_backend is not None and n <= _WORD:
        return compiled_backend
    return python_backend


def upsets(up, down):
    n = len(up)
    impl = _pick(n) if n <= _BRUTE_FORCE_LIMIT else python_backend
    return impl.upsets(up, down, n)


def is_up_closed(up, mask):
    return _pick(len(up)).is_up_closed(up, mask)


def up_closure(up, mask):
    return _pick(len(up)).up_closure(up, mask)


def upper(succ, mask):
    return _pick(len(succ)).upper(succ, mask)


def lower(pred, mask):
    return _pick(len(pred)).lower(pred, mask)


def approx_all(succ, pred, masks):
    return _pick(len(succ)).approx_all(succ, pred, masks)


def implication(up, a, b):
    return _pick(len(up)).implication(up, a, b)


def coimplication(down, a, b):
    return _pick(len(down)).coimplication(down, a, b)


def adjunction_witness(up, f, g):
    return _pick(len(up)).adjunction_witness(up, f, g)


def distributivity_witness(join, meet):
    # tables hold indices, not masks, so width is irrelevant
    impl = compiled_backend or python_backend
    return impl.distributivity_witness(join, meet)


def cr_witness(up, down, rel):
    return _pick(len(up)).cr_witness(up, down, rel)
