"""Hot loops, in C when the cffi extension zerosum._zskernel was built and
in numpy otherwise.  Both paths give identical results."""

import warnings

import numpy as np

from . import config

ffi = lib = None
if not config.kernel_disabled():
    try:
        from ._zskernel import ffi, lib
    except ImportError:
        pass


def available():
    return lib is not None


def _want_c(use_c, default):
    if use_c is None:
        return default
    if use_c and lib is None:
        warnings.warn("the C kernel zerosum._zskernel is not available; "
                      "using the numpy code instead")
        return False
    return use_c


def new_reach_table(spec, max_len):
    """table[t][g] is True iff g is a sum of exactly t picks; initially
    only the empty selection."""
    table = np.zeros((max_len + 1, spec.order), dtype=np.bool_)
    table[0, 0] = True
    return table

def extend_reach(spec, table, x, copies, use_c=None):
    """Extend 'table' in place by 'copies' copies of the element index x."""
    max_len = table.shape[0] - 1
    if copies <= 0 or max_len <= 0:
        return table
    use_c = _want_c(use_c, lib is not None and
                    spec.order <= config.TABLE_LIMIT)
    if use_c:
        add = spec.addition_table()
        scratch = np.empty_like(table)
        lib.zs_extend_reach(ffi.cast("int32_t *", add.ctypes.data),
                            spec.order, x, copies, max_len,
                            ffi.cast("uint8_t *", table.ctypes.data),
                            ffi.cast("uint8_t *", scratch.ctypes.data))
        return table
    shift = spec.translation(x)
    current = table.copy()
    for u in range(1, min(copies, max_len) + 1):
        moved = np.zeros_like(current)
        moved[:, shift] = current
        current = moved
        table[u:] |= current[:max_len + 1 - u]
    return table

def reach_table(spec, items, max_len, use_c=None):
    table = new_reach_table(spec, max_len)
    for x, copies in items:
        extend_reach(spec, table, x, copies, use_c)
    return table


def lexmin_image(inverse, mult, use_c=None):
    """Least image of the multiplicity vector 'mult' under the maps whose
    inverse permutations are the rows of 'inverse'.  Returns (image, count)
    where count is the number of maps giving that image."""
    nmaps, n = inverse.shape
    mult = np.ascontiguousarray(mult, dtype=np.uint8)
    use_c = _want_c(use_c, lib is not None)
    if use_c:
        best = np.zeros(n, dtype=np.uint8)
        count = lib.zs_lexmin_image(
            ffi.cast("uint16_t *", inverse.ctypes.data), nmaps, n,
            ffi.cast("uint8_t *", mult.ctypes.data),
            ffi.cast("uint8_t *", best.ctypes.data))
        return tuple(best.tolist()), count
    images = mult[inverse]
    rows = np.arange(nmaps)
    for column in range(n):
        values = images[rows, column]
        rows = rows[values == values.min()]
        if len(rows) == 1:
            break
    best = images[rows[0]]
    count = int(np.all(images[rows] == best, axis=1).sum())
    return tuple(best.tolist()), count
