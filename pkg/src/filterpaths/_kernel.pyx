# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled transfer-step kernel.

Same contract as ``_kernel_py.advance_row``.  Row cells remain Python
ints, so results are exact; the speedup comes from running the scatter
loop and the weight dispatch at C level.
"""

BACKEND = "compiled"


def advance_row(list row, const unsigned char[:] wr, const unsigned char[:] wl):
    cdef Py_ssize_t n = len(row)
    cdef list out = [0] * n
    cdef Py_ssize_t i
    cdef unsigned char w
    cdef object v
    for i in range(n):
        v = row[i]
        if not v:
            continue
        if i + 1 < n:
            w = wr[i]
            if w == 1:
                out[i + 1] = out[i + 1] + v
            elif w == 2:
                out[i + 1] = out[i + 1] + v + v
        if i > 0:
            w = wl[i]
            if w == 1:
                out[i - 1] = out[i - 1] + v
            elif w == 2:
                out[i - 1] = out[i - 1] + v + v
    return out
