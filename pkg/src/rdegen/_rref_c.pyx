# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""int64 fraction-free RREF with overflow detection.

Same contract as ``_rref_py.rref_int``. Any intermediate product or
difference that leaves the int64 range raises OverflowError; the caller then
reruns the exact big-integer path.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

cdef extern from *:
    bint mul_ovf "__builtin_mul_overflow"(long long a, long long b, long long *r) nogil
    bint sub_ovf "__builtin_sub_overflow"(long long a, long long b, long long *r) nogil


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline void _primitive(long long *row, Py_ssize_t ncols) nogil:
    cdef long long g = 0
    cdef long long lead = 0
    cdef Py_ssize_t j
    for j in range(ncols):
        if row[j]:
            if lead == 0:
                lead = row[j]
            g = _gcd(g, row[j])
            if g == 1 and lead > 0:
                return
    if g == 0:
        return
    if lead < 0:
        g = -g
    if g == 1:
        return
    for j in range(ncols):
        row[j] = row[j] // g


cdef inline bint _is_zero(long long *row, Py_ssize_t ncols) nogil:
    cdef Py_ssize_t j
    for j in range(ncols):
        if row[j]:
            return False
    return True


def rref_int(rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, j, r, col, top, sel, live
    cdef long long pv, a, t1, t2, t
    cdef long long *buf
    cdef long long *tmp
    cdef long long *prow
    cdef long long *row
    cdef bint ovf = False

    if nrows == 0 or ncols == 0:
        return [], []
    buf = <long long *> malloc(nrows * ncols * sizeof(long long))
    tmp = <long long *> malloc(ncols * sizeof(long long))
    if buf == NULL or tmp == NULL:
        free(buf)
        free(tmp)
        raise MemoryError()
    try:
        live = 0
        for i in range(nrows):
            py_row = rows[i]
            row = buf + live * ncols
            for j in range(ncols):
                row[j] = py_row[j]  # raises OverflowError for out-of-range input
            if not _is_zero(row, ncols):
                live += 1
        pivots = []
        top = 0
        with nogil:
            for col in range(ncols):
                if top == live:
                    break
                sel = -1
                for r in range(top, live):
                    if buf[r * ncols + col]:
                        sel = r
                        break
                if sel < 0:
                    continue
                if sel != top:
                    memcpy(tmp, buf + top * ncols, ncols * sizeof(long long))
                    memcpy(buf + top * ncols, buf + sel * ncols, ncols * sizeof(long long))
                    memcpy(buf + sel * ncols, tmp, ncols * sizeof(long long))
                prow = buf + top * ncols
                _primitive(prow, ncols)
                pv = prow[col]
                for r in range(live):
                    if r == top:
                        continue
                    row = buf + r * ncols
                    a = row[col]
                    if a == 0:
                        continue
                    for j in range(ncols):
                        if mul_ovf(pv, row[j], &t1) or mul_ovf(a, prow[j], &t2) or sub_ovf(t1, t2, &t):
                            ovf = True
                            break
                        row[j] = t
                    if ovf:
                        break
                    _primitive(row, ncols)
                if ovf:
                    break
                with gil:
                    pivots.append(col)
                top += 1
                # compact: drop rows below the pivot block that became zero
                r = top
                while r < live:
                    if _is_zero(buf + r * ncols, ncols):
                        live -= 1
                        if r != live:
                            memcpy(buf + r * ncols, buf + live * ncols, ncols * sizeof(long long))
                    else:
                        r += 1
        if ovf:
            raise OverflowError("int64 overflow in fraction-free elimination")
        out = [[buf[r * ncols + j] for j in range(ncols)] for r in range(top)]
        return out, pivots
    finally:
        free(buf)
        free(tmp)
