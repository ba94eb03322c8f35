# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled float kernels; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

cdef double _TINY = 1e-300


cdef double* _to_c(seq, Py_ssize_t n) except NULL:
    cdef double* buf = <double*> malloc(max(n, 1) * sizeof(double))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = float(seq[i])
    return buf


cdef Py_ssize_t _count(const double* diag, const double* offsq,
                       Py_ssize_t n, double x) nogil:
    cdef Py_ssize_t i, count = 0
    cdef double d = diag[0] - x
    if d == 0.0:
        d = _TINY
    if d < 0.0:
        count += 1
    for i in range(1, n):
        d = (diag[i] - x) - offsq[i - 1] / d
        if d == 0.0:
            d = _TINY
        if d < 0.0:
            count += 1
    return count


def sturm_count(diag, offsq, double x):
    cdef Py_ssize_t n = len(diag)
    cdef double* d = _to_c(diag, n)
    cdef double* o
    try:
        o = _to_c(offsq, n - 1)
        try:
            return _count(d, o, n, x)
        finally:
            free(o)
    finally:
        free(d)


def bisect_eigenvalues(diag, offsq, double lo, double hi, double width):
    cdef Py_ssize_t n = len(diag)
    cdef Py_ssize_t j
    cdef double a, b, mid
    cdef double* d = _to_c(diag, n)
    cdef double* o
    cdef double* res
    out = []
    try:
        o = _to_c(offsq, n - 1)
        res = <double*> malloc(n * sizeof(double))
        if res == NULL:
            free(o)
            raise MemoryError()
        with nogil:
            for j in range(n - 1, -1, -1):
                a = lo
                b = hi
                while b - a > width:
                    mid = 0.5 * (a + b)
                    if mid <= a or mid >= b:
                        break
                    if _count(d, o, n, mid) > j:
                        b = mid
                    else:
                        a = mid
                res[n - 1 - j] = 0.5 * (a + b)
        out = [res[j] for j in range(n)]
        free(res)
        free(o)
    finally:
        free(d)
    return out


def pcs_float(b_ext, a, c_ext, double theta):
    cdef Py_ssize_t D = len(a) - 1
    cdef Py_ssize_t i
    cdef double* bb = _to_c(b_ext, D + 1)
    cdef double* aa = _to_c(a, D + 1)
    cdef double* cc = _to_c(c_ext, D + 1)
    cdef double* s = <double*> malloc((D + 1) * sizeof(double))
    try:
        s[0] = 1.0
        s[1] = theta / bb[0]
        for i in range(1, D):
            s[i + 1] = ((theta - aa[i]) * s[i] - cc[i] * s[i - 1]) / bb[i]
        return [s[i] for i in range(D + 1)]
    finally:
        free(s)
        free(cc)
        free(aa)
        free(bb)
