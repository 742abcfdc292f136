# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled residue-ring kernels; same contracts as ``_pykernels``.

Arithmetic is in signed 64-bit words, so callers must keep d <= 2**31.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

ctypedef long long i64


cdef inline i64 _mod(i64 a, i64 d) nogil:
    a = a % d
    return a + d if a < 0 else a


cdef void _digits(i64 idx, int n, i64 d, i64* out) nogil:
    cdef int j
    for j in range(n):
        out[j] = idx % d
        idx = idx // d


cdef bint _rem_nonzero(const i64* g, int lg, const i64* h, int n, i64 d, i64* r) nogil:
    cdef int i, j, base
    cdef i64 c
    memcpy(r, g, lg * sizeof(i64))
    for i in range(lg - 1, n - 1, -1):
        c = r[i]
        if c:
            base = i - n
            for j in range(n):
                r[base + j] = _mod(r[base + j] - c * h[j], d)
            r[i] = 0
    for i in range(n if n < lg else lg):
        if r[i]:
            return True
    return False


cdef void _eval(const i64* g, int lg, const i64* a, int n, i64 d, i64* acc, i64* tmp) nogil:
    cdef int i, j, k, t
    cdef i64 s, c
    memset(acc, 0, n * n * sizeof(i64))
    for t in range(lg - 1, -1, -1):
        for i in range(n):
            for j in range(n):
                s = 0
                for k in range(n):
                    s = (s + acc[i * n + k] * a[k * n + j]) % d
                tmp[i * n + j] = s
        memcpy(acc, tmp, n * n * sizeof(i64))
        c = g[t]
        if c:
            for i in range(n):
                acc[i * n + i] = (acc[i * n + i] + c) % d


cdef i64* _as_buf(seq, Py_ssize_t size) except NULL:
    cdef i64* buf = <i64*> malloc((size if size > 0 else 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(size):
        buf[i] = seq[i]
    return buf


def rem_monic_mod(g, h_low, i64 d):
    cdef int lg = len(g), n = len(h_low)
    cdef i64* gb = _as_buf(g, lg)
    cdef i64* hb = _as_buf(h_low, n)
    cdef i64* r = <i64*> malloc((lg if lg > n else n) * sizeof(i64) + sizeof(i64))
    try:
        memset(r, 0, ((lg if lg > n else n) + 1) * sizeof(i64))
        _rem_nonzero(gb, lg, hb, n, d, r)
        return [r[i] if i < lg else 0 for i in range(n)]
    finally:
        free(gb); free(hb); free(r)


def scan_divisibility(g, int n, i64 d, i64 start, i64 stop, bint first_only):
    cdef int lg = len(g)
    cdef i64* gb = _as_buf(g, lg)
    cdef i64* h = <i64*> malloc(n * sizeof(i64))
    cdef i64* r = <i64*> malloc((lg + 1) * sizeof(i64))
    cdef i64 idx
    fails = []
    try:
        for idx in range(start, stop):
            _digits(idx, n, d, h)
            if _rem_nonzero(gb, lg, h, n, d, r):
                fails.append(idx)
                if first_only:
                    break
        return fails
    finally:
        free(gb); free(h); free(r)


def matrix_eval_mod(g, flat, int n, i64 d):
    cdef int lg = len(g)
    cdef i64* gb = _as_buf(g, lg)
    cdef i64* a = _as_buf(flat, n * n)
    cdef i64* acc = <i64*> malloc(n * n * sizeof(i64) + sizeof(i64))
    cdef i64* tmp = <i64*> malloc(n * n * sizeof(i64) + sizeof(i64))
    try:
        _eval(gb, lg, a, n, d, acc, tmp)
        return [acc[i] for i in range(n * n)]
    finally:
        free(gb); free(a); free(acc); free(tmp)


def scan_companion(g, int n, i64 d, i64 start, i64 stop, bint first_only):
    cdef int lg = len(g), i
    cdef i64* gb = _as_buf(g, lg)
    cdef i64* h = <i64*> malloc(n * sizeof(i64))
    cdef i64* a = <i64*> malloc(n * n * sizeof(i64))
    cdef i64* acc = <i64*> malloc(n * n * sizeof(i64))
    cdef i64* tmp = <i64*> malloc(n * n * sizeof(i64))
    cdef i64 idx
    cdef bint bad
    fails = []
    try:
        memset(a, 0, n * n * sizeof(i64))
        for i in range(1, n):
            a[i * n + i - 1] = 1
        for idx in range(start, stop):
            _digits(idx, n, d, h)
            for i in range(n):
                a[i * n + n - 1] = _mod(-h[i], d)
            _eval(gb, lg, a, n, d, acc, tmp)
            bad = False
            for i in range(n * n):
                if acc[i]:
                    bad = True
                    break
            if bad:
                fails.append(idx)
                if first_only:
                    break
        return fails
    finally:
        free(gb); free(h); free(a); free(acc); free(tmp)
