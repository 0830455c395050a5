# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 versions of the kernels in ``_pykernels``.

Same algorithms, same pivot choices, so results are identical.  Any
intermediate that leaves the int64 range raises OverflowError and the caller
falls back to the arbitrary-precision path.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    #include <limits.h>
    /* headroom so negation and abs never overflow */
    #define NSP_LIMIT (1LL << 62)
    static inline int nsp_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int nsp_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int nsp_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline long long nsp_floordiv(long long a, long long b) {
        long long q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
        return q;
    }
    """
    bint nsp_mul(long long a, long long b, long long *r) nogil
    bint nsp_add(long long a, long long b, long long *r) nogil
    bint nsp_sub(long long a, long long b, long long *r) nogil
    long long nsp_floordiv(long long a, long long b) nogil
    long long LIMIT "NSP_LIMIT"


cdef long long *_load(rows, Py_ssize_t m, Py_ssize_t n) except NULL:
    cdef long long *a = <long long *> malloc(max(m * n, 1) * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    try:
        for i in range(m):
            r = rows[i]
            for j in range(n):
                v = r[j]
                if v >= LIMIT or v <= -LIMIT:
                    raise OverflowError("entry outside int64 fast path")
                a[i * n + j] = v
    except BaseException:
        free(a)
        raise
    return a


cdef inline int _muladd(long long p, long long x, long long q, long long y,
                        long long *out) nogil:
    # out = p*x - q*y
    cdef long long s, t
    if nsp_mul(p, x, &s) or nsp_mul(q, y, &t) or nsp_sub(s, t, out):
        return 1
    if out[0] >= LIMIT or out[0] <= -LIMIT:
        return 1
    return 0


def det(rows):
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef long long *a = _load(rows, n, n)
    cdef Py_ssize_t i, j, k, c
    cdef long long p, prev = 1, aik, tmp, sign = 1
    cdef bint ovf = 0
    cdef bint zero = 0
    try:
        with nogil:
            for k in range(n - 1):
                if a[k * n + k] == 0:
                    zero = 1
                    for i in range(k + 1, n):
                        if a[i * n + k] != 0:
                            for c in range(n):
                                tmp = a[k * n + c]
                                a[k * n + c] = a[i * n + c]
                                a[i * n + c] = tmp
                            sign = -sign
                            zero = 0
                            break
                    if zero:
                        break
                p = a[k * n + k]
                for i in range(k + 1, n):
                    aik = a[i * n + k]
                    for j in range(k + 1, n):
                        if _muladd(p, a[i * n + j], aik, a[k * n + j], &tmp):
                            ovf = 1
                            break
                        a[i * n + j] = tmp / prev
                    if ovf:
                        break
                    a[i * n + k] = 0
                if ovf:
                    break
                prev = p
        if ovf:
            raise OverflowError("int64 overflow in det")
        if zero:
            return 0
        return sign * a[n * n - 1]
    finally:
        free(a)


def pfaffian(rows):
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef long long *a = _load(rows, n, n)
    cdef Py_ssize_t *idx = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t t, s, piv, r0, r1, ii, jj, i, j, tmpi
    cdef long long p, prev = 1, b0i, b1i, x, y, v, sign = 1
    cdef bint ovf = 0
    if idx == NULL:
        free(a)
        raise MemoryError()
    try:
        for t in range(n):
            idx[t] = t
        with nogil:
            t = 0
            while t < n:
                r0 = idx[t]
                piv = -1
                for s in range(t + 1, n):
                    if a[r0 * n + idx[s]] != 0:
                        piv = s
                        break
                if piv < 0:
                    sign = 0
                    break
                if piv != t + 1:
                    tmpi = idx[t + 1]
                    idx[t + 1] = idx[piv]
                    idx[piv] = tmpi
                    sign = -sign
                r1 = idx[t + 1]
                p = a[r0 * n + r1]
                if t + 2 == n:
                    sign = sign * p
                    break
                for ii in range(t + 2, n):
                    i = idx[ii]
                    b0i = a[r0 * n + i]
                    b1i = a[r1 * n + i]
                    for jj in range(ii + 1, n):
                        j = idx[jj]
                        # p*a_ij + b1i*a0j - b0i*a1j
                        if nsp_mul(p, a[i * n + j], &x) or nsp_mul(b1i, a[r0 * n + j], &y) \
                                or nsp_add(x, y, &v) or nsp_mul(b0i, a[r1 * n + j], &y) \
                                or nsp_sub(v, y, &x):
                            ovf = 1
                            break
                        if x >= LIMIT or x <= -LIMIT:
                            ovf = 1
                            break
                        v = x / prev
                        a[i * n + j] = v
                        a[j * n + i] = -v
                    if ovf:
                        break
                if ovf:
                    break
                prev = p
                t += 2
        if ovf:
            raise OverflowError("int64 overflow in pfaffian")
        return sign
    finally:
        free(a)
        free(idx)


def smith_diagonal(rows, Py_ssize_t ncols):
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t n = ncols
    cdef Py_ssize_t r = min(m, n)
    cdef long long *a = _load(rows, m, n)
    cdef Py_ssize_t t, i, j, pi, pj, bad
    cdef long long best, av, v, p, q, tmp, prod
    cdef bint clean, ovf = 0, empty
    diag = []
    try:
        for t in range(r):
            empty = 0
            with nogil:
                while True:
                    best = 0
                    pi = -1
                    pj = -1
                    for j in range(t, n):
                        for i in range(t, m):
                            v = a[i * n + j]
                            if v != 0:
                                av = v if v > 0 else -v
                                if best == 0 or av < best:
                                    best = av
                                    pi = i
                                    pj = j
                                    if av == 1:
                                        break
                        if best == 1:
                            break
                    if pi < 0:
                        empty = 1
                        break
                    if pi != t:
                        for j in range(n):
                            tmp = a[t * n + j]
                            a[t * n + j] = a[pi * n + j]
                            a[pi * n + j] = tmp
                    if pj != t:
                        for i in range(m):
                            tmp = a[i * n + t]
                            a[i * n + t] = a[i * n + pj]
                            a[i * n + pj] = tmp
                    p = a[t * n + t]
                    clean = 1
                    for i in range(t + 1, m):
                        if a[i * n + t] != 0:
                            q = nsp_floordiv(a[i * n + t], p)
                            if q != 0:
                                for j in range(t, n):
                                    if nsp_mul(q, a[t * n + j], &prod) or \
                                            nsp_sub(a[i * n + j], prod, &tmp) or \
                                            tmp >= LIMIT or tmp <= -LIMIT:
                                        ovf = 1
                                        break
                                    a[i * n + j] = tmp
                                if ovf:
                                    break
                            if a[i * n + t] != 0:
                                clean = 0
                    if ovf:
                        break
                    for j in range(t + 1, n):
                        if a[t * n + j] != 0:
                            q = nsp_floordiv(a[t * n + j], p)
                            if q != 0:
                                for i in range(t, m):
                                    if nsp_mul(q, a[i * n + t], &prod) or \
                                            nsp_sub(a[i * n + j], prod, &tmp) or \
                                            tmp >= LIMIT or tmp <= -LIMIT:
                                        ovf = 1
                                        break
                                    a[i * n + j] = tmp
                                if ovf:
                                    break
                            if a[t * n + j] != 0:
                                clean = 0
                    if ovf:
                        break
                    if not clean:
                        continue
                    bad = -1
                    for i in range(t + 1, m):
                        for j in range(t + 1, n):
                            if a[i * n + j] % p != 0:
                                bad = i
                                break
                        if bad >= 0:
                            break
                    if bad < 0:
                        break
                    for j in range(t, n):
                        if nsp_add(a[t * n + j], a[bad * n + j], &tmp) or \
                                tmp >= LIMIT or tmp <= -LIMIT:
                            ovf = 1
                            break
                        a[t * n + j] = tmp
                    if ovf:
                        break
            if ovf:
                raise OverflowError("int64 overflow in smith_diagonal")
            if empty:
                diag.extend([0] * (r - t))
                return diag
            v = a[t * n + t]
            diag.append(v if v > 0 else -v)
        return diag
    finally:
        free(a)
