# cython: language_level=3
"""Compiled coefficient kernels over int64 with overflow detection.

Every function mirrors the one in ``_pykernels`` and raises ``OverflowError``
when an intermediate leaves the int64 range; callers then retry on the
arbitrary-precision path.
"""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

cdef extern from *:
    """
    static inline int cs_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int cs_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int cs_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int cs_mul_ovf(long long a, long long b, long long *r)
    int cs_add_ovf(long long a, long long b, long long *r)
    int cs_sub_ovf(long long a, long long b, long long *r)


cdef long long* _load(tuple src, Py_ssize_t n) except NULL:
    cdef long long* buf = <long long*> malloc((n if n > 0 else 1) * sizeof(long long))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            buf[i] = src[i]
    except OverflowError:
        free(buf)
        raise
    return buf


def conv(tuple a0, tuple a1, tuple b0, tuple b1):
    """Dense product of two (c0 + c1*pi) coefficient arrays."""
    cdef Py_ssize_t na = len(a0), nb = len(b0), n, i, j
    if na == 0 or nb == 0:
        return [], []
    n = na + nb - 1
    cdef long long *x0 = NULL
    cdef long long *x1 = NULL
    cdef long long *y0 = NULL
    cdef long long *y1 = NULL
    cdef long long *r0 = NULL
    cdef long long *r1 = NULL
    cdef long long p, s, ai0, ai1
    cdef bint bad = False
    try:
        x0 = _load(a0, na)
        x1 = _load(a1, na)
        y0 = _load(b0, nb)
        y1 = _load(b1, nb)
        r0 = <long long*> malloc(n * sizeof(long long))
        r1 = <long long*> malloc(n * sizeof(long long))
        if r0 == NULL or r1 == NULL:
            raise MemoryError()
        for i in range(n):
            r0[i] = 0
            r1[i] = 0
        for i in range(na):
            ai0 = x0[i]
            ai1 = x1[i]
            if ai0 == 0 and ai1 == 0:
                continue
            for j in range(nb):
                # (ai0 + ai1 pi)(bj0 + bj1 pi) with pi^2 = 1
                if ai0 != 0:
                    bad |= cs_mul_ovf(ai0, y0[j], &p)
                    bad |= cs_add_ovf(r0[i + j], p, &r0[i + j])
                    bad |= cs_mul_ovf(ai0, y1[j], &p)
                    bad |= cs_add_ovf(r1[i + j], p, &r1[i + j])
                if ai1 != 0:
                    bad |= cs_mul_ovf(ai1, y1[j], &p)
                    bad |= cs_add_ovf(r0[i + j], p, &r0[i + j])
                    bad |= cs_mul_ovf(ai1, y0[j], &p)
                    bad |= cs_add_ovf(r1[i + j], p, &r1[i + j])
            if bad:
                raise OverflowError("int64 overflow in conv")
        return [r0[i] for i in range(n)], [r1[i] for i in range(n)]
    finally:
        free(x0); free(x1); free(y0); free(y1); free(r0); free(r1)


def div_unit(tuple n0, tuple n1, tuple d0, tuple d1, long long u0, long long u1):
    """Exact division by a divisor whose top coefficient is a unit.

    ``(u0, u1)`` is the inverse of the divisor's top coefficient.  Returns the
    dense quotient arrays, or ``None`` when a nonzero remainder is left.
    """
    cdef Py_ssize_t nn = len(n0), nd = len(d0), nq, i, j, k
    if nd == 0:
        raise ZeroDivisionError("division by zero")
    if nn < nd:
        if any(n0) or any(n1):
            return None
        return [], []
    nq = nn - nd + 1
    cdef long long *r0 = NULL
    cdef long long *r1 = NULL
    cdef long long *e0 = NULL
    cdef long long *e1 = NULL
    cdef long long *q0 = NULL
    cdef long long *q1 = NULL
    cdef long long t0, t1, p, s
    cdef bint bad = False
    try:
        r0 = _load(n0, nn)
        r1 = _load(n1, nn)
        e0 = _load(d0, nd)
        e1 = _load(d1, nd)
        q0 = <long long*> malloc(nq * sizeof(long long))
        q1 = <long long*> malloc(nq * sizeof(long long))
        if q0 == NULL or q1 == NULL:
            raise MemoryError()
        for k in range(nq - 1, -1, -1):
            i = k + nd - 1
            # t = r[i] * u
            bad |= cs_mul_ovf(r0[i], u0, &t0)
            bad |= cs_mul_ovf(r1[i], u1, &p)
            bad |= cs_add_ovf(t0, p, &t0)
            bad |= cs_mul_ovf(r0[i], u1, &t1)
            bad |= cs_mul_ovf(r1[i], u0, &p)
            bad |= cs_add_ovf(t1, p, &t1)
            if bad:
                raise OverflowError("int64 overflow in div_unit")
            q0[k] = t0
            q1[k] = t1
            if t0 == 0 and t1 == 0:
                continue
            for j in range(nd):
                bad |= cs_mul_ovf(t0, e0[j], &p)
                bad |= cs_sub_ovf(r0[k + j], p, &r0[k + j])
                bad |= cs_mul_ovf(t1, e1[j], &p)
                bad |= cs_sub_ovf(r0[k + j], p, &r0[k + j])
                bad |= cs_mul_ovf(t0, e1[j], &p)
                bad |= cs_sub_ovf(r1[k + j], p, &r1[k + j])
                bad |= cs_mul_ovf(t1, e0[j], &p)
                bad |= cs_sub_ovf(r1[k + j], p, &r1[k + j])
            if bad:
                raise OverflowError("int64 overflow in div_unit")
        for i in range(nd - 1):
            if r0[i] != 0 or r1[i] != 0:
                return None
        return [q0[k] for k in range(nq)], [q1[k] for k in range(nq)]
    finally:
        free(r0); free(r1); free(e0); free(e1); free(q0); free(q1)
