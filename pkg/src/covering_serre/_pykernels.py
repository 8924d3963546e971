"""Pure-Python coefficient kernels (arbitrary precision).

Same contracts as the compiled ``_kernels`` module: dense coefficient tuples
``(c0, c1)`` for ``sum (c0[k] + c1[k]*pi) q^(lo+k)``.
"""


def conv(a0, a1, b0, b1):
    na, nb = len(a0), len(b0)
    if not na or not nb:
        return [], []
    n = na + nb - 1
    r0 = [0] * n
    r1 = [0] * n
    for i in range(na):
        x0 = a0[i]
        x1 = a1[i]
        if x0:
            for j in range(nb):
                r0[i + j] += x0 * b0[j]
                r1[i + j] += x0 * b1[j]
        if x1:
            for j in range(nb):
                r0[i + j] += x1 * b1[j]
                r1[i + j] += x1 * b0[j]
    return r0, r1


def div_unit(n0, n1, d0, d1, u0, u1):
    nn, nd = len(n0), len(d0)
    if not nd:
        raise ZeroDivisionError("division by zero")
    if nn < nd:
        if any(n0) or any(n1):
            return None
        return [], []
    nq = nn - nd + 1
    r0 = list(n0)
    r1 = list(n1)
    q0 = [0] * nq
    q1 = [0] * nq
    for k in range(nq - 1, -1, -1):
        i = k + nd - 1
        t0 = r0[i] * u0 + r1[i] * u1
        t1 = r0[i] * u1 + r1[i] * u0
        q0[k] = t0
        q1[k] = t1
        if not (t0 or t1):
            continue
        for j in range(nd):
            r0[k + j] -= t0 * d0[j] + t1 * d1[j]
            r1[k + j] -= t0 * d1[j] + t1 * d0[j]
    if any(r0[: nd - 1]) or any(r1[: nd - 1]):
        return None
    return q0, q1
