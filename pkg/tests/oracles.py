"""Exact-arithmetic oracles (sympy), independent of the floating-point path."""

import sympy as sp

HALF = sp.Rational(1, 2)
RT2 = 1 / sp.sqrt(2)


def jordan(q):
    return sp.Matrix(q, q, lambda i, j: 1 if j == i + 1 else 0)


def direct_sum(*blocks):
    return sp.diag(*blocks)


def exact_rank(M):
    return sp.Matrix(M).rank(simplify=True)


def exact_is_partial_isometry(M):
    G = (M.H * M).applyfunc(sp.nsimplify)
    return sp.simplify(G * G - G) == sp.zeros(*G.shape)


def exact_ascent(M):
    n = M.shape[0]
    P = sp.eye(n)
    prev = 0
    for k in range(n + 1):
        P = (P * M).applyfunc(sp.simplify)
        nul = n - exact_rank(P)
        if nul == prev:
            return k
        prev = nul
    return n


def exact_index(M):
    """p(M) with the ascent + 1 cutoff, all in exact arithmetic."""
    a = exact_ascent(M)
    P = sp.eye(M.shape[0])
    for ell in range(1, a + 2):
        P = (P * M).applyfunc(sp.simplify)
        if not exact_is_partial_isometry(P):
            return ell - 1
    return sp.oo


def c_i_blocks():
    return sp.Matrix([[1, 0], [0, RT2]]), sp.Matrix([[0, RT2], [0, 0]])


def c_ii_blocks(m):
    """Transcribed independently from the displayed 2 x m and m x m matrices."""
    B = sp.zeros(2, m)
    B[0, 0] = 1
    B[1, 1] = RT2
    B[1, m - 1] = HALF
    C = sp.zeros(m, m)
    C[0, 1] = -RT2
    C[0, m - 1] = HALF
    for r in range(1, m - 1):
        C[r, r + 1] = 1
    C[m - 2, m - 1] = RT2
    return B, C


def chain(j, B, C):
    """Exact block chain with j identity-linked layers of size B.rows."""
    if j == 0:
        return C
    s = B.shape[0]
    m = C.shape[0]
    n = s * j + m
    A = sp.zeros(n, n)
    for ell in range(j - 1):
        A[ell * s : (ell + 1) * s, (ell + 1) * s : (ell + 2) * s] = sp.eye(s)
    A[(j - 1) * s : j * s, j * s :] = B
    A[j * s :, j * s :] = C
    return A


def sn(eigs):
    n = len(eigs)
    A = sp.zeros(n, n)
    d = [sp.sqrt(1 - abs(l) ** 2) for l in eigs]
    for i in range(n):
        A[i, i] = eigs[i]
        for j in range(i + 1, n):
            prod = 1
            for t in range(i + 1, j):
                prod *= -sp.conjugate(eigs[t])
            A[i, j] = d[i] * prod * d[j]
    return A


def witness(j, k, n):
    """Exact counterpart of each synthesized witness, built from the case rules."""
    if j == k:
        if j == 0:
            return HALF * sp.eye(n)
        return sn([0] * k + [HALF] * (n - k))
    if j <= k - 1 and j + k <= n - 1:
        if j == 0 and k == n - 1:
            return direct_sum(sp.Matrix([[HALF]]), jordan(k))
        if k == n - 1 - j:
            return direct_sum(sn([0] * j + [HALF]), jordan(k))
        return direct_sum(sn([0] * j + [HALF]), sn([0] * k + [HALF] * (n - j - 1 - k)))
    if j == k - 2:
        return chain(j, *c_i_blocks())
    return chain(j, *c_ii_blocks(k - j))
