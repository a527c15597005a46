"""Random matrix generators for property tests and benchmarks.

Spectra are kept away from zero unless a zero is intended, so that powers
up to ``n + 1`` stay well above the default rank threshold.
"""

from __future__ import annotations

import numpy as np

from .core import direct_sum
from .synthesis import block_chain_matrix, jordan_block, sn_matrix


def crandn(shape, rng):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def random_unitary(n, rng) -> np.ndarray:
    """Haar-distributed unitary via QR with phase correction."""
    q, r = np.linalg.qr(crandn((n, n), rng))
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_isometry(rows, cols, rng) -> np.ndarray:
    """``rows x cols`` matrix with orthonormal columns (rows >= cols)."""
    return random_unitary(rows, rng)[:, :cols]


def random_contraction(n, rng, zeros=0, smin=0.3) -> np.ndarray:
    """``U diag(s) V*`` with ``zeros`` vanishing singular values, the rest in [smin, 1]."""
    s = np.concatenate([rng.uniform(smin, 1.0, n - zeros), np.zeros(zeros)])
    return random_unitary(n, rng) @ np.diag(s) @ random_unitary(n, rng).conj().T


def random_partial_isometry(n, r, rng) -> np.ndarray:
    return random_isometry(n, r, rng) @ random_isometry(n, r, rng).conj().T


def random_pi_product(n, rng, factors=2) -> np.ndarray:
    A = np.eye(n, dtype=np.complex128)
    for _ in range(factors):
        A = A @ random_partial_isometry(n, int(rng.integers(1, n + 1)), rng)
    return A


def random_sn(n, rng, zeros=None) -> np.ndarray:
    """S_n matrix with ``zeros`` zero eigenvalues and the rest of modulus in [0.5, 0.9]."""
    if zeros is None:
        zeros = int(rng.integers(0, n + 1))
    mods = rng.uniform(0.5, 0.9, n - zeros)
    lam = list(np.zeros(zeros)) + list(mods * np.exp(2j * np.pi * rng.uniform(size=n - zeros)))
    return sn_matrix(rng.permutation(np.array(lam, dtype=np.complex128)))


def random_block_sum(n, rng) -> np.ndarray:
    """Direct sum of Jordan blocks, S_n blocks, unitaries and scalar contractions."""
    blocks = []
    left = n
    while left > 0:
        size = int(rng.integers(1, left + 1))
        kind = rng.integers(4)
        if kind == 0:
            blocks.append(jordan_block(size))
        elif kind == 1:
            blocks.append(random_sn(size, rng))
        elif kind == 2:
            blocks.append(random_unitary(size, rng))
        else:
            blocks.append(np.diag(rng.uniform(0.5, 0.9, size)).astype(np.complex128))
        left -= size
    return direct_sum(*blocks)


def random_tail(m, rng, nj_max, kind=None):
    """Random ``(B, C)`` with ``B*B + C*C = I_m`` and ``B`` having at most ``nj_max`` rows.

    ``C`` is drawn first (a unitary's block, an S_n matrix, a Jordan block or
    a partial isometry) and ``B`` is a square root of ``I - C*C`` padded with
    zero rows and rotated by a random unitary.
    """
    if m == 0:
        rows = int(rng.integers(1, nj_max + 1))
        return np.zeros((rows, 0), dtype=np.complex128), np.zeros((0, 0), dtype=np.complex128)
    if kind is None:
        kind = rng.integers(4)
    if kind == 0:
        # block rows of a random unitary
        rows = int(rng.integers(1, nj_max + 1))
        W = random_isometry(rows + m, m, rng)
        B, C = W[:rows], W[rows:]
        # keep C away from near-singular so its powers classify cleanly
        s = np.linalg.svd(C, compute_uv=False)
        if s.size and s[-1] < 0.2:
            return random_tail(m, rng, nj_max, kind)
        return B, C
    if kind == 1:
        C = random_sn(m, rng)
    elif kind == 2:
        C = jordan_block(m)
    else:
        r = int(rng.integers(0, m + 1))
        C = random_partial_isometry(m, r, rng) if r else np.zeros((m, m), dtype=np.complex128)
    D = np.eye(m) - C.conj().T @ C
    w, V = np.linalg.eigh(0.5 * (D + D.conj().T))
    keep = w > 1e-12
    defect = int(np.count_nonzero(keep))
    if defect > nj_max:
        return random_tail(m, rng, nj_max)
    B0 = (np.sqrt(w[keep])[:, None] * V[:, keep].conj().T).astype(np.complex128)
    rows = int(rng.integers(max(defect, 1), nj_max + 1))
    B = np.vstack([B0, np.zeros((rows - defect, m))])
    B = random_unitary(rows, rng) @ B
    return B, C


def random_chain_form(rng, j=None, m=None, max_layer=3, unitary_tail=False):
    """Random matrix of block chain shape.

    Layers ``n_1 >= ... >= n_j >= 1`` are joined by random isometries
    ``A_l`` (``A_l* A_l = I``), followed by ``B`` and ``C`` with
    ``B*B + C*C = I``. With ``unitary_tail`` the stacked ``[B; C]`` is
    always taken from the columns of a random unitary. Returns ``(A, C, j)``.
    """
    if j is None:
        j = int(rng.integers(1, 5))
    if m is None:
        m = int(rng.integers(1, 4))
    nj = int(rng.integers(1, max_layer + 1))
    B, C = random_tail(m, rng, nj, 0 if unitary_tail else None)
    sizes = [B.shape[0]]
    for _ in range(j - 1):
        sizes.insert(0, sizes[0] + int(rng.integers(0, 2)))
    layers = [random_isometry(sizes[i], sizes[i + 1], rng) for i in range(j - 1)]
    return block_chain_matrix(layers, B, C), C, j


def conjugate(A, U) -> np.ndarray:
    """``U* A U``."""
    return U.conj().T @ A @ U


def random_matrix(n, rng, separated=True) -> np.ndarray:
    """One draw from the mixed ensemble used by the completeness checks.

    With ``separated`` (the default) draws failing :func:`is_well_separated`
    are discarded and redrawn.
    """
    while True:
        A = _random_matrix(n, rng)
        if not separated or is_well_separated(A):
            return A


def _random_matrix(n, rng) -> np.ndarray:
    kind = rng.integers(5)
    if kind == 0:
        A = random_contraction(n, rng, zeros=int(rng.integers(0, n)))
    elif kind == 1:
        A = random_pi_product(n, rng, factors=int(rng.integers(1, 3)))
    elif kind == 2:
        A = random_block_sum(n, rng)
    elif kind == 3:
        A = random_partial_isometry(n, int(rng.integers(0, n + 1)), rng) if n > 0 else None
    else:
        A = None
        while A is None or A.shape[0] != n:
            j = int(rng.integers(1, n + 1))
            m = int(rng.integers(0, n - j + 1))
            cand, _, _ = random_chain_form(rng, j=j, m=m, max_layer=max(1, (n - m) // j))
            if cand.shape[0] <= n:
                pad = n - cand.shape[0]
                A = direct_sum(cand, random_block_sum(pad, rng)) if pad else cand
    if rng.random() < 0.5:
        A = conjugate(A, random_unitary(n, rng))
    return A


def is_well_separated(A, gap=1e-6, floor=1e-12) -> bool:
    """Whether every discrete decision on ``A`` has a wide margin.

    Every singular value of ``A^l`` (``l = 1 .. n + 1``, relative to
    ``max(1, s_max)``) is either below ``floor`` or above ``gap``, and every
    power's Gram projection residual is likewise below ``floor`` or above
    ``gap``. Matrices failing this sit in the band where the default
    tolerances could misclassify them.
    """
    A = np.asarray(A, dtype=np.complex128)
    n = A.shape[0]
    P = np.eye(n, dtype=np.complex128)
    for _ in range(n + 1):
        P = P @ A
        s = np.linalg.svd(P, compute_uv=False)
        rel = s / max(1.0, s[0])
        if np.any((rel > floor) & (rel < gap)):
            return False
        G = P.conj().T @ P
        res = max(np.abs(G - G.conj().T).max(), np.abs(G @ G - G).max())
        if floor < res < gap:
            return False
    return True
