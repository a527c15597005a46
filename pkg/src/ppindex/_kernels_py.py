"""Pure numpy reference versions of the hot kernels.

Used when the compiled ``_kernels`` extension is unavailable, or when
``PPINDEX_PURE_PYTHON=1`` is set. Signatures and results match the Cython
module up to floating-point round-off.
"""

import numpy as np


def projection_residual(P):
    P = np.ascontiguousarray(P, dtype=np.complex128)
    herm = np.abs(P - P.conj().T).max(initial=0.0)
    idem = np.abs(P @ P - P).max(initial=0.0)
    return float(max(herm, idem))


def isometry_residual(U):
    U = np.ascontiguousarray(U, dtype=np.complex128)
    G = U.conj().T @ U
    return float(np.abs(G - np.eye(G.shape[0])).max(initial=0.0))


def power_gram_residuals(A, L):
    """Projection residual of (A^l)^* A^l for l = 1 .. L."""
    A = np.ascontiguousarray(A, dtype=np.complex128)
    out = np.empty(L, dtype=np.float64)
    P = np.eye(A.shape[0], dtype=np.complex128)
    for l in range(L):
        P = P @ A
        out[l] = projection_residual(P.conj().T @ P)
    return out
