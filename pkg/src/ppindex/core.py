"""Dense complex matrix primitives and the tolerance policy.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``;
:func:`as_matrix` is the single entry point that validates and converts
user input. Every discrete decision in the package (rank, projection and
isometry predicates) goes through a :class:`ToleranceConfig`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import _backend
from .errors import InputError

DEFAULT_RANK_TOL = 1e-9
DEFAULT_PROJ_TOL = 1e-8


@dataclass(frozen=True)
class ToleranceConfig:
    """Numeric policy for discrete decisions.

    rank_tol
        A singular value ``s`` counts as zero when
        ``s <= rank_tol * max(1, s_max)``.
    proj_tol
        Largest entrywise deviation accepted by the projection, isometry and
        unitarity predicates.
    """

    rank_tol: float = DEFAULT_RANK_TOL
    proj_tol: float = DEFAULT_PROJ_TOL

    def __post_init__(self):
        for name in ("rank_tol", "proj_tol"):
            value = getattr(self, name)
            if not np.isfinite(value) or value < 0:
                raise InputError(f"{name} must be a finite nonnegative number, got {value!r}")


DEFAULT_CONFIG = ToleranceConfig()


def as_matrix(A, *, square=False, name="matrix") -> np.ndarray:
    """Validate ``A`` and return it as a 2-D complex128 array."""
    try:
        M = np.asarray(A, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{name} is not a numeric array: {exc}") from None
    if M.ndim != 2:
        raise InputError(f"{name} must be 2-dimensional, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise InputError(f"{name} has non-finite entries")
    if square and M.shape[0] != M.shape[1]:
        raise InputError(f"{name} must be square, got shape {M.shape}")
    return M


def _cfg(cfg):
    return DEFAULT_CONFIG if cfg is None else cfg


def singular_values(A) -> np.ndarray:
    A = as_matrix(A)
    if A.size == 0:
        return np.zeros(0)
    return np.linalg.svd(A, compute_uv=False)


def rank_threshold(s, cfg=None) -> float:
    cfg = _cfg(cfg)
    smax = float(s[0]) if len(s) else 0.0
    return cfg.rank_tol * max(1.0, smax)


def rank(A, cfg=None) -> int:
    """Number of singular values above ``rank_tol * max(1, s_max)``."""
    s = singular_values(A)
    return int(np.count_nonzero(s > rank_threshold(s, cfg)))


def nullity(A, cfg=None) -> int:
    A = as_matrix(A)
    return A.shape[1] - rank(A, cfg)


def null_space(A, cfg=None) -> np.ndarray:
    """Orthonormal basis (columns) of the numerical kernel of ``A``."""
    A = as_matrix(A)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.complex128)
    _, s, vh = np.linalg.svd(A)
    r = int(np.count_nonzero(s > rank_threshold(s, cfg)))
    return vh[r:].conj().T


def projection_residual(P) -> float:
    """``max(|P - P*|_max, |P^2 - P|_max)``."""
    P = as_matrix(P, square=True, name="P")
    if P.size == 0:
        return 0.0
    return float(_backend.projection_residual(P))


def is_projection(P, cfg=None) -> bool:
    return projection_residual(P) <= _cfg(cfg).proj_tol


def unitary_residual(U) -> float:
    U = as_matrix(U, square=True, name="U")
    if U.size == 0:
        return 0.0
    return float(_backend.isometry_residual(U))


def is_unitary(U, cfg=None) -> bool:
    return unitary_residual(U) <= _cfg(cfg).proj_tol


def isometry_residual(V) -> float:
    """``|V*V - I|_max`` for a possibly rectangular ``V``."""
    V = as_matrix(V, name="V")
    if V.shape[1] == 0:
        return 0.0
    return float(_backend.isometry_residual(V))


def adjoint(A) -> np.ndarray:
    return as_matrix(A).conj().T


def multiply(*mats) -> np.ndarray:
    mats = [as_matrix(M) for M in mats]
    if not mats:
        raise InputError("multiply needs at least one matrix")
    for left, right in zip(mats, mats[1:]):
        if left.shape[1] != right.shape[0]:
            raise InputError(f"cannot multiply shapes {left.shape} and {right.shape}")
    return reduce(np.matmul, mats)


def power(A, exponent: int) -> np.ndarray:
    """``A**exponent`` by repeated multiplication; ``power(A, 0)`` is the identity."""
    A = as_matrix(A, square=True)
    if int(exponent) != exponent or exponent < 0:
        raise InputError(f"exponent must be a nonnegative integer, got {exponent!r}")
    P = np.eye(A.shape[0], dtype=np.complex128)
    for _ in range(int(exponent)):
        P = P @ A
    return P


def powers(A, upto: int) -> list[np.ndarray]:
    """``[A^0, A^1, ..., A^upto]`` sharing one multiplication chain."""
    A = as_matrix(A, square=True)
    out = [np.eye(A.shape[0], dtype=np.complex128)]
    for _ in range(upto):
        out.append(out[-1] @ A)
    return out


def direct_sum(*blocks) -> np.ndarray:
    """Block-diagonal matrix with the given blocks in order."""
    blocks = [as_matrix(b) for b in blocks]
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = np.zeros((rows, cols), dtype=np.complex128)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def max_abs(A) -> float:
    A = np.asarray(A)
    return float(np.abs(A).max(initial=0.0))
