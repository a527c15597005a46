"""Which (p, a, n) are attainable, and explicit matrices attaining them.

An n-by-n matrix with ``p(A) = j`` and ``a(A) = k`` exists exactly when one of

    A:  j = k <= n - 1
    B:  j <= k - 1  and  j + k <= n - 1
    C:  j <= k - 2  and  j + k = n

holds. :func:`synthesize` builds a witness for each feasible triple from
S_n matrices (contractions with ``rank(I - A*A) = 1`` and spectrum inside the
open unit disc), Jordan blocks, and two explicit block matrices for case C.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import direct_sum
from .errors import InfeasibleError, InputError

SQRT_HALF = 1.0 / math.sqrt(2.0)
NONZERO_EIGENVALUE = 0.5


@dataclass(frozen=True)
class FeasibilityVerdict:
    j: int
    k: int
    n: int
    condition: str  # "A", "B", "C" or "NONE"

    @property
    def feasible(self) -> bool:
        return self.condition != "NONE"

    def explain(self) -> str:
        j, k, n = self.j, self.k, self.n
        lines = [
            f"(a) j = k <= n-1: {j} = {k} <= {n - 1} is {j == k <= n - 1}",
            f"(b) j <= k-1 and j+k <= n-1: {j} <= {k - 1} and {j + k} <= {n - 1} is "
            f"{j <= k - 1 and j + k <= n - 1}",
            f"(c) j <= k-2 and j+k = n: {j} <= {k - 2} and {j + k} = {n} is {j <= k - 2 and j + k == n}",
        ]
        head = f"(j, k, n) = ({j}, {k}, {n}) is " + (
            f"feasible by condition ({self.condition.lower()})" if self.feasible else "infeasible"
        )
        return "\n".join([head] + lines)


def _check_ints(**values):
    for name, v in values.items():
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
            raise InputError(f"{name} must be an integer, got {v!r}")


def feasible(j: int, k: int, n: int) -> FeasibilityVerdict:
    """Classify ``(j, k, n)``; the first matching condition in order A, B, C wins."""
    _check_ints(j=j, k=k, n=n)
    if j < 0 or k < 0 or n < 1:
        raise InputError(f"need j, k >= 0 and n >= 1, got ({j}, {k}, {n})")
    if j == k <= n - 1:
        cond = "A"
    elif j <= k - 1 and j + k <= n - 1:
        cond = "B"
    elif j <= k - 2 and j + k == n:
        cond = "C"
    else:
        cond = "NONE"
    return FeasibilityVerdict(int(j), int(k), int(n), cond)


def feasible_pairs(n: int) -> set[tuple[int, int]]:
    """All finite ``(p, a)`` attainable by an n-by-n matrix."""
    _check_ints(n=n)
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    return {(j, k) for j in range(n + 1) for k in range(n + 1) if feasible(j, k, n).feasible}


def jordan_block(q: int) -> np.ndarray:
    """``q x q`` nilpotent Jordan block with ones on the superdiagonal."""
    _check_ints(q=q)
    if q < 1:
        raise InputError(f"Jordan block size must be >= 1, got {q}")
    return np.eye(q, k=1, dtype=np.complex128)


def sn_matrix(eigenvalues) -> np.ndarray:
    """Upper-triangular S_n matrix with the given diagonal.

    Entry ``(i, j)``, ``i < j``, is
    ``sqrt(1-|l_i|^2) * prod_{i<t<j} (-conj(l_t)) * sqrt(1-|l_j|^2)``.
    The result is a contraction with ``rank(I - A*A) = 1``; with all
    eigenvalues zero it is exactly the Jordan block.
    """
    lam = np.asarray(list(eigenvalues), dtype=np.complex128)
    if lam.ndim != 1 or lam.size == 0:
        raise InputError("sn_matrix needs a nonempty list of eigenvalues")
    if not np.all(np.isfinite(lam)) or np.any(np.abs(lam) >= 1):
        raise InputError("every eigenvalue of an S_n matrix must have modulus < 1")
    n = lam.size
    d = np.sqrt(1.0 - np.abs(lam) ** 2)
    A = np.diag(lam)
    for i in range(n):
        prod = 1.0 + 0.0j
        for j in range(i + 1, n):
            A[i, j] = d[i] * prod * d[j]
            prod *= -np.conj(lam[j])
    return A


def s_matrix_spectrum(n: int, zeros: int) -> list[complex]:
    """Eigenvalue list used by the witnesses: ``zeros`` zeros, then 1/2."""
    return [0.0] * zeros + [NONZERO_EIGENVALUE] * (n - zeros)


def c_i_blocks() -> tuple[np.ndarray, np.ndarray]:
    B = np.array([[1.0, 0.0], [0.0, SQRT_HALF]], dtype=np.complex128)
    C = np.array([[0.0, SQRT_HALF], [0.0, 0.0]], dtype=np.complex128)
    return B, C


def c_ii_blocks(m: int) -> tuple[np.ndarray, np.ndarray]:
    """The 2 x m block ``B`` and nilpotent m x m block ``C`` for m >= 3.

    The stacked columns of ``[B; C]`` are orthonormal, ``C`` has rank m-1
    (so it is similar to J_m), and ``C*C`` is not a projection.
    """
    _check_ints(m=m)
    if m < 3:
        raise InputError(f"m must be >= 3, got {m}")
    B = np.zeros((2, m), dtype=np.complex128)
    B[0, 0] = 1.0
    B[1, 1] = SQRT_HALF
    B[1, m - 1] = 0.5
    C = np.zeros((m, m), dtype=np.complex128)
    C[0, 1] = -SQRT_HALF
    C[0, m - 1] = 0.5
    for r in range(1, m - 2):
        C[r, r + 1] = 1.0
    C[m - 2, m - 1] = SQRT_HALF
    return B, C


def block_chain_matrix(layer_blocks, B, C) -> np.ndarray:
    """Assemble the block upper matrix with zero diagonal layers.

    ``layer_blocks`` are the superdiagonal blocks between consecutive kernel
    layers; the last layer connects to the tail through ``B`` and the tail
    block is ``C``. With no layers the result is just ``C``.
    """
    C = np.asarray(C, dtype=np.complex128)
    B = np.asarray(B, dtype=np.complex128)
    layer_blocks = [np.asarray(b, dtype=np.complex128) for b in layer_blocks]
    sizes = [b.shape[0] for b in layer_blocks] + [B.shape[0], C.shape[0]]
    offs = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    n = int(offs[-1])
    A = np.zeros((n, n), dtype=np.complex128)
    for ell, blk in enumerate(layer_blocks):
        A[offs[ell] : offs[ell + 1], offs[ell + 1] : offs[ell + 2]] = blk
    t = len(layer_blocks)
    A[offs[t] : offs[t + 1], offs[t + 1] :] = B
    A[offs[t + 1] :, offs[t + 1] :] = C
    return A


def _identity_chain(j: int, B, C) -> np.ndarray:
    if j == 0:
        return np.asarray(C, dtype=np.complex128).copy()
    eye2 = np.eye(2, dtype=np.complex128)
    return block_chain_matrix([eye2] * (j - 1), B, C)


@dataclass(frozen=True)
class WitnessRecipe:
    """How a witness was assembled.

    ``parts`` lists the direct summands (or, for the C cases, the chain
    layers and tail) as ``(kind, detail)`` pairs with their sizes.
    """

    case: str
    j: int
    k: int
    n: int
    parts: tuple[tuple[str, object, int], ...] = field(default=())

    @property
    def size(self) -> int:
        return sum(p[2] for p in self.parts)

    def to_dict(self) -> dict:
        def detail(d):
            if isinstance(d, np.ndarray):
                return [[[float(z.real), float(z.imag)] for z in row] for row in d]
            if isinstance(d, (list, tuple)):
                return [float(np.real(x)) for x in d]
            return d

        return {
            "case": self.case,
            "j": self.j,
            "k": self.k,
            "n": self.n,
            "parts": [{"kind": kind, "detail": detail(d), "size": size} for kind, d, size in self.parts],
        }


def synthesize(j: int, k: int, n: int) -> tuple[np.ndarray, WitnessRecipe]:
    """Deterministic n x n matrix with ``p = j`` and ``a = k``."""
    verdict = feasible(j, k, n)
    if not verdict.feasible:
        raise InfeasibleError(verdict.explain(), verdict)

    if verdict.condition == "A":
        if j == 0:
            A = 0.5 * np.eye(n, dtype=np.complex128)
            return A, WitnessRecipe("A0", j, k, n, (("scalar", 0.5, n),))
        spec = s_matrix_spectrum(n, k)
        return sn_matrix(spec), WitnessRecipe("A_SN", j, k, n, (("sn", spec, n),))

    if verdict.condition == "B":
        if j == 0 and k == n - 1:
            A = direct_sum([[0.5]], jordan_block(k))
            return A, WitnessRecipe("B_I", j, k, n, (("scalar", 0.5, 1), ("jordan", k, k)))
        if j >= 1 and k == n - 1 - j:
            spec = s_matrix_spectrum(n - k, j)
            A = direct_sum(sn_matrix(spec), jordan_block(k))
            return A, WitnessRecipe("B_II", j, k, n, (("sn", spec, n - k), ("jordan", k, k)))
        # j + k <= n - 2
        spec1 = s_matrix_spectrum(j + 1, j)
        spec2 = s_matrix_spectrum(n - j - 1, k)
        A = direct_sum(sn_matrix(spec1), sn_matrix(spec2))
        return A, WitnessRecipe("B_III", j, k, n, (("sn", spec1, j + 1), ("sn", spec2, n - j - 1)))

    # condition C
    if j == k - 2:
        B, C = c_i_blocks()
        A = _identity_chain(j, B, C)
        parts = tuple(("identity_layer", 2, 2) for _ in range(j)) + (("tail_C", C, 2),)
        return A, WitnessRecipe("C_I", j, k, n, parts)
    m = k - j
    B, C = c_ii_blocks(m)
    A = _identity_chain(j, B, C)
    parts = tuple(("identity_layer", 2, 2) for _ in range(j)) + (("tail_C", C, m),)
    return A, WitnessRecipe("C_II", j, k, n, parts)


def infinite_index_witness(k: int, n: int) -> np.ndarray:
    """``J_k (+) I_(n-k)``: infinite index with ascent ``k``. Test helper only."""
    if not 0 <= k <= n:
        raise InputError(f"need 0 <= k <= n, got k={k}, n={n}")
    if k == 0:
        return np.eye(n, dtype=np.complex128)
    return direct_sum(jordan_block(k), np.eye(n - k))
