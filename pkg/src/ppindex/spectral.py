"""Kernel chains, ascent, and the multiplicities of the eigenvalue 0."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import as_matrix, nullity, power, powers
from .errors import ToleranceDiagnosticError


@dataclass(frozen=True)
class KernelChain:
    """Nullities of ``A^0, A^1, ..., A^t`` where ``t`` is the ascent.

    ``nullities[t] == nullity(A^(t+1))``, so the chain stops at its first
    repeated value and that value is not stored twice.
    """

    nullities: tuple[int, ...]
    ascent: int

    @property
    def increments(self) -> tuple[int, ...]:
        """``n_l = nullity(A^l) - nullity(A^(l-1))`` for ``l = 1 .. ascent``."""
        v = self.nullities
        return tuple(v[i] - v[i - 1] for i in range(1, len(v)))

    def is_weyr_monotone(self) -> bool:
        inc = self.increments
        return all(a >= b for a, b in zip(inc, inc[1:]))


def kernel_chain(A, cfg=None) -> KernelChain:
    """Walk ``ker A^k`` until two consecutive dimensions agree.

    Each nullity comes from a fresh SVD of the explicitly formed power.
    Nullities strictly increase before stabilizing and are bounded by ``n``,
    so at most ``n + 1`` powers are formed.
    """
    A = as_matrix(A, square=True)
    n = A.shape[0]
    nulls = [0]
    P = np.eye(n, dtype=np.complex128)
    while True:
        P = P @ A
        v = nullity(P, cfg)
        if v == nulls[-1]:
            return KernelChain(tuple(nulls), len(nulls) - 1)
        if v < nulls[-1]:
            # kernels are nested; a drop means round-off swamped a decision
            k = len(nulls)
            raise ToleranceDiagnosticError(
                f"nullity dropped from {nulls[-1]} to {v} at power {k}",
                power=k,
                singular_values=np.linalg.svd(P, compute_uv=False).tolist(),
            )
        nulls.append(v)


def ascent(A, cfg=None) -> int:
    """Smallest ``k >= 0`` with ``ker A^k == ker A^(k+1)``."""
    return kernel_chain(A, cfg).ascent


def geometric_multiplicity_zero(A, cfg=None) -> int:
    """``dim ker A``."""
    return nullity(as_matrix(A, square=True), cfg)


def algebraic_multiplicity_zero(A, cfg=None) -> int:
    """``dim ker A^n``, the stabilized kernel dimension."""
    A = as_matrix(A, square=True)
    return nullity(power(A, A.shape[0]), cfg)


def ascent_from_multiplicities(A, cfg=None) -> int:
    """Smallest ``k`` with ``dim ker A^k`` equal to the algebraic multiplicity of 0.

    Independent route to the ascent, used for cross-checks. The algebraic
    multiplicity of 0 is the same for every positive power of ``A``, and is
    taken to be that of ``A`` at ``k = 0`` as well.
    """
    A = as_matrix(A, square=True)
    n = A.shape[0]
    alg = algebraic_multiplicity_zero(A, cfg)
    for k, Pk in enumerate(powers(A, n)):
        if k == 0:
            if alg == 0:
                return 0
            continue
        if nullity(Pk, cfg) == alg:
            return k
    return n
