"""Partial isometries, the power partial isometry index, and the block form.

A matrix is a partial isometry exactly when ``A* A`` is an orthogonal
projection, which is the test used throughout. The index ``p(A)`` is the
largest ``j`` for which ``A, A^2, ..., A^j`` all pass; if ``A`` passes for
``j = ascent(A) + 1`` then every power passes and ``p(A)`` is infinite, so no
power beyond ``A^(a+1)`` is ever examined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .core import (
    _cfg,
    as_matrix,
    isometry_residual,
    max_abs,
    null_space,
    power,
    projection_residual,
    rank,
    unitary_residual,
)
from .errors import InputError, NumericError, PreconditionError, ToleranceDiagnosticError
from .spectral import KernelChain, algebraic_multiplicity_zero, kernel_chain

INFINITY = math.inf


def is_partial_isometry(A, cfg=None) -> bool:
    A = as_matrix(A, square=True)
    return projection_residual(A.conj().T @ A) <= _cfg(cfg).proj_tol


def power_residuals(A, upto: int) -> np.ndarray:
    """Projection residual of ``(A^l)* A^l`` for ``l = 1 .. upto``."""
    A = as_matrix(A, square=True)
    if upto <= 0 or A.size == 0:
        return np.zeros(max(upto, 0))
    return np.asarray(_backend.power_gram_residuals(A, int(upto)), dtype=float)


def _count_leading(flags) -> int:
    count = 0
    for f in flags:
        if not f:
            break
        count += 1
    return count


def ppi_index(A, cfg=None):
    """Power partial isometry index: a nonnegative ``int`` or ``math.inf``."""
    cfg = _cfg(cfg)
    A = as_matrix(A, square=True)
    a = kernel_chain(A, cfg).ascent
    passed = power_residuals(A, a + 1) <= cfg.proj_tol
    lead = _count_leading(passed)
    return INFINITY if lead == a + 1 else lead


def format_index(p) -> str:
    return "inf" if p == INFINITY else str(int(p))


@dataclass(frozen=True)
class IndexReport:
    n: int
    p: int | float
    a: int
    per_power: tuple[bool, ...]
    geo0: int
    alg0: int
    chain: KernelChain
    residuals: tuple[float, ...] = field(repr=False, default=())

    @property
    def finite(self) -> bool:
        return self.p != INFINITY

    def key(self):
        """Tuple compared by the similarity-invariance checks."""
        return (self.p, self.a, self.geo0, self.alg0, self.chain.nullities)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": format_index(self.p),
            "a": self.a,
            "per_power": list(self.per_power),
            "geo0": self.geo0,
            "alg0": self.alg0,
            "nullities": list(self.chain.nullities),
            "residuals": list(self.residuals),
        }


def report_violations(report: IndexReport) -> list[str]:
    """Invariants every report must satisfy; returns the broken ones."""
    n, p, a = report.n, report.p, report.a
    bad = []
    if report.finite and not p <= min(a, n - 1):
        bad.append(f"index bound: p={p} exceeds min(a, n-1)={min(a, n - 1)}")
    if report.finite and p + a > n and p != a:
        bad.append(f"p + a > n forces p = a, got p={p}, a={a}, n={n}")
    if report.finite and p + a == n and not (p == a or p <= a - 2):
        bad.append(f"p + a = n forces p = a or p <= a - 2, got p={p}, a={a}")
    if not report.chain.is_weyr_monotone():
        bad.append(f"kernel increments {report.chain.increments} are not non-increasing")
    if report.alg0 != report.chain.nullities[-1]:
        bad.append(f"alg0={report.alg0} differs from stabilized nullity {report.chain.nullities[-1]}")
    return bad


def analyze(A, cfg=None) -> IndexReport:
    """Compute ``p``, ``a`` and the multiplicities of 0, with self-checks.

    Raises ToleranceDiagnosticError if the discrete results contradict the
    known structure theory, which can only come from a misclassified
    singular value or residual.
    """
    cfg = _cfg(cfg)
    A = as_matrix(A, square=True)
    n = A.shape[0]
    chain = kernel_chain(A, cfg)
    a = chain.ascent
    res = power_residuals(A, a + 1)
    passed = tuple(bool(r <= cfg.proj_tol) for r in res)
    lead = _count_leading(passed)
    p = INFINITY if lead == a + 1 else lead
    report = IndexReport(
        n=n,
        p=p,
        a=a,
        per_power=passed,
        geo0=chain.nullities[1] if a >= 1 else 0,
        alg0=algebraic_multiplicity_zero(A, cfg),
        chain=chain,
        residuals=tuple(float(r) for r in res),
    )
    bad = report_violations(report)
    if bad:
        # the first failing power is the most likely misclassified one
        ell = min(lead + 1, a + 1)
        raise ToleranceDiagnosticError(
            "inconsistent analysis: " + "; ".join(bad),
            power=ell,
            singular_values=np.linalg.svd(power(A, ell), compute_uv=False).tolist(),
            residuals={f"A^{i + 1}": float(r) for i, r in enumerate(res)},
        )
    return report


@dataclass(frozen=True)
class BlockForm:
    """Unitary reduction ``Q* A Q`` to the strictly block upper form.

    The diagonal blocks are zero except the last one ``C``; the nonzero
    off-diagonal blocks are ``A_1 .. A_(j-1)`` on the block superdiagonal and
    ``B`` linking the last kernel layer to the remainder. ``dims`` lists the
    layer sizes ``n_1 .. n_j`` followed by ``m``.
    """

    Q: np.ndarray
    dims: tuple[int, ...]
    superdiag_blocks: tuple[np.ndarray, ...]
    B: np.ndarray
    C: np.ndarray

    @property
    def j(self) -> int:
        return len(self.dims) - 1

    @property
    def m(self) -> int:
        return self.dims[-1]

    def assemble(self) -> np.ndarray:
        """The block matrix these pieces describe, in the ``Q`` basis."""
        n = sum(self.dims)
        out = np.zeros((n, n), dtype=np.complex128)
        offs = np.concatenate([[0], np.cumsum(self.dims)]).astype(int)
        for ell, blk in enumerate(self.superdiag_blocks):
            out[offs[ell] : offs[ell + 1], offs[ell + 1] : offs[ell + 2]] = blk
        j = self.j
        out[offs[j - 1] : offs[j], offs[j] :] = self.B
        out[offs[j] :, offs[j] :] = self.C
        return out


@dataclass
class BlockCheck:
    ok: bool
    violations: list[str]
    residuals: dict[str, float]

    def __bool__(self):
        return self.ok


def verify_block_form(F: BlockForm, A, cfg=None) -> BlockCheck:
    """Check every BlockForm invariant against ``A``."""
    cfg = _cfg(cfg)
    A = as_matrix(A, square=True)
    n = A.shape[0]
    dims = tuple(int(d) for d in F.dims)
    j = len(dims) - 1
    if j < 1:
        raise InputError("a block form needs at least one kernel layer")
    if F.Q.shape != (n, n):
        raise InputError(f"Q has shape {F.Q.shape}, expected {(n, n)}")
    if sum(dims) != n:
        raise InputError(f"dims {dims} do not sum to n={n}")
    if len(F.superdiag_blocks) != j - 1:
        raise InputError(f"expected {j - 1} superdiagonal blocks, got {len(F.superdiag_blocks)}")
    for ell, blk in enumerate(F.superdiag_blocks):
        if blk.shape != (dims[ell], dims[ell + 1]):
            raise InputError(f"A_{ell + 1} has shape {blk.shape}, expected {(dims[ell], dims[ell + 1])}")
    m = dims[-1]
    if F.B.shape != (dims[j - 1], m) or F.C.shape != (m, m):
        raise InputError(f"B {F.B.shape} / C {F.C.shape} do not match dims {dims}")

    tol = cfg.proj_tol
    residuals: dict[str, float] = {}
    violations: list[str] = []

    def record(name, value):
        residuals[name] = value
        if value > tol:
            violations.append(f"{name}: residual {value:.3e} exceeds {tol:.1e}")

    record("Q*Q - I", unitary_residual(F.Q))
    for ell, blk in enumerate(F.superdiag_blocks, start=1):
        record(f"A_{ell}*A_{ell} - I", isometry_residual(blk))
    gram = F.B.conj().T @ F.B + F.C.conj().T @ F.C
    record("B*B + C*C - I", max_abs(gram - np.eye(m)))
    record("Q*AQ - layout", max_abs(F.Q.conj().T @ A @ F.Q - F.assemble()))

    if any(d < 1 for d in dims[:-1]) or any(x < y for x, y in zip(dims[:-1], dims[1:-1])):
        violations.append(f"layer sizes {dims[:-1]} are not non-increasing and positive")
    r = rank(power(A, j), cfg)
    if m != r:
        violations.append(f"m={m} differs from rank(A^{j})={r}")
    return BlockCheck(not violations, violations, residuals)


def _canonical_phase(Q: np.ndarray) -> np.ndarray:
    """Rotate each column so its largest-magnitude entry is real positive."""
    Q = Q.copy()
    for c in range(Q.shape[1]):
        col = Q[:, c]
        pivot = col[np.argmax(np.abs(col))]
        if pivot != 0:
            Q[:, c] = col * (abs(pivot) / pivot)
    return Q


def _complement(V: np.ndarray, n: int) -> np.ndarray:
    """Orthonormal basis of the orthogonal complement of span(V) in C^n."""
    if V.shape[1] == 0:
        return np.eye(n, dtype=np.complex128)
    u, _, _ = np.linalg.svd(V, full_matrices=True)
    return u[:, V.shape[1] :]


def canonical_form(A, j: int, cfg=None) -> BlockForm:
    """Unitary reduction of ``A`` to block form along its kernel chain.

    Requires ``1 <= j <= ascent(A)`` and ``A, ..., A^j`` partial isometries.
    Columns of ``Q`` are, in order, orthonormal bases of ``ker A``, of
    ``ker A^l`` minus ``ker A^(l-1)`` for ``l = 2 .. j``, and of the
    orthogonal complement of ``ker A^j``.
    """
    cfg = _cfg(cfg)
    A = as_matrix(A, square=True)
    n = A.shape[0]
    if isinstance(j, bool) or int(j) != j:
        raise InputError(f"j must be an integer, got {j!r}")
    j = int(j)
    if j < 1:
        raise InputError(f"j must be >= 1, got {j}")
    # the partial isometry precondition is reported before the range check
    res = power_residuals(A, j)
    for ell, r in enumerate(res, start=1):
        if r > cfg.proj_tol:
            raise PreconditionError(
                f"A^{ell} is not a partial isometry (residual {r:.3e})", power=ell
            )
    chain = kernel_chain(A, cfg)
    if j > chain.ascent:
        raise InputError(f"j={j} exceeds ascent(A)={chain.ascent}")

    layers = list(chain.increments[:j])
    cols = null_space(A, cfg)
    if cols.shape[1] != layers[0]:
        raise NumericError("kernel basis size disagrees with the kernel chain")
    P = A.copy()
    for ell in range(2, j + 1):
        P = P @ A
        N = null_space(P, cfg)
        R = N - cols @ (cols.conj().T @ N)
        u, _, _ = np.linalg.svd(R, full_matrices=False)
        cols = np.hstack([cols, u[:, : layers[ell - 1]]])
    Q = _canonical_phase(np.hstack([cols, _complement(cols, n)]))

    m = n - cols.shape[1]
    dims = tuple(layers) + (m,)
    T = Q.conj().T @ A @ Q
    offs = np.concatenate([[0], np.cumsum(dims)]).astype(int)
    blocks = tuple(
        T[offs[ell] : offs[ell + 1], offs[ell + 1] : offs[ell + 2]].copy() for ell in range(j - 1)
    )
    form = BlockForm(
        Q=Q,
        dims=dims,
        superdiag_blocks=blocks,
        B=T[offs[j - 1] : offs[j], offs[j] :].copy(),
        C=T[offs[j] :, offs[j] :].copy(),
    )
    check = verify_block_form(form, A, cfg)
    if not check:
        raise NumericError("block form failed verification: " + "; ".join(check.violations), check.residuals)
    return form
