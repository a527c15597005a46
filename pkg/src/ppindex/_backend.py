"""Select the compiled kernels when importable, else the numpy fallback.

The compiled loops beat numpy only while call overhead dominates; above
``COMPILED_MAX_N`` rows the BLAS-backed fallback is used even when the
extension is present (see benchmarks/bench_kernels.py).
"""

import os

from . import _kernels_py

COMPILED_MAX_N = 16

_compiled = None
if os.environ.get("PPINDEX_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "python" if _compiled is None else "cython"


def _pick(A):
    if _compiled is not None and A.shape[0] <= COMPILED_MAX_N:
        return _compiled
    return _kernels_py


def projection_residual(P):
    return _pick(P).projection_residual(P)


def isometry_residual(U):
    return _pick(U).isometry_residual(U)


def power_gram_residuals(A, L):
    return _pick(A).power_gram_residuals(A, L)
