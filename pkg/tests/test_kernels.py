import numpy as np
import pytest

from ppindex import _backend, _kernels_py
from ppindex.testing import random_matrix

compiled = pytest.importorskip("ppindex._kernels")


def test_backend_reports_choice():
    assert _backend.BACKEND in ("cython", "python")


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 12])
def test_compiled_matches_numpy(n):
    rng = np.random.default_rng(n)
    for _ in range(20):
        A = random_matrix(n, rng)
        L = n + 1
        assert np.allclose(compiled.power_gram_residuals(A, L), _kernels_py.power_gram_residuals(A, L), atol=1e-12)
        P = A.conj().T @ A
        assert abs(compiled.projection_residual(P) - _kernels_py.projection_residual(P)) <= 1e-12
        assert abs(compiled.isometry_residual(A) - _kernels_py.isometry_residual(A)) <= 1e-12


def test_rectangular_isometry_residual():
    V = np.linalg.qr(np.random.default_rng(0).standard_normal((5, 3)))[0]
    assert compiled.isometry_residual(V) <= 1e-14
    assert _kernels_py.isometry_residual(V) <= 1e-14


def test_large_matrices_use_numpy(monkeypatch):
    calls = []
    monkeypatch.setattr(_kernels_py, "projection_residual", lambda P: calls.append(P.shape) or 0.0)
    _backend.projection_residual(np.eye(_backend.COMPILED_MAX_N + 1))
    assert calls == [(_backend.COMPILED_MAX_N + 1,) * 2]
