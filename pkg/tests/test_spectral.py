import numpy as np
import pytest

from ppindex import spectral
from ppindex.core import direct_sum
from ppindex.errors import InputError
from ppindex.synthesis import c_ii_blocks, jordan_block
from ppindex.testing import conjugate, random_block_sum, random_sn, random_unitary


@pytest.mark.parametrize("n", range(1, 9))
def test_jordan_ascent(n):
    chain = spectral.kernel_chain(jordan_block(n))
    assert chain.ascent == n
    assert chain.nullities == tuple(range(n + 1))


def test_invertible_has_ascent_zero(rng):
    assert spectral.ascent(0.5 * np.eye(3)) == 0
    assert spectral.ascent(random_unitary(4, rng)) == 0


@pytest.mark.parametrize("n", range(2, 8))
def test_scalar_plus_jordan(n):
    assert spectral.ascent(direct_sum([[0.5]], jordan_block(n - 1))) == n - 1


def test_multiplicities():
    J = jordan_block(5)
    assert spectral.geometric_multiplicity_zero(J) == 1
    assert spectral.algebraic_multiplicity_zero(J) == 5
    assert spectral.geometric_multiplicity_zero(0.5 * np.eye(3)) == 0
    assert spectral.algebraic_multiplicity_zero(0.5 * np.eye(3)) == 0


@pytest.mark.parametrize("m", range(3, 9))
def test_c_ii_tail_is_a_single_nilpotent_block(m):
    _, C = c_ii_blocks(m)
    assert spectral.geometric_multiplicity_zero(C) == 1
    assert spectral.algebraic_multiplicity_zero(C) == m
    assert spectral.ascent(C) == m


def test_non_square_rejected():
    with pytest.raises(InputError):
        spectral.ascent(np.ones((2, 3)))


def _nilpotent_plus_invertible(rng, n):
    sizes = []
    left = int(rng.integers(0, n + 1))
    while left:
        s = int(rng.integers(1, left + 1))
        sizes.append(s)
        left -= s
    inv = n - sum(sizes)
    blocks = [jordan_block(s) for s in sizes]
    if inv:
        blocks.append(random_sn(inv, rng, zeros=0))
    return direct_sum(*blocks), max(sizes, default=0)


def test_ascent_matches_multiplicity_route(rng):
    for _ in range(200):
        n = int(rng.integers(1, 9))
        A, expected = _nilpotent_plus_invertible(rng, n)
        A = conjugate(A, random_unitary(n, rng))
        assert spectral.ascent(A) == expected
        assert spectral.ascent_from_multiplicities(A) == expected


def test_ascent_of_direct_sum_is_max(rng):
    for _ in range(100):
        A = random_block_sum(int(rng.integers(1, 5)), rng)
        B = random_block_sum(int(rng.integers(1, 5)), rng)
        assert spectral.ascent(direct_sum(A, B)) == max(spectral.ascent(A), spectral.ascent(B))


def test_ascent_unitary_invariance(rng):
    for _ in range(100):
        n = int(rng.integers(1, 9))
        A = random_block_sum(n, rng)
        assert spectral.ascent(conjugate(A, random_unitary(n, rng))) == spectral.ascent(A)


def test_weyr_monotonicity(rng):
    for _ in range(100):
        n = int(rng.integers(1, 9))
        chain = spectral.kernel_chain(conjugate(random_block_sum(n, rng), random_unitary(n, rng)))
        assert chain.is_weyr_monotone()
        assert chain.ascent <= n
        assert chain.nullities[0] == 0
        assert all(a < b for a, b in zip(chain.nullities, chain.nullities[1:]))


def test_separation_filter():
    from ppindex.testing import is_well_separated

    assert is_well_separated(jordan_block(3))
    assert is_well_separated(0.5 * np.eye(2))
    assert not is_well_separated(np.diag([1.0, 1e-7]))
    assert not is_well_separated(np.diag([1.0, 1.0 - 1e-9]))
