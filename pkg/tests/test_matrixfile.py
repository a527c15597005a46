import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ppindex.errors import InputError
from ppindex.matrixfile import dumps, loads, read_matrix, write_matrix
from ppindex.synthesis import feasible_pairs, synthesize

finite = st.floats(allow_nan=False, allow_infinity=False, width=64)


@settings(max_examples=100)
@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.tuples(finite, finite), min_size=r * c, max_size=r * c).map(
        lambda xs: np.array([complex(a, b) for a, b in xs]).reshape(r, c)))))
def test_round_trip_is_bit_exact(A):
    B = loads(dumps(A))
    assert B.shape == A.shape
    assert B.tobytes() == A.tobytes()


def test_witnesses_round_trip(tmp_path):
    for n in range(1, 9):
        for j, k in feasible_pairs(n):
            A, _ = synthesize(j, k, n)
            path = tmp_path / "w.json"
            write_matrix(path, A)
            assert read_matrix(path).tobytes() == A.tobytes()


def test_document_layout():
    doc = json.loads(dumps(np.array([[1 + 2j, 0], [0, 0.5]])))
    assert doc == {"rows": 2, "cols": 2, "entries": [[[1.0, 2.0], [0.0, 0.0]], [[0.0, 0.0], [0.5, 0.0]]]}


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"rows": 2, "cols": 2}',
        '{"rows": 2, "cols": 2, "entries": [[[1, 0], [0, 0], [0, 0]], [[0, 0], [1, 0]]]}',
        '{"rows": 1, "cols": 1, "entries": [[[NaN, 0]]]}',
        '{"rows": 1, "cols": 1, "entries": [[[Infinity, 0]]]}',
        '{"rows": 1, "cols": 1, "entries": [[[1, 0, 0]]]}',
        '{"rows": 1, "cols": 1, "entries": [[["1", 0]]]}',
        '{"rows": 0, "cols": 1, "entries": []}',
        '{"rows": 2, "cols": 1, "entries": [[[1, 0]]]}',
    ],
)
def test_malformed_documents(text):
    with pytest.raises(InputError):
        loads(text)


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        read_matrix(tmp_path / "nope.json")
