"""Tests for exact elimination."""

import pytest

from chordcert.errors import MixedFields
from chordcert.fields import build_prime_field
from chordcert.linalg import mat_vec, rank, rank_kernel, render, reversed_columns, solve


def _matrix(field, rows):
    return [[field.from_int(x) for x in row] for row in rows]


def test_identity_and_zero(f5):
    r, kernel = rank_kernel(_matrix(f5, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert r == 3
    assert kernel == []
    r, kernel = rank_kernel(_matrix(f5, [[0, 0, 0], [0, 0, 0]]))
    assert r == 0
    assert len(kernel) == 3


def test_rank_plus_nullity(f5):
    m = _matrix(f5, [[1, 2, 3, 4], [2, 4, 1, 3], [3, 1, 4, 2]])
    r, kernel = rank_kernel(m)
    assert r + len(kernel) == 4
    for v in kernel:
        assert all(x.is_zero() for x in mat_vec(m, v))
    assert rank(reversed_columns(m)) == r


def test_dependent_rows(f5):
    # third row = first + second
    m = _matrix(f5, [[1, 2, 0, 1], [0, 1, 1, 3], [1, 3, 1, 4]])
    assert rank(m) == 2


def test_solve(f5):
    a = _matrix(f5, [[1, 0], [0, 1], [1, 1]])
    x = solve(a, [f5.from_int(2), f5.from_int(3), f5.zero()])
    assert x == [f5.from_int(2), f5.from_int(3)]
    assert solve(a, [f5.from_int(2), f5.from_int(3), f5.one()]) is None


def test_mixed_fields():
    f5, f7 = build_prime_field(5), build_prime_field(7)
    with pytest.raises(MixedFields):
        rank_kernel([[f5.one(), f7.one()]])


def test_render(f5):
    text = render(_matrix(f5, [[1, 0], [4, 3]]), ["a", "b"])
    assert text.splitlines() == ["a b", "1 0", "4 3"]
