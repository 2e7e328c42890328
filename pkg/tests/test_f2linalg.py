import random

import pytest

from faicodes.f2linalg import (
    BitMatrix,
    from_text,
    gram,
    kernel_basis,
    mul,
    rank,
    row_space_meet_dim,
    rref,
    solve_preimage,
    stack,
    to_text,
)


def rows_from_strings(*lines):
    cols = len(lines[0])
    data = [sum(1 << c for c, ch in enumerate(ln) if ch == "1") for ln in lines]
    return BitMatrix.from_rows(data, cols)


def test_rref_identity():
    m = BitMatrix.identity(2)
    red, pivots = rref(m)
    assert red == m
    assert pivots == (0, 1)


def test_rref_duplicate_rows():
    m = rows_from_strings("11", "11")
    red, pivots = rref(m)
    assert red == rows_from_strings("11")
    assert pivots == (0,)


def test_rref_rank_two_example():
    # hand elimination: 101 = 110 + 011, so rank 2 with rows {101, 011}
    m = rows_from_strings("011", "110", "101")
    red, pivots = rref(m)
    assert red == rows_from_strings("101", "011")
    assert pivots == (0, 1)
    assert rank(m) == 2


def test_rank_trivial():
    assert rank(BitMatrix.zeros(3, 3)) == 0
    assert rank(BitMatrix.identity(4)) == 4


def test_kernel_identity_empty():
    assert kernel_basis(BitMatrix.identity(3)).rows == 0


def test_kernel_zero_matrix_full_space():
    k = kernel_basis(BitMatrix.zeros(2, 3))
    assert k.rows == 3
    assert rank(k) == 3


def test_kernel_single_parity_row():
    k = kernel_basis(rows_from_strings("11"))
    assert k.rows == 1
    assert k.data[0] == 0b11


def test_meet_dim_examples():
    eye = BitMatrix.identity(2)
    assert row_space_meet_dim(eye, eye) == 2
    assert row_space_meet_dim(rows_from_strings("10"), rows_from_strings("01")) == 0
    a = rows_from_strings("110", "011")
    b = rows_from_strings("101")
    assert row_space_meet_dim(a, b) == 1


def test_meet_dim_column_mismatch():
    with pytest.raises(ValueError):
        row_space_meet_dim(BitMatrix.identity(2), BitMatrix.identity(3))


def test_gram_examples():
    eye = BitMatrix.identity(3)
    assert gram(eye) == eye
    assert gram(rows_from_strings("111")).data == (1,)
    g = gram(rows_from_strings("1100", "0110"))
    assert [[g.entry(i, j) for j in range(2)] for i in range(2)] == [[0, 1], [1, 0]]


def test_mul_identity_and_shapes():
    a = rows_from_strings("101", "011")
    assert mul(a, BitMatrix.identity(3)) == a
    with pytest.raises(ValueError):
        mul(a, BitMatrix.identity(2))


def test_solve_preimage_examples():
    eye = BitMatrix.identity(4)
    assert solve_preimage(eye, 0b1010) == 0b1010
    m = rows_from_strings("110", "011")
    x = solve_preimage(m, 0b101)  # "101" as an int is bits 0 and 2
    assert x == 0b11
    assert solve_preimage(m, 0b100) is None


def test_solve_preimage_target_range():
    with pytest.raises(ValueError):
        solve_preimage(BitMatrix.identity(2), 0b100)


def test_empty_matrix_conventions():
    empty = BitMatrix.zeros(0, 5)
    assert rank(empty) == 0
    assert kernel_basis(empty).rows == 5


def test_invalid_rows_rejected():
    with pytest.raises(ValueError):
        BitMatrix.from_rows([0b100], 2)  # stray bit beyond the columns


def test_text_roundtrip_and_errors():
    m = rows_from_strings("0110", "1001")
    assert from_text(to_text(m)) == m
    with pytest.raises(ValueError):
        from_text("2 3\n010\n")  # missing a row
    with pytest.raises(ValueError):
        from_text("1 3\n01x\n")


def test_random_invariants():
    rng = random.Random(0xF2)
    for _ in range(300):
        cols = rng.randrange(1, 12)
        m = BitMatrix.from_rows(
            (rng.getrandbits(cols) for _ in range(rng.randrange(1, 14))), cols
        )
        red, pivots = rref(m)
        assert rref(red) == (red, pivots)
        assert rank(m) == len(pivots)
        assert list(pivots) == sorted(pivots)
        kern = kernel_basis(m)
        assert rank(kern) + rank(m) == cols
        for x in kern.data:
            assert all((row & x).bit_count() % 2 == 0 for row in m.data)
        g = gram(m)
        assert all(
            g.entry(i, j) == g.entry(j, i) for i in range(m.rows) for j in range(m.rows)
        )
        other = BitMatrix.from_rows(
            (rng.getrandbits(cols) for _ in range(rng.randrange(1, 6))), cols
        )
        meet = row_space_meet_dim(m, other)
        assert meet >= 0
        assert (rank(stack(m, other)) == rank(m) + rank(other)) == (meet == 0)
