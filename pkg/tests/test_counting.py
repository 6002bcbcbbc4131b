import pytest

from simonk import (
    DomainError,
    classes_with_m_arches_matrix,
    classes_with_m_arches_rec,
    lucas_u,
    perfect_universal_counts,
    simon_index_binary,
)
from simonk.counting import index_table, mat_pow, perfect_table, transfer_matrix


def test_matrix_examples():
    assert classes_with_m_arches_matrix(2, 1) == 10
    assert classes_with_m_arches_matrix(3, 2) == 34
    assert classes_with_m_arches_matrix(7, 6) == 4616
    for k in range(1, 10):
        assert classes_with_m_arches_matrix(k, 0) == 2 * k + 1


def test_matrix_domain():
    with pytest.raises(DomainError):
        classes_with_m_arches_matrix(3, 3)
    with pytest.raises(DomainError):
        classes_with_m_arches_matrix(3, -1)


def test_recurrence_bases_and_step():
    assert classes_with_m_arches_rec(5, -1) == 1
    assert classes_with_m_arches_rec(3, 2) == 2 * 2 * classes_with_m_arches_rec(2, 1) - 2 * 1 * 3
    assert classes_with_m_arches_rec(3, 2) == 34
    with pytest.raises(DomainError):
        classes_with_m_arches_rec(2, 3)


def test_matrix_equals_recurrence():
    for k in range(1, 21):
        for m in range(k):
            assert classes_with_m_arches_matrix(k, m) == classes_with_m_arches_rec(k, m)


def test_index_sequence_start():
    assert [simon_index_binary(k) for k in range(4)] == [1, 4, 16, 68]
    assert simon_index_binary(16) == 10_068_845_515_264
    with pytest.raises(DomainError):
        simon_index_binary(-1)


def test_index_exceeds_64_bits():
    assert simon_index_binary(40).bit_length() > 64


def test_perfect_examples():
    assert perfect_universal_counts(3, 2) == 14
    assert perfect_universal_counts(5, 4) == 164
    assert perfect_universal_counts(8, 7) == 6528
    for k in range(2, 10):
        assert perfect_universal_counts(k, 0) == 1
        assert perfect_universal_counts(k, 1) == 2 * k
        assert perfect_universal_counts(k, k) == 1
    with pytest.raises(DomainError):
        perfect_universal_counts(3, 4)


def test_lucas():
    assert lucas_u(7, 3, 0) == 0 and lucas_u(7, 3, 1) == 1
    assert lucas_u(4, 2, 2) == 4 and lucas_u(4, 2, 3) == 14
    assert [lucas_u(1, -1, n) for n in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]
    with pytest.raises(DomainError):
        lucas_u(1, 1, -1)


def test_perfect_counts_are_lucas_diagonals():
    for k in range(1, 25):
        for m in range(k):
            d = k - m
            assert perfect_universal_counts(k, m) == lucas_u(2 * d + 2, 2 * d, m + 1)


def test_index_diagonals_match_named_sequences():
    assert [classes_with_m_arches_rec(m + 1, m) for m in range(-1, 4)] == [1, 3, 10, 34, 116]
    assert [classes_with_m_arches_rec(m + 2, m) for m in range(-1, 4)] == [1, 5, 26, 136, 712]


def test_matrix_power_identity():
    assert mat_pow(transfer_matrix(3), 0) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_tables_shape():
    t = index_table(3)
    assert t[3] == {0: 7, 1: 26, 2: 34, 3: 1}
    p = perfect_table(3)
    assert p[3] == {0: 1, 1: 6, 2: 14, 3: 1}


def test_perfect_diagonals_match_named_sequences():
    diag = lambda d, n: [perfect_universal_counts(m + d, m) for m in range(n)]  # noqa: E731
    assert diag(1, 8) == [1, 4, 14, 48, 164, 560, 1912, 6528]
    assert diag(2, 7) == [1, 6, 32, 168, 880, 4608, 24128]
    assert diag(3, 6) == [1, 8, 58, 416, 2980, 21344]
