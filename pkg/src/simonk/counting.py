"""Exact class counts of Simon's congruence on binary words.

Classes of binary words with ``m < k`` arches are counted by a 3x3 transfer
matrix whose states are the three kinds of alpha factor (a-block, empty,
b-block); its characteristic polynomial yields a linear recurrence along the
diagonals ``k - m = const``. All arithmetic uses Python integers.
"""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .words import DomainError

Matrix = tuple[tuple[int, int, int], ...]
Vector = tuple[int, int, int]


def transfer_matrix(delta: int) -> Matrix:
    """Transfer matrix for ``delta = k - m``."""
    return (
        (delta, delta, delta),
        (1, 2, 1),
        (delta, delta, delta),
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(3)) for j in range(3)) for i in range(3)
    )


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(sum(a[i][t] * v[t] for t in range(3)) for i in range(3))


def mat_pow(a: Matrix, n: int) -> Matrix:
    result: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    while n:
        if n & 1:
            result = mat_mul(result, a)
        a = mat_mul(a, a)
        n >>= 1
    return result


def norm1(v: Vector) -> int:
    # entries are non-negative
    return sum(v)


def classes_with_m_arches_matrix(k: int, m: int) -> int:
    """Number of ``~_k`` classes of binary words with exactly ``m < k`` arches."""
    if not 0 <= m < k:
        raise DomainError(f"need 0 <= m < k, got k={k}, m={m}")
    delta = k - m
    return norm1(mat_vec(mat_pow(transfer_matrix(delta), m), (delta, 1, delta)))


@lru_cache(maxsize=None)
def classes_with_m_arches_rec(k: int, m: int) -> int:
    """Same count via the diagonal recurrence.

    ``c_k^{-1} = 1``, ``c_k^0 = 2k + 1`` and
    ``c_k^m = 2(k-m+1) c_{k-1}^{m-1} - 2(k-m) c_{k-2}^{m-2}``. The entry
    ``m = k`` is the single class of words with at least ``k`` arches.
    """
    if m < -1 or m > k:
        raise DomainError(f"need -1 <= m <= k, got k={k}, m={m}")
    if m == -1:
        return 1
    if m == k:
        return 1
    if m == 0:
        return 2 * k + 1
    return (
        2 * (k - m + 1) * classes_with_m_arches_rec(k - 1, m - 1)
        - 2 * (k - m) * classes_with_m_arches_rec(k - 2, m - 2)
    )


def simon_index_binary(k: int) -> int:
    """Number of classes of ``~_k`` over a two-letter alphabet."""
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    return 1 + sum(classes_with_m_arches_rec(k, m) for m in range(k))


def perfect_universal_counts(k: int, m: int) -> int:
    """Classes of ``~_k`` among binary words with ``m`` arches and empty rest."""
    if not 0 <= m <= k:
        raise DomainError(f"need 0 <= m <= k, got k={k}, m={m}")
    if m == k:
        return 1
    return norm1(mat_vec(mat_pow(transfer_matrix(k - m), m), (0, 1, 0)))


def lucas_u(p: int, q: int, n: int) -> int:
    """Lucas sequence of the first kind ``U_n(P, Q)``."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, p * b - q * a
    return a


def index_table(k_max: int) -> dict[int, dict[int, int]]:
    """Rows ``k = 1..k_max`` of class counts per arch number (``m = k`` is 1)."""
    return {k: {m: classes_with_m_arches_rec(k, m) for m in range(k + 1)} for k in range(1, k_max + 1)}


def perfect_table(k_max: int) -> dict[int, dict[int, int]]:
    return {k: {m: perfect_universal_counts(k, m) for m in range(k + 1)} for k in range(2, k_max + 1)}


def _data_lines(filename: str):
    text = resources.files("simonk").joinpath("data", filename).read_text()
    return [line for line in text.splitlines() if line and not line.startswith(("#", "k\t"))]


def reference_table(name: str) -> dict[tuple[int, int], int]:
    """Published class counts keyed by ``(k, m)``.

    ``name`` is ``"index"`` for all binary words or ``"perfect"`` for words
    with empty rest. Values are kept exactly as printed.
    """
    files = {"index": "index_per_arches.tsv", "perfect": "perfect_per_arches.tsv"}
    if name not in files:
        raise DomainError(f"unknown table {name!r}, expected one of {sorted(files)}")
    out = {}
    for line in _data_lines(files[name]):
        k, m, c = map(int, line.split("\t"))
        out[k, m] = c
    return out


def reference_index_sequence() -> list[int]:
    """Published values of the binary index for ``k = 0, 1, 2, ...``."""
    return [int(line) for line in _data_lines("index_sequence.txt")]
