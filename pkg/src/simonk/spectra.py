"""Scattered factors, spectra and the brute-force congruence oracle.

Everything here works directly from the definition of Simon's congruence:
two words are ``k``-congruent iff they have the same scattered factors
(subsequences) of length at most ``k``. The functions are exponential in the
worst case and meant for short words; they are the ground truth the
structural characterizations are checked against.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .words import EPSILON_TEXT, Alphabet, DomainError, Word, parse_word

INFINITE = math.inf


def _shortlex(t: tuple[int, ...]):
    return (len(t), t)


@dataclass(frozen=True)
class Spectrum:
    """All distinct scattered factors of length at most ``k`` of a word.

    ``factors`` is kept in shortlex order, so two spectra compare equal iff
    they hold the same set.
    """

    k: int
    alphabet: Alphabet
    factors: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.factors)

    def __contains__(self, u) -> bool:
        if isinstance(u, Word):
            u = u.letters
        return tuple(u) in set(self.factors)

    def words(self) -> list[Word]:
        return [Word(f, self.alphabet) for f in self.factors]

    def layer(self, length: int) -> list[Word]:
        return [Word(f, self.alphabet) for f in self.factors if len(f) == length]

    def render(self) -> list[str]:
        return [Word(f, self.alphabet).render() for f in self.factors]

    def to_text(self) -> str:
        """Newline separated factors, the empty word written as ``-``."""
        return "\n".join(self.render()) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.render())

    @classmethod
    def from_text(cls, text: str, k: int, alphabet: Alphabet) -> "Spectrum":
        factors = set()
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            factors.add(() if line == EPSILON_TEXT else parse_word(line, alphabet).letters)
        return cls(k, alphabet, tuple(sorted(factors, key=_shortlex)))


def is_scattered_factor(u: Word, w: Word) -> bool:
    """Greedy left-to-right embedding test for ``u`` being a subsequence of ``w``."""
    if u.alphabet == w.alphabet:
        needle, hay = u.letters, w.letters
    else:
        needle, hay = str(u), str(w)
    it = iter(hay)
    return all(any(x == y for y in it) for x in needle)


def _subsequences_upto(letters: tuple[int, ...], k: int) -> set[tuple[int, ...]]:
    found = {()}
    if k <= 0:
        return found
    for x in letters:
        found |= {s + (x,) for s in found if len(s) < k}
    return found


@lru_cache(maxsize=1 << 16)
def spectrum_key(letters: tuple[int, ...], k: int) -> frozenset:
    """Hashable set of scattered factors of length at most ``k``."""
    return frozenset(_subsequences_upto(letters, k))


def spectrum_upto(w: Word, k: int) -> Spectrum:
    return Spectrum(k, w.alphabet, tuple(sorted(spectrum_key(w.letters, k), key=_shortlex)))


def _check_same_alphabet(u: Word, v: Word):
    if u.alphabet != v.alphabet:
        raise DomainError(
            f"words over different alphabets: {u.alphabet.symbols!r} vs {v.alphabet.symbols!r}"
        )


def simk_oracle(u: Word, v: Word, k: int) -> bool:
    """Decide ``u ~_k v`` by comparing spectra."""
    _check_same_alphabet(u, v)
    if k <= 0:
        return True
    return spectrum_key(u.letters, k) == spectrum_key(v.letters, k)


def iter_layers(letters: tuple[int, ...]) -> Iterator[frozenset]:
    """Yield the sets of distinct scattered factors of length 0, 1, 2, ...

    Each layer is built from the previous one using next-occurrence jumps,
    so only the layers actually consumed are computed.
    """
    n = len(letters)
    alphabet = sorted(set(letters))
    # nxt[i][x]: first position >= i holding x, or n
    nxt = [None] * (n + 1)
    row = {x: n for x in alphabet}
    nxt[n] = dict(row)
    for i in range(n - 1, -1, -1):
        row[letters[i]] = i
        nxt[i] = dict(row)
    # layer[i]: factors of the current length in letters[i:]
    layer = [frozenset({()})] * (n + 1)
    yield layer[0]
    for length in range(1, n + 1):
        new = [frozenset()] * (n + 1)
        for i in range(n - 1, -1, -1):
            acc = set()
            for x, j in nxt[i].items():
                if j < n:
                    acc.update((x,) + s for s in layer[j + 1])
            new[i] = frozenset(acc)
        layer = new
        yield layer[0]
        if not layer[0]:
            return


def maxsimk_oracle(u: Word, v: Word) -> float | int:
    """Largest ``k`` with ``u ~_k v`` by brute force; ``INFINITE`` iff ``u == v``.

    Distinct words differ at the latest in the layer of length
    ``max(|u|, |v|)`` since the longer word is its own scattered factor.
    """
    _check_same_alphabet(u, v)
    if u.letters == v.letters:
        return INFINITE
    bound = max(len(u), len(v))
    lu, lv = iter_layers(u.letters), iter_layers(v.letters)
    for length in range(bound + 1):
        a = next(lu, frozenset())
        b = next(lv, frozenset())
        if a != b:
            return length - 1
    raise AssertionError(f"distinct words {u} and {v} agree on every layer up to {bound}")


def _omega(w: Word, omega) -> frozenset[int]:
    return w.alphabet.letter_set(omega)


def universality_index(w: Word, omega: Iterable[str | int] | None = None) -> int:
    """Number of arches of ``w`` with respect to ``omega`` (default: the alphabet)."""
    need = _omega(w, omega)
    if not need:
        return 0
    count, seen = 0, set()
    for x in w.letters:
        if x in need:
            seen.add(x)
            if len(seen) == len(need):
                count += 1
                seen = set()
    return count


def can_drop_suffix(u: Word, v: Word, k: int) -> bool:
    """Decide ``uv ~_k u`` through a block factorization of ``u``.

    ``uv ~_k u`` iff ``u = u_1 ... u_k`` with
    ``letters(u_1) >= ... >= letters(u_k) >= letters(v)``. Blocks are peeled
    from the right, each the shortest suffix covering the letters required
    by the block to its right.
    """
    _check_same_alphabet(u, v)
    if not u.letters:
        raise DomainError("can_drop_suffix needs a non-empty u")
    if k <= 0 or not v.letters:
        return True
    need = set(v.letters)
    end = len(u)
    for _ in range(k):
        seen = set()
        start = end
        while start > 0 and not need <= seen:
            start -= 1
            seen.add(u.letters[start])
        if not need <= seen:
            return False
        need = seen
        end = start
    return True


def can_drop_letter(u: Word, x: str | int, v: Word, k: int) -> bool:
    """Decide ``uxv ~_k uv`` by Simon's letter elimination criterion.

    The criterion asks for ``p + p' >= k`` with ``ux ~_p u`` and
    ``xv ~_p' v``; taking the largest such levels suffices.
    """
    _check_same_alphabet(u, v)
    if isinstance(x, str):
        x = u.alphabet.index(x)
    xw = Word((x,), u.alphabet)
    p = maxsimk_oracle(u + xw, u)
    q = maxsimk_oracle(xw + v, v)
    return p + q >= k
