"""Alphabets and words.

Letters are stored as small integer indices into an ordered :class:`Alphabet`;
rendering maps them back to characters. A word always carries its alphabet
because universality depends on the alphabet, not only on the letters used.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

MAX_ALPHABET_SIZE = 26
EPSILON_TEXT = "-"


class ParseError(ValueError):
    """Raised when text cannot be read as a word over the requested alphabet."""


class DomainError(ValueError):
    """Raised when an operation is called outside its domain."""


@dataclass(frozen=True)
class Alphabet:
    symbols: str

    def __post_init__(self):
        if not 1 <= len(self.symbols) <= MAX_ALPHABET_SIZE:
            raise DomainError(
                f"alphabet size must be between 1 and {MAX_ALPHABET_SIZE}, got {len(self.symbols)}"
            )
        if len(set(self.symbols)) != len(self.symbols):
            raise DomainError(f"alphabet symbols are not distinct: {self.symbols!r}")
        for ch in self.symbols:
            if not ch.isprintable() or ch.isspace():
                raise DomainError(f"alphabet symbol {ch!r} is not a printable character")

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        i = self.symbols.find(symbol)
        if i < 0 or len(symbol) != 1:
            raise DomainError(f"{symbol!r} is not a letter of alphabet {self.symbols!r}")
        return i

    def letter_set(self, letters: Iterable[str | int] | None = None) -> frozenset[int]:
        """Normalize symbols or indices to a set of letter indices.

        ``None`` means the whole alphabet.
        """
        if letters is None:
            return frozenset(range(self.size))
        out = set()
        for x in letters:
            if isinstance(x, int):
                if not 0 <= x < self.size:
                    raise DomainError(f"letter index {x} outside alphabet {self.symbols!r}")
                out.add(x)
            else:
                out.add(self.index(x))
        return frozenset(out)

    def render_set(self, letters: Iterable[int]) -> str:
        return "".join(self.symbols[i] for i in sorted(letters))


AlphabetLike = Union[Alphabet, str]


def as_alphabet(alphabet: AlphabetLike) -> Alphabet:
    return alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    alphabet: Alphabet
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sigma = self.alphabet.size
        for x in self.letters:
            if not 0 <= x < sigma:
                raise DomainError(f"letter index {x} outside alphabet {self.alphabet.symbols!r}")
        object.__setattr__(self, "_hash", hash((self.letters, self.alphabet.symbols)))

    def __hash__(self) -> int:
        return self._hash

    @classmethod
    def from_letters(cls, letters: Iterable[int], alphabet: AlphabetLike) -> "Word":
        return cls(tuple(letters), as_alphabet(alphabet))

    @classmethod
    def empty(cls, alphabet: AlphabetLike) -> "Word":
        return cls((), as_alphabet(alphabet))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item], self.alphabet)
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        if other.alphabet != self.alphabet:
            raise DomainError("cannot concatenate words over different alphabets")
        return Word(self.letters + other.letters, self.alphabet)

    def __mul__(self, n: int) -> "Word":
        return Word(self.letters * n, self.alphabet)

    def __str__(self) -> str:
        return "".join(self.alphabet.symbols[i] for i in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r}, alphabet={self.alphabet.symbols!r})"

    def render(self, epsilon: str = EPSILON_TEXT) -> str:
        """Text form with the empty word spelled as ``epsilon``."""
        return str(self) if self.letters else epsilon

    @property
    def sigma(self) -> int:
        return self.alphabet.size

    def symbol(self, i: int) -> str:
        return self.alphabet.symbols[self.letters[i]]


def parse_word(text: str, alphabet: AlphabetLike | None = None) -> Word:
    """Read ``text`` as a word.

    Without an alphabet the word lives over the sorted distinct characters of
    ``text``. The empty string over no alphabet is rejected since the
    alphabet would be empty.
    """
    if alphabet is None:
        if not text:
            raise ParseError("cannot infer an alphabet from the empty word")
        alphabet = Alphabet("".join(sorted(set(text))))
    else:
        alphabet = as_alphabet(alphabet)
    lookup = {ch: i for i, ch in enumerate(alphabet.symbols)}
    letters = []
    for pos, ch in enumerate(text):
        try:
            letters.append(lookup[ch])
        except KeyError:
            raise ParseError(
                f"character {ch!r} at position {pos} is not in alphabet {alphabet.symbols!r}"
            ) from None
    return Word(tuple(letters), alphabet)


def reverse(w: Word) -> Word:
    return Word(w.letters[::-1], w.alphabet)


def letters(w: Word) -> frozenset[int]:
    """Set of letter indices occurring in ``w``."""
    return frozenset(w.letters)


def letter_symbols(w: Word) -> str:
    """Distinct letters of ``w`` as a string in alphabet order."""
    return w.alphabet.render_set(set(w.letters))


def count_letter(w: Word, x: str | int) -> int:
    if isinstance(x, str):
        x = w.alphabet.index(x)
    return w.letters.count(x)


def project(w: Word, omega: Iterable[str | int]) -> Word:
    """Delete every letter outside ``omega``.

    The result lives over ``omega`` (kept in the order of the original
    alphabet), so indices are renumbered.
    """
    keep = w.alphabet.letter_set(omega)
    if not keep:
        raise DomainError("cannot project onto the empty letter set")
    ordered = sorted(keep)
    renumber = {old: new for new, old in enumerate(ordered)}
    sub = Alphabet("".join(w.alphabet.symbols[i] for i in ordered))
    return Word(tuple(renumber[x] for x in w.letters if x in keep), sub)


def restrict(w: Word, alphabet: AlphabetLike) -> Word:
    """Re-express ``w`` over another alphabet containing all its letters."""
    alphabet = as_alphabet(alphabet)
    return parse_word(str(w), alphabet)


def enumerate_words(alphabet: AlphabetLike, max_len: int) -> Iterator[Word]:
    """All words up to ``max_len`` in length-then-lexicographic order."""
    alphabet = as_alphabet(alphabet)
    for n in range(max_len + 1):
        for letters in itertools.product(range(alphabet.size), repeat=n):
            yield Word(letters, alphabet)
