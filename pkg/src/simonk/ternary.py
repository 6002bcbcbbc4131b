"""1-universal words over three letters.

For a ternary word with one arch, ``w = alpha_0 beta alpha_1``, the alphas use
at most two letters each and the beta factor is constrained by their
alphabets (nine cases up to renaming letters). Congruence of two such words
reduces to congruence of the alphas one level lower plus either a modus
permutation argument or equality of modi and a unary comparison of the
cores, at a level lowered by the arch structure of the alphas.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .binary import normal_form_binary, unary_equiv
from .factorization import (
    FactorizationError,
    _alpha_beta_spans,
    _arch_spans,
    _reverse_arch_spans,
)
from .spectra import spectrum_key
from .words import Alphabet, DomainError, Word, enumerate_words, project

FULL = frozenset((0, 1, 2))

# (|letters(alpha_0)|, |letters(alpha_1)|, overlap) -> (row id, letters(alpha_0),
# letters(alpha_1), beta pattern) written over the role letters a, b, c.
TERNARY_TABLE = (
    ("2,2:overlap", "ab", "ac", "ba*c"),
    ("2,2:equal", "ab", "ab", "c"),
    ("2,1:disjoint", "ab", "c", "(ab+|ba+)c"),
    ("2,1:overlap", "ab", "a", "ba*c"),
    ("2,0", "ab", "", "(ab+|ba+)c"),
    ("1,1:distinct", "a", "b", "ab+c|ac+b|ca+b"),
    ("1,1:equal", "a", "a", "ba*c"),
    ("1,0", "a", "", "ba*c|ab+c"),
    ("0,0", "", "", "ab+c"),
)


@dataclass(frozen=True)
class TernaryBetaCase:
    row: str
    sizes: tuple[int, int]
    pattern: str
    roles: str  # actual symbols playing a, b, c
    mirrored: bool  # classified on the reversed word

    def describe(self) -> str:
        mapping = ", ".join(f"{r}={s}" for r, s in zip("abc", self.roles))
        side = " (reversed word)" if self.mirrored else ""
        return f"{self.row}: beta in {self.pattern} with {mapping}{side}"


def _require_ternary_one_arch(w: Word):
    if w.sigma != 3:
        raise DomainError(f"expected a ternary alphabet, got {w.alphabet.symbols!r}")
    if len(_arch_spans(w.letters, FULL)) != 1:
        raise DomainError(f"{w} is not 1-universal")


def _split(letters: tuple[int, ...]):
    (a0, a1), (b,) = _alpha_beta_spans(letters, FULL)
    return letters[a0[0]:a0[1]], letters[b[0]:b[1]], letters[a1[0]:a1[1]]


def _row_for(s0: frozenset, s1: frozenset) -> int:
    n0, n1 = len(s0), len(s1)
    for idx, (_, r0, r1, _) in enumerate(TERNARY_TABLE):
        if (len(r0), len(r1)) != (n0, n1):
            continue
        common = len(set(r0) & set(r1))
        if n0 and n1 and common != len(s0 & s1):
            continue
        return idx
    raise FactorizationError(f"no table row for alpha alphabets of sizes {n0}, {n1}")


def classify_ternary_beta(w: Word) -> TernaryBetaCase:
    """Find the table row of a 1-universal ternary word and validate its beta."""
    _require_ternary_one_arch(w)
    letters = w.letters
    alpha0, beta, alpha1 = _split(letters)
    mirrored = len(set(alpha0)) < len(set(alpha1))
    if mirrored:
        alpha0, beta, alpha1 = alpha1[::-1], beta[::-1], alpha0[::-1]
    s0, s1 = frozenset(alpha0), frozenset(alpha1)
    idx = _row_for(s0, s1)
    row, r0, r1, pattern = TERNARY_TABLE[idx]
    regex = re.compile(pattern)
    for perm in itertools.permutations(range(3)):
        # perm[j] is the actual letter playing role "abc"[j]
        role = {perm[j]: "abc"[j] for j in range(3)}
        if {role[x] for x in s0} != set(r0) or {role[x] for x in s1} != set(r1):
            continue
        if regex.fullmatch("".join(role[x] for x in beta)):
            roles = "".join(w.alphabet.symbols[perm[j]] for j in range(3))
            return TernaryBetaCase(row, (len(r0), len(r1)), pattern, roles, mirrored)
    sym = w.alphabet.symbols
    raise FactorizationError(
        f"beta {''.join(sym[x] for x in beta)} of {w} does not match row {row} ({pattern})"
    )


@dataclass(frozen=True)
class CoreLevel:
    """Level discount ``c`` for comparing cores, and the core letter ``y``."""

    c: int
    y: str
    iota0: int
    iota1: int
    delta0: int
    delta1: int


def _iota_and_rest_letters(alpha: tuple[int, ...], omega: frozenset, from_left: bool):
    """Arches of ``alpha`` over the 2-letter set ``omega`` and the letters of its rest.

    ``from_left=False`` uses reverse arches and the reverse rest instead.
    """
    if len(set(alpha)) < 2:
        return 0, frozenset(alpha)
    if from_left:
        spans = _arch_spans(alpha, omega)
        rest = alpha[spans[-1][1]:] if spans else alpha
    else:
        spans = _reverse_arch_spans(alpha, omega)
        rest = alpha[: spans[0][0]] if spans else alpha
    return len(spans), frozenset(rest)


def _core_level(letters: tuple[int, ...], delta: str = "rest") -> tuple[int, int, int, int, int, int]:
    alpha0, beta, alpha1 = _split(letters)
    m, rm = beta[-1], beta[0]
    if m == rm:
        raise DomainError("modus equals reverse modus; the core is empty")
    (y,) = FULL - {m, rm}
    i0, rest0 = _iota_and_rest_letters(alpha0, FULL - {m}, True)
    i1, rest1 = _iota_and_rest_letters(alpha1, FULL - {rm}, False)
    if delta == "rest":
        d0, d1 = int(y in rest0), int(y in rest1)
    elif delta == "whole":
        d0, d1 = int(y in alpha0), int(y in alpha1)
    else:
        raise ValueError(f"unknown delta interpretation {delta!r}")
    return i0 + d0 + i1 + d1, y, i0, i1, d0, d1


def core_level(w: Word, delta: str = "rest") -> CoreLevel:
    """Level discount ``c = iota(a0) + [y in re(a0)] + iota(a1) + [y in er(a1)]``.

    ``alpha_0`` is factorized over the two letters other than the modus and
    ``alpha_1`` over the two letters other than the reverse modus; an alpha
    with fewer than two letters has no arches and is its own rest.
    ``delta="whole"`` replaces the rests by the whole alphas.
    """
    _require_ternary_one_arch(w)
    c, y, i0, i1, d0, d1 = _core_level(w.letters, delta)
    return CoreLevel(c, w.alphabet.symbols[y], i0, i1, d0, d1)


def _alpha_key(alpha: tuple[int, ...], level: int, alphabet: Alphabet):
    """Key with ``key(a) == key(b)`` iff ``a ~_level b`` (for ``level >= 1``)."""
    present = frozenset(alpha)
    if not present:
        return ()
    if len(present) == 1:
        (x,) = present
        return (x, min(len(alpha), level))
    w = project(Word(alpha, alphabet), present)
    return (present, normal_form_binary(w, level).letters)


@dataclass(frozen=True)
class TernaryProfile:
    """Everything :func:`equiv_ternary` looks at for one word at one level.

    Counts are capped at ``k`` so that words with the same profile are
    interchangeable for the relation.
    """

    k: int
    alpha_keys: tuple
    alpha_letters: tuple
    free_modus: bool  # some binary alpha has >= k-1 arches and avoids the other alpha
    modus: int
    reverse_modus: int
    c: int | None
    core_len: int


@lru_cache(maxsize=1 << 18)
def _ternary_profile(letters: tuple[int, ...], symbols: str, k: int, delta: str) -> TernaryProfile:
    alphabet = Alphabet(symbols)
    alpha0, beta, alpha1 = _split(letters)
    alphas = (alpha0, alpha1)
    keys = tuple(_alpha_key(a, k - 1, alphabet) for a in alphas)
    sets = tuple(frozenset(a) for a in alphas)
    free = False
    for i in (0, 1):
        if len(sets[i]) == 2 and not sets[i] & sets[1 - i]:
            if len(_arch_spans(alphas[i], sets[i])) >= k - 1:
                free = True
    m, rm = beta[-1], beta[0]
    c = None if m == rm else min(_core_level(letters, delta)[0], k)
    core_len = min(max(len(beta) - 2, 0), k)
    return TernaryProfile(k, keys, sets, free, m, rm, c, core_len)


def ternary_profile(w: Word, k: int, delta: str = "rest") -> TernaryProfile:
    _require_ternary_one_arch(w)
    if k < 2:
        raise DomainError(f"the ternary characterization needs k >= 2, got {k}")
    return _ternary_profile(w.letters, w.alphabet.symbols, k, delta)


def profiles_equiv(p: TernaryProfile, q: TernaryProfile) -> bool:
    """The ternary characterization evaluated on two profiles of the same level."""
    if p.k != q.k:
        raise DomainError("profiles of different levels")
    k = p.k
    if p.alpha_keys != q.alpha_keys:
        return False
    if p.free_modus:
        return True
    if p.modus != q.modus or p.reverse_modus != q.reverse_modus:
        return False
    if p.c is None:
        return True
    return unary_equiv(p.core_len, q.core_len, k - p.c)


def equiv_ternary(u: Word, v: Word, k: int, delta: str = "rest") -> bool:
    """Decide ``u ~_k v`` for 1-universal ternary words and ``k >= 2``."""
    if u.alphabet != v.alphabet:
        raise DomainError("words over different alphabets")
    return profiles_equiv(ternary_profile(u, k, delta), ternary_profile(v, k, delta))


def modus_letter_set(
    w: Word, k: int, bound: int | None = None, candidates: Iterable[Word] | None = None
) -> frozenset[str]:
    """First reverse-modus letters over words ``~_k``-congruent to ``w``.

    Searches all words up to length ``bound`` (default ``len(w) + k``) or the
    given candidates, so the result may miss letters realized only by longer
    words.
    """
    if len(_arch_spans(w.letters, frozenset(range(w.sigma)))) != 1:
        raise DomainError(f"{w} is not 1-universal")
    full = frozenset(range(w.sigma))
    target = spectrum_key(w.letters, k)
    if candidates is None:
        candidates = enumerate_words(w.alphabet, len(w) + k if bound is None else bound)
    found = {w.alphabet.symbols[w.letters[_reverse_arch_spans(w.letters, full)[0][0]]]}
    for x in candidates:
        if x.alphabet != w.alphabet:
            raise DomainError("candidate over a different alphabet")
        if spectrum_key(x.letters, k) != target:
            continue
        spans = _reverse_arch_spans(x.letters, full)
        if spans:
            found.add(w.alphabet.symbols[x.letters[spans[0][0]]])
    return frozenset(found)


def w_blocks_factorization(alpha0: Word, W: Iterable[str | int], k: int) -> list[Word] | None:
    """Cut ``alpha0`` into ``k - 1`` blocks each covering ``W``, if possible.

    Blocks are shortest prefixes containing every letter of ``W``; the last
    returned block absorbs everything after the first ``k - 2``.
    """
    need = alpha0.alphabet.letter_set(W)
    if len(need) < 2:
        raise DomainError("W needs at least two letters")
    if k < 2:
        raise DomainError(f"k must be at least 2, got {k}")
    cuts = [0]
    seen: set[int] = set()
    for i, x in enumerate(alpha0.letters):
        if x in need:
            seen.add(x)
            if seen == need:
                cuts.append(i + 1)
                seen = set()
    full_blocks = len(cuts) - 1
    if full_blocks < k - 1:
        return None
    blocks = [alpha0[cuts[i]:cuts[i + 1]] for i in range(k - 2)]
    blocks.append(alpha0[cuts[k - 2]:])
    return blocks
