"""Simon's congruence on binary words.

Over two letters every beta factor is ``a``, ``b``, ``ab`` or ``ba`` and every
alpha factor is unary, so two words with the same number ``m < k`` of arches
are ``k``-congruent iff their betas coincide and each pair of alphas is
``(k - m)``-congruent as unary words. Everything in this module is linear in
the word length.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .factorization import FactorizationError, _alpha_beta_spans
from .spectra import INFINITE
from .words import DomainError, Word


def unary_equiv(p: int, q: int, level: int) -> bool:
    """``x^p ~_level x^q`` iff ``min(p, level) == min(q, level)``."""
    if level <= 0:
        return True
    return min(p, level) == min(q, level)


@dataclass(frozen=True)
class BinaryAbaCase:
    """Shape of ``beta_i`` and the letter classes of its neighbouring alphas.

    ``kind`` is ``"single"`` for ``beta = x`` (both alphas in ``x̄^+``) and
    ``"pair"`` for ``beta = x x̄`` (preceding alpha in ``x^*``, succeeding
    alpha in ``x̄^*``).
    """

    kind: str
    x: str
    beta: str
    before: str  # regex for alpha_{i-1}
    after: str  # regex for alpha_i


@dataclass(frozen=True)
class _Profile:
    m: int
    present: frozenset
    betas: tuple
    alphas: tuple  # (letter or None, length)


def _require_binary(w: Word):
    if w.sigma != 2:
        raise DomainError(f"expected a word over a binary alphabet, got {w.alphabet.symbols!r}")


@lru_cache(maxsize=1 << 17)
def _profile(letters: tuple[int, ...]) -> _Profile:
    alpha_spans, beta_spans = _alpha_beta_spans(letters, frozenset((0, 1)))
    alphas = tuple(
        (letters[a] if b > a else None, b - a) for a, b in alpha_spans
    )
    betas = tuple(letters[a:b] for a, b in beta_spans)
    return _Profile(len(beta_spans), frozenset(letters), betas, alphas)


def binary_profile(w: Word) -> _Profile:
    _require_binary(w)
    return _profile(w.letters)


def classify_binary_aba(w: Word, i: int) -> BinaryAbaCase:
    """Identify the case of ``beta_i`` and check its neighbouring alphas."""
    _require_binary(w)
    p = _profile(w.letters)
    if not 1 <= i <= p.m:
        raise DomainError(f"beta index {i} outside 1..{p.m}")
    beta = p.betas[i - 1]
    before, after = p.alphas[i - 1], p.alphas[i]
    sym = w.alphabet.symbols
    x = beta[0]
    xbar = 1 - x
    if len(beta) == 1:
        if before[0] != xbar or after[0] != xbar:
            raise FactorizationError(f"beta_{i} = {sym[x]} needs alphas in {sym[xbar]}+ in {w}")
        return BinaryAbaCase("single", sym[x], sym[x], f"{sym[xbar]}+", f"{sym[xbar]}+")
    if len(beta) == 2 and beta[1] == xbar:
        if before[1] and before[0] != x or after[1] and after[0] != xbar:
            raise FactorizationError(
                f"beta_{i} = {sym[x]}{sym[xbar]} has alphas of the wrong letter in {w}"
            )
        return BinaryAbaCase("pair", sym[x], sym[x] + sym[xbar], f"{sym[x]}*", f"{sym[xbar]}*")
    raise FactorizationError(f"beta_{i} of {w} is not one of a, b, ab, ba")


def _equiv_profiles(p: _Profile, q: _Profile, k: int) -> bool:
    if p.m >= k and q.m >= k:
        return True
    if p.m != q.m:
        return False
    level = k - p.m
    for (x, n), (y, l) in zip(p.alphas, q.alphas):
        if x != y or not unary_equiv(n, l, level):
            return False
    if p.betas != q.betas:
        return False
    # equal betas force equal modi
    assert [b[-1] for b in p.betas] == [b[-1] for b in q.betas]
    return True


def equiv_binary(u: Word, v: Word, k: int) -> bool:
    """Decide ``u ~_k v`` for binary words from their alpha-beta factorizations."""
    _require_binary(u)
    _require_binary(v)
    if u.alphabet != v.alphabet:
        raise DomainError("words over different alphabets")
    if k <= 0:
        return True
    return _equiv_profiles(_profile(u.letters), _profile(v.letters), k)


def maxsimk_binary(u: Word, v: Word) -> float | int:
    """Largest ``k`` with ``u ~_k v``, or ``INFINITE`` when ``u == v``."""
    _require_binary(u)
    _require_binary(v)
    if u.letters == v.letters:
        return INFINITE
    p, q = _profile(u.letters), _profile(v.letters)
    if p.m != q.m or p.present != q.present:
        return min(p.m, q.m)
    if p.betas == q.betas:
        e = min(
            INFINITE if n == l else min(n, l)
            for (_, n), (_, l) in zip(p.alphas, q.alphas)
        )
        return p.m + e
    return p.m


def is_singleton(w: Word, k: int) -> bool:
    """True iff ``w`` is the only word in its ``~_k`` class."""
    _require_binary(w)
    p = _profile(w.letters)
    return p.m < k and all(n < k - p.m for _, n in p.alphas)


def singleton_witness(w: Word, k: int) -> Word:
    """A word different from ``w`` in the same ``~_k`` class.

    With ``k`` or more arches any appended letter works; otherwise some alpha
    is long enough to be doubled (the last such alpha is used).
    """
    _require_binary(w)
    p = _profile(w.letters)
    if p.m >= k:
        return Word(w.letters + (0,), w.alphabet)
    spans = _alpha_beta_spans(w.letters, frozenset((0, 1)))[0]
    for i in range(p.m, -1, -1):
        a, b = spans[i]
        if b - a >= k - p.m:
            return Word(w.letters[:b] + w.letters[a:b] + w.letters[b:], w.alphabet)
    raise DomainError(f"{w} is alone in its ~_{k} class")


def normal_form_binary(w: Word, k: int) -> Word:
    """Canonical representative: ``u ~_k v`` iff their normal forms agree.

    Words with ``k`` or more arches map to ``(x x̄)^k``; otherwise every alpha
    is cut down to length ``k - m``.
    """
    _require_binary(w)
    p = _profile(w.letters)
    if p.m >= k:
        return Word((0, 1) * k, w.alphabet)
    cap = k - p.m
    out: list[int] = []
    for i, (x, n) in enumerate(p.alphas):
        if i:
            out.extend(p.betas[i - 1])
        if x is not None:
            out.extend([x] * min(n, cap))
    return Word(tuple(out), w.alphabet)
