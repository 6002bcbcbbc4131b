"""Arch factorization, reverse arches and the alpha-beta factorization.

An arch is a shortest prefix block containing every letter of the chosen
letter set; the factorization cuts arches greedily from the left and leaves a
rest. Doing the same on the reversed word gives the reverse arches. The
alpha-beta factorization overlays both: every arch is ``alpha_{i-1} beta_i``
and every reverse arch is ``beta_i alpha_i``.

Factorizations keep index spans into the original word next to the
materialized parts, so recomposition checks are exact.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .words import DomainError, Word, reverse

Span = tuple[int, int]


class FactorizationError(AssertionError):
    """Internal invariant of a factorization broken; indicates a bug."""


def _arch_spans(letters: tuple[int, ...], need: frozenset[int]) -> list[Span]:
    spans: list[Span] = []
    if not need:
        return spans
    start, seen = 0, set()
    for i, x in enumerate(letters):
        if x in need:
            seen.add(x)
            if len(seen) == len(need):
                spans.append((start, i + 1))
                start, seen = i + 1, set()
    return spans


def _resolve_omega(w: Word, omega) -> frozenset[int]:
    need = w.alphabet.letter_set(omega)
    extra = set(w.letters) - need
    if extra:
        raise DomainError(
            f"letter set {w.alphabet.render_set(need)!r} misses letters "
            f"{w.alphabet.render_set(extra)!r} of {w}"
        )
    return need


@dataclass(frozen=True)
class ArchFactorization:
    word: Word
    omega: frozenset[int]
    spans: tuple[Span, ...]

    @property
    def arches(self) -> list[Word]:
        return [self.word[a:b] for a, b in self.spans]

    @property
    def rest(self) -> Word:
        return self.word[self.spans[-1][1]:] if self.spans else self.word

    @property
    def modus(self) -> Word:
        return Word(tuple(self.word.letters[b - 1] for _, b in self.spans), self.word.alphabet)

    @property
    def universality(self) -> int:
        return len(self.spans)

    def render(self) -> str:
        body = "".join(f"({a})" for a in self.arches)
        return f"{body}·{self.rest.render()}" if body else self.rest.render()


def arch_factorization(w: Word, omega: Iterable[str | int] | None = None) -> ArchFactorization:
    need = _resolve_omega(w, omega)
    return ArchFactorization(w, need, tuple(_arch_spans(w.letters, need)))


@dataclass(frozen=True)
class ReverseArchFactorization:
    word: Word
    omega: frozenset[int]
    spans: tuple[Span, ...]  # spans of ra_1 .. ra_m in the original word

    @property
    def reverse_arches(self) -> list[Word]:
        return [self.word[a:b] for a, b in self.spans]

    @property
    def reverse_rest(self) -> Word:
        return self.word[: self.spans[0][0]] if self.spans else self.word

    @property
    def reverse_modus(self) -> Word:
        return Word(tuple(self.word.letters[a] for a, _ in self.spans), self.word.alphabet)


def _reverse_arch_spans(letters: tuple[int, ...], need: frozenset[int]) -> list[Span]:
    n = len(letters)
    rspans = _arch_spans(letters[::-1], need)
    return [(n - b, n - a) for a, b in reversed(rspans)]


def reverse_arch_factorization(
    w: Word, omega: Iterable[str | int] | None = None
) -> ReverseArchFactorization:
    need = _resolve_omega(w, omega)
    return ReverseArchFactorization(w, need, tuple(_reverse_arch_spans(w.letters, need)))


@dataclass(frozen=True)
class AlphaBetaFactorization:
    """``w = alpha_0 beta_1 alpha_1 ... beta_m alpha_m``.

    ``alpha_spans`` has ``m + 1`` entries and ``beta_spans`` has ``m``.
    """

    word: Word
    omega: frozenset[int]
    alpha_spans: tuple[Span, ...]
    beta_spans: tuple[Span, ...]

    @property
    def m(self) -> int:
        return len(self.beta_spans)

    @property
    def alphas(self) -> list[Word]:
        return [self.word[a:b] for a, b in self.alpha_spans]

    @property
    def betas(self) -> list[Word]:
        return [self.word[a:b] for a, b in self.beta_spans]

    def alpha(self, i: int) -> Word:
        a, b = self.alpha_spans[i]
        return self.word[a:b]

    def beta(self, i: int) -> Word:
        """``beta_i`` with the 1-based index used for betas."""
        if not 1 <= i <= self.m:
            raise DomainError(f"beta index {i} outside 1..{self.m}")
        a, b = self.beta_spans[i - 1]
        return self.word[a:b]

    @property
    def modus(self) -> Word:
        return Word(tuple(self.word.letters[b - 1] for _, b in self.beta_spans), self.word.alphabet)

    @property
    def reverse_modus(self) -> Word:
        return Word(tuple(self.word.letters[a] for a, _ in self.beta_spans), self.word.alphabet)

    @property
    def cores(self) -> list[Word]:
        return [core(self, i) for i in range(1, self.m + 1)]

    @property
    def arches(self) -> list[Word]:
        return [self.word[self.alpha_spans[i][0]: self.beta_spans[i][1]] for i in range(self.m)]

    @property
    def reverse_arches(self) -> list[Word]:
        return [self.word[self.beta_spans[i][0]: self.alpha_spans[i + 1][1]] for i in range(self.m)]

    def parts(self) -> list[Word]:
        """Alternating ``alpha_0, beta_1, alpha_1, ...``."""
        out = [self.alpha(0)]
        for i in range(1, self.m + 1):
            out += [self.beta(i), self.alpha(i)]
        return out

    def to_dict(self) -> dict:
        af = ArchFactorization(self.word, self.omega, tuple(
            (self.alpha_spans[i][0], self.beta_spans[i][1]) for i in range(self.m)
        ))
        return {
            "word": self.word.render(),
            "alphabet": self.word.alphabet.symbols,
            "omega": self.word.alphabet.render_set(self.omega),
            "universality": self.m,
            "arches": [a.render() for a in self.arches],
            "rest": self.alpha(self.m).render(),
            "arch_factorization": af.render(),
            "reverse_arches": [a.render() for a in self.reverse_arches],
            "reverse_rest": self.alpha(0).render(),
            "alphas": [a.render() for a in self.alphas],
            "betas": [b.render() for b in self.betas],
            "modus": self.modus.render(),
            "reverse_modus": self.reverse_modus.render(),
            "cores": [c.render() for c in self.cores],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@lru_cache(maxsize=1 << 17)
def _alpha_beta_spans(letters: tuple[int, ...], need: frozenset[int]):
    arches = _arch_spans(letters, need)
    rarches = _reverse_arch_spans(letters, need)
    if len(arches) != len(rarches):
        raise FactorizationError(f"{len(arches)} arches but {len(rarches)} reverse arches")
    n = len(letters)
    alphas, betas = [], []
    prev_end = 0
    for (s, e), (rs, re) in zip(arches, rarches):
        if not s <= rs < e or re < e:
            raise FactorizationError(
                f"reverse arch {rs}:{re} does not start inside arch {s}:{e}"
            )
        alphas.append((prev_end, rs))
        betas.append((rs, e))
        prev_end = e
    alphas.append((prev_end, n))
    for i, (a, b) in enumerate(alphas):
        if need and need <= set(letters[a:b]):
            raise FactorizationError(f"alpha_{i} contains every letter")
    return tuple(alphas), tuple(betas)


def alpha_beta(w: Word, omega: Iterable[str | int] | None = None) -> AlphaBetaFactorization:
    need = _resolve_omega(w, omega)
    alphas, betas = _alpha_beta_spans(w.letters, need)
    return AlphaBetaFactorization(w, need, alphas, betas)


def core(f: AlphaBetaFactorization, i: int) -> Word:
    """``beta_i`` without its first and last letter; empty when ``|beta_i| <= 2``."""
    b = f.beta(i)
    return b[1:-1] if len(b) > 2 else b[:0]


def mirror(f: AlphaBetaFactorization) -> AlphaBetaFactorization:
    """The factorization of the reversed word obtained by mirroring spans."""
    n = len(f.word)
    flip = lambda span: (n - span[1], n - span[0])  # noqa: E731
    return AlphaBetaFactorization(
        reverse(f.word),
        f.omega,
        tuple(flip(s) for s in reversed(f.alpha_spans)),
        tuple(flip(s) for s in reversed(f.beta_spans)),
    )
