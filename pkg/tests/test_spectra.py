import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from simonk import (
    INFINITE,
    DomainError,
    Spectrum,
    can_drop_letter,
    can_drop_suffix,
    enumerate_words,
    is_scattered_factor,
    maxsimk_oracle,
    parse_word,
    reverse,
    simk_oracle,
    spectrum_upto,
    universality_index,
)
from simonk.spectra import iter_layers, spectrum_key

from conftest import W

binary_words = st.text(alphabet="ab", max_size=10).map(lambda t: W(t or "-"))


def test_scattered_factor_examples():
    agenda = parse_word("agenda")
    assert is_scattered_factor(parse_word("and", agenda.alphabet), agenda)
    assert not is_scattered_factor(parse_word("nada", agenda.alphabet), agenda)
    assert is_scattered_factor(parse_word("", agenda.alphabet), agenda)


def test_spectrum_layer_of_bbabb():
    s = spectrum_upto(W("bbabb"), 4)
    assert sorted(w.render() for w in s.layer(4)) == ["babb", "bbab", "bbbb"]


def test_spectrum_small_cases():
    assert spectrum_upto(W("-"), 3).render() == ["-"]
    assert spectrum_upto(W("ab"), 2).render() == ["-", "a", "b", "ab"]
    assert spectrum_upto(W("abab"), 0).render() == ["-"]


def test_spectrum_text_round_trip():
    s = spectrum_upto(W("abba"), 3)
    text = s.to_text()
    assert text.splitlines()[0] == "-"
    assert Spectrum.from_text(text, 3, s.alphabet) == s
    assert s.to_json().startswith('["-", "a", "b"')


def brute_subsequences(text, k):
    out = set()
    for n in range(k + 1):
        for idx in itertools.combinations(range(len(text)), n):
            out.add("".join(text[i] for i in idx))
    return out


@given(st.text(alphabet="abc", max_size=9), st.integers(0, 4))
def test_spectrum_matches_combinations(text, k):
    w = parse_word(text, "abc")
    got = {x.render("") for x in spectrum_upto(w, k).words()}
    assert got == brute_subsequences(text, k)


@given(st.text(alphabet="abc", max_size=8), st.integers(0, 4))
def test_spectrum_downward_closed_and_contains_empty(text, k):
    s = spectrum_upto(parse_word(text, "abc"), k)
    factors = set(s.factors)
    assert () in factors
    for f in factors:
        for i in range(len(f)):
            assert f[:i] + f[i + 1:] in factors


@given(st.text(alphabet="abc", max_size=9), st.integers(0, 4))
def test_spectrum_reversal_symmetry(text, k):
    w = parse_word(text, "abc")
    rev = {f[::-1] for f in spectrum_key(w.letters, k)}
    assert rev == spectrum_key(reverse(w).letters, k)
    assert universality_index(reverse(w)) == universality_index(w)


def test_simk_examples():
    u, v = W("abaaba"), W("baab")
    assert simk_oracle(u, v, 2)
    assert not simk_oracle(u, v, 3)
    assert simk_oracle(u, u, 7)
    assert simk_oracle(u, v, 0)


def test_simk_alphabet_mismatch():
    with pytest.raises(DomainError):
        simk_oracle(parse_word("ab", "ab"), parse_word("ab", "abc"), 1)


def test_universality_examples():
    assert universality_index(parse_word("alfalfa"), "alf") == 2
    assert universality_index(W("-")) == 0
    assert universality_index(parse_word("abaccaabca")) == 2
    assert universality_index(parse_word("aab", "abc")) == 0


def test_maxsimk_oracle_examples():
    assert maxsimk_oracle(W("abaaba"), W("baab")) == 2
    assert maxsimk_oracle(W("bab"), W("bab")) == INFINITE
    assert maxsimk_oracle(W("ab"), W("abab")) == 1
    assert maxsimk_oracle(W("-"), W("a")) == 0


def test_iter_layers_ends_at_word_length():
    layers = list(iter_layers((0, 1, 0)))
    assert [len(l) for l in layers] == [1, 2, 3, 1]


def test_sequence_of_relations_refines():
    words = list(enumerate_words("ab", 6))
    for k in range(4):
        for u, v in itertools.combinations(words[::7], 2):
            if simk_oracle(u, v, k + 1):
                assert simk_oracle(u, v, k)


def test_distinct_words_split_at_their_length():
    words = list(enumerate_words("abc", 4))
    for u, v in itertools.combinations(words, 2):
        assert not simk_oracle(u, v, max(len(u), len(v)))


def test_arch_count_remark():
    words = list(enumerate_words("ab", 7))
    rng = random.Random(1)
    for _ in range(3000):
        u, v = rng.choice(words), rng.choice(words)
        for k in range(1, 4):
            if simk_oracle(u, v, k):
                iu, iv = universality_index(u), universality_index(v)
                assert (iu >= k and iv >= k) or iu == iv


def test_can_drop_suffix_examples():
    for k in range(1, 4):
        assert can_drop_suffix(W("ab" * k), W("bba"), k)
    assert not can_drop_suffix(W("a"), W("b"), 1)
    assert can_drop_suffix(W("aba"), W("a"), 2)
    assert can_drop_suffix(W("ab"), W("-"), 5)
    with pytest.raises(DomainError):
        can_drop_suffix(W("-"), W("a"), 1)


def test_can_drop_suffix_matches_oracle_exhaustively():
    us = [u for u in enumerate_words("ab", 6) if len(u)]
    vs = list(enumerate_words("ab", 3))
    for u in us:
        for v in vs:
            for k in range(0, 4):
                assert can_drop_suffix(u, v, k) == simk_oracle(u + v, u, k), (str(u), str(v), k)


def test_can_drop_suffix_ternary():
    us = [u for u in enumerate_words("abc", 5) if len(u)]
    vs = list(enumerate_words("abc", 2))
    for u in us:
        for v in vs:
            for k in (1, 2, 3):
                assert can_drop_suffix(u, v, k) == simk_oracle(u + v, u, k)


def test_can_drop_letter_examples():
    assert not can_drop_letter(W("-"), "a", W("-"), 1)
    assert can_drop_letter(W("aa"), "a", W("-"), 2)


def test_can_drop_letter_matches_oracle_exhaustively():
    small = list(enumerate_words("ab", 4))
    for u in small:
        for v in small:
            for x in (0, 1):
                xw = W("ab"[x])
                for k in range(0, 5):
                    assert can_drop_letter(u, x, v, k) == simk_oracle(u + xw + v, u + v, k)


@settings(max_examples=60)
@given(binary_words, binary_words, binary_words, st.integers(0, 3))
def test_extension_lemma(u, v, w, k):
    # pick a congruent partner for w by pumping its last letter when possible
    for tilde in (w + w[-1:], w + w[-1:] * 2, w):
        if simk_oracle(w, tilde, k):
            level = universality_index(u) + k + universality_index(v)
            assert simk_oracle(u + w + v, u + tilde + v, level)
