import pytest
from hypothesis import assume, given, strategies as st

from simonk import (
    Alphabet,
    DomainError,
    ParseError,
    Word,
    count_letter,
    enumerate_words,
    letters,
    parse_word,
    project,
    reverse,
)
from simonk.words import letter_symbols, restrict

words3 = st.text(alphabet="abc", max_size=20)


def test_parse_infers_sorted_alphabet():
    w = parse_word("abaccaabca")
    assert w.alphabet.symbols == "abc"
    assert len(w) == 10
    assert str(w) == "abaccaabca"


def test_parse_empty_over_given_alphabet():
    w = parse_word("", "ab")
    assert len(w) == 0
    assert w.render() == "-"
    assert w.sigma == 2


def test_alphabet_can_exceed_letters():
    w = parse_word("aab", "abc")
    assert w.sigma == 3
    assert letter_symbols(w) == "ab"


def test_parse_error_names_character_and_position():
    with pytest.raises(ParseError, match=r"'x' at position 2"):
        parse_word("abxb", "ab")


def test_empty_text_without_alphabet_rejected():
    with pytest.raises(ParseError):
        parse_word("")


@pytest.mark.parametrize("symbols", ["", "aa", "a b", "abcdefghijklmnopqrstuvwxyz0"])
def test_bad_alphabets(symbols):
    with pytest.raises(DomainError):
        Alphabet(symbols)


def test_reverse():
    assert str(reverse(parse_word("abc"))) == "cba"
    eps = parse_word("", "ab")
    assert reverse(eps) == eps


@given(words3)
def test_reverse_involution(text):
    w = parse_word(text, "abc")
    assert reverse(reverse(w)) == w


def test_project_examples():
    assert str(project(parse_word("abacbc"), "ab")) == "abab"
    assert str(project(parse_word("bananac", "abcn"), "an")) == "anana"
    w = parse_word("abacbc")
    assert str(project(w, letters(w))) == str(w)


def test_project_outside_alphabet():
    with pytest.raises(DomainError):
        project(parse_word("ab"), "az")
    with pytest.raises(DomainError):
        project(parse_word("ab"), "")


@given(words3, st.sets(st.sampled_from("abc"), min_size=1), st.sets(st.sampled_from("abc"), min_size=1))
def test_project_composes(text, o1, o2):
    assume(o1 & o2)
    w = parse_word(text, "abc")
    assert str(project(project(w, o1), o1 & o2)) == str(project(w, o1 & o2))


@given(words3)
def test_letter_counts_partition_length(text):
    w = parse_word(text, "abc")
    assert sum(count_letter(w, x) for x in "abc") == len(w)
    assert letters(w) == frozenset(w.letters)


def test_count_letter_empty():
    assert count_letter(parse_word("", "ab"), "a") == 0


@given(words3)
def test_render_parse_round_trip(text):
    w = parse_word(text, "abc")
    assert parse_word(str(w), "abc") == w


def test_concatenation_and_slicing():
    u, v = parse_word("ab", "ab"), parse_word("ba", "ab")
    assert str(u + v) == "abba"
    assert str((u + v)[1:3]) == "bb"
    assert (u + v)[0] == 0
    with pytest.raises(DomainError):
        u + parse_word("ab", "abc")


def test_restrict_changes_alphabet():
    w = restrict(parse_word("ab"), "abc")
    assert w.sigma == 3 and str(w) == "ab"


def test_words_are_hashable_values():
    assert {parse_word("ab"), parse_word("ab")} == {parse_word("ab")}
    assert parse_word("ab", "ab") != parse_word("ab", "abc")


@pytest.mark.parametrize("sigma,L", [(1, 3), (2, 2), (2, 5), (3, 4)])
def test_enumerate_words_count_and_order(sigma, L):
    alphabet = Alphabet("abc"[:sigma])
    ws = list(enumerate_words(alphabet, L))
    assert len(ws) == sum(sigma**n for n in range(L + 1))
    keys = [(len(w), w.letters) for w in ws]
    assert keys == sorted(keys)
    assert len(set(ws)) == len(ws)


def test_enumerate_small_listing():
    assert [w.render() for w in enumerate_words("ab", 2)] == ["-", "a", "b", "aa", "ab", "ba", "bb"]


def test_word_rejects_bad_index():
    with pytest.raises(DomainError):
        Word((0, 2), Alphabet("ab"))
