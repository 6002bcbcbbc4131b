import itertools

import pytest
from hypothesis import given, strategies as st

from simonk import (
    DomainError,
    alpha_beta,
    arch_factorization,
    core,
    enumerate_words,
    parse_word,
    reverse,
    reverse_arch_factorization,
    universality_index,
)
from simonk.factorization import _arch_spans, mirror

from conftest import W


def test_arch_factorization_examples():
    f = arch_factorization(parse_word("abaccaabca"))
    assert [str(a) for a in f.arches] == ["abac", "caab"]
    assert str(f.rest) == "ca"
    assert str(f.modus) == "cb"
    assert f.render() == "(abac)(caab)·ca"
    g = arch_factorization(parse_word("bakebananacake"))
    assert [str(a) for a in g.arches] == ["bakebananac"]
    assert str(g.rest) == "ake"
    e = arch_factorization(W("-"))
    assert e.arches == [] and e.rest.render() == "-"


def test_reverse_arches_examples():
    r = reverse_arch_factorization(parse_word("bakebananacake"))
    assert [str(a) for a in r.reverse_arches] == ["bananacake"]
    assert str(r.reverse_rest) == "bake"
    assert str(r.reverse_modus) == "b"
    u = reverse_arch_factorization(parse_word("aaa"))
    assert [str(a) for a in u.reverse_arches] == ["a", "a", "a"]
    assert u.reverse_rest.render() == "-"


def test_alpha_beta_examples():
    f = alpha_beta(parse_word("bakebananacake"))
    assert [str(a) for a in f.alphas] == ["bake", "ake"]
    assert [str(b) for b in f.betas] == ["bananac"]
    assert str(f.modus) == "c" and str(f.reverse_modus) == "b"
    assert str(core(f, 1)) == "anana"
    g = alpha_beta(W("bab"))
    assert [a.render() for a in g.alphas] == ["b", "b"] and [str(b) for b in g.betas] == ["a"]
    h = alpha_beta(W("ab"))
    assert [a.render() for a in h.alphas] == ["-", "-"] and [str(b) for b in h.betas] == ["ab"]


def test_core_short_and_long():
    assert core(alpha_beta(W("ab")), 1).render() == "-"
    assert core(alpha_beta(W("bab")), 1).render() == "-"
    assert str(core(alpha_beta(parse_word("abc")), 1)) == "b"
    with pytest.raises(DomainError):
        core(alpha_beta(W("ab")), 2)


def test_omega_must_cover_word():
    with pytest.raises(DomainError):
        arch_factorization(parse_word("abc"), "ab")


def test_to_dict_fields():
    d = alpha_beta(parse_word("abaccaabca")).to_dict()
    assert d["arch_factorization"] == "(abac)(caab)·ca"
    assert d["universality"] == 2
    assert d["alphas"][0] == "a" and d["rest"] == "ca"
    assert d["cores"] == ["a", "-"]


def check_invariants(w):
    f = alpha_beta(w)
    sigma = frozenset(range(w.sigma))
    # recomposition and the arch/reverse-arch overlays
    assert "".join(p.render("") for p in f.parts()) == str(w)
    assert [a.letters for a in f.arches] == [a.letters for a in arch_factorization(w).arches]
    assert [a.letters for a in f.reverse_arches] == [
        a.letters for a in reverse_arch_factorization(w).reverse_arches
    ]
    assert f.alpha(f.m).letters == arch_factorization(w).rest.letters
    assert f.alpha(0).letters == reverse_arch_factorization(w).reverse_rest.letters
    assert f.m == universality_index(w)
    for a in f.alphas:
        assert not sigma <= set(a.letters)
    for i, b in enumerate(f.betas):
        assert len(b) >= 1
        assert b[0] == f.reverse_modus[i] and b[-1] == f.modus[i]
        assert core(f, i + 1).letters == (b.letters[1:-1] if len(b) > 2 else ())
    for i in range(f.m):
        start_ar, end_ar = f.alpha_spans[i][0], f.beta_spans[i][1]
        assert start_ar <= f.beta_spans[i][0] < end_ar
    return f


@pytest.mark.parametrize("sigma,L", [(1, 8), (2, 11), (3, 7)])
def test_invariants_exhaustive(sigma, L):
    for w in enumerate_words("abc"[:sigma], L):
        check_invariants(w)


@given(st.text(alphabet="abcd", max_size=30))
def test_invariants_random(text):
    check_invariants(parse_word(text, "abcd"))


@given(st.text(alphabet="abc", max_size=20))
def test_mirror_symmetry(text):
    w = parse_word(text, "abc")
    assert alpha_beta(reverse(w)) == mirror(alpha_beta(w))


def test_alpha_factorization_independent_of_omega():
    for w in enumerate_words("abc", 8):
        f = alpha_beta(w)
        for a in f.alphas:
            present = set(a.letters)
            results = set()
            for omega in itertools.combinations(range(3), 2):
                if present <= set(omega):
                    results.add(tuple(_arch_spans(a.letters, frozenset(omega))))
            assert len(results) <= 1
