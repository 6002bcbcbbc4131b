"""Exhaustive ground truth and the verification suites built on it.

Every suite enumerates all words (or pairs) of a small domain, computes the
answer straight from spectra, and compares with the structural code. The
pair suites do not loop over pairs of words when the tested function only
looks at a finite profile: words are grouped by profile and by spectrum, and
the relation is compared on profile pairs. That is exhaustive over all word
pairs and keeps the suites within minutes on one core.
"""
from __future__ import annotations

import itertools
import json
import random
import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from . import binary, counting, ternary
from .factorization import _alpha_beta_spans, _arch_spans
from .spectra import INFINITE, iter_layers, maxsimk_oracle, simk_oracle, spectrum_key
from .words import Alphabet, AlphabetLike, Word, as_alphabet, enumerate_words

BINARY = Alphabet("ab")
TERNARY = Alphabet("abc")

__all__ = [
    "ClassPartition",
    "VerificationReport",
    "enumerate_words",
    "partition_classes",
    "sufficient_length",
    "perfect_sufficient_length",
    "verify_counting",
    "verify_perfect_universal",
    "verify_binary_characterization",
    "verify_maxsimk",
    "verify_ternary_characterization",
    "verify_reduction_to_one_arch",
    "verify_singleton",
    "modus_set_blocks_report",
]


@dataclass
class ClassPartition:
    k: int
    alphabet: Alphabet
    max_len: int
    classes: dict = field(default_factory=dict)  # spectrum key -> [(word, arches)]

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, w: Word) -> list:
        return self.classes[spectrum_key(w.letters, self.k)]

    def counts_by_arches(self) -> dict[int, int]:
        """Classes per arch number, with every ``m >= k`` folded into ``k``."""
        out: dict[int, int] = defaultdict(int)
        for members in self.classes.values():
            out[min(members[0][1], self.k)] += 1
        return dict(sorted(out.items()))

    def arch_count_violations(self) -> list:
        """Classes mixing different arch numbers below ``k``."""
        bad = []
        for members in self.classes.values():
            seen = {min(m, self.k) for _, m in members}
            if len(seen) > 1:
                bad.append(tuple(str(w) for w, _ in members[:4]))
        return bad


def partition_classes(alphabet: AlphabetLike, max_len: int, k: int) -> ClassPartition:
    alphabet = as_alphabet(alphabet)
    full = frozenset(range(alphabet.size))
    classes: dict = defaultdict(list)
    for w in enumerate_words(alphabet, max_len):
        classes[spectrum_key(w.letters, k)].append((w, len(_arch_spans(w.letters, full))))
    return ClassPartition(k, alphabet, max_len, dict(classes))


@dataclass
class VerificationReport:
    suite: str
    params: dict
    passed: bool = True
    counterexamples: list = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)
    max_counterexamples: int = 50

    def fail(self, example) -> None:
        self.passed = False
        if len(self.counterexamples) < self.max_counterexamples:
            self.counterexamples.append(example)

    def finish(self, started: float) -> "VerificationReport":
        self.elapsed = time.perf_counter() - started
        self.counterexamples.sort(key=repr)
        return self

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "elapsed_seconds": round(self.elapsed, 3),
            "details": self.details,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), default=str)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f", {len(self.counterexamples)} counterexample(s)" if not self.passed else ""
        return f"{self.suite}: {status} in {self.elapsed:.2f}s{extra}"


# --- counting ----------------------------------------------------------------


def sufficient_length(k: int) -> int:
    """Length up to which every binary ``~_k`` class has a member.

    A class with ``m < k`` arches has a member with alphas of length at most
    ``k - m`` and betas of length at most 2; the class of ``k``-universal
    words contains ``(ab)^k``.
    """
    return max([2 * k] + [(m + 1) * (k - m) + 2 * m for m in range(k)])


def perfect_sufficient_length(k: int) -> int:
    """Same bound for words with empty rest (the last alpha is empty)."""
    return max([2 * k] + [m * (k - m) + 2 * m for m in range(k)])


def verify_counting(k_max: int = 4, margin: int = 2) -> VerificationReport:
    """Class counts per arch number from a brute-force partition.

    Each level is partitioned at the sufficient length plus ``margin`` and
    again two letters longer; the counts must agree with each other and with
    the recurrence, and the index with :func:`counting.simon_index_binary`.
    """
    started = time.perf_counter()
    rep = VerificationReport("table1", {"k_max": k_max, "margin": margin})
    table = {}
    for k in range(1, k_max + 1):
        base = sufficient_length(k) + margin
        per_len = {}
        for L in (base, base + 2):
            part = partition_classes(BINARY, L, k)
            per_len[L] = part.counts_by_arches()
            for ex in part.arch_count_violations():
                rep.fail({"k": k, "mixed_arch_class": ex})
        got = per_len[base]
        if per_len[base + 2] != got:
            rep.fail({"k": k, "unstable": {str(L): c for L, c in per_len.items()}})
        for m in range(k + 1):
            expected = counting.classes_with_m_arches_rec(k, m)
            if got.get(m, 0) != expected:
                rep.fail({"k": k, "m": m, "got": got.get(m, 0), "expected": expected})
        index = sum(got.values())
        if index != counting.simon_index_binary(k):
            rep.fail({"k": k, "index": index, "expected": counting.simon_index_binary(k)})
        table[k] = {"max_len": base, "counts": got, "index": index}
    rep.details["table"] = table
    return rep.finish(started)


def verify_perfect_universal(k_max: int = 5, margin: int = 2) -> VerificationReport:
    """Classes of binary words with ``m`` arches and empty rest, against the counts.

    Only the rest is required to be empty; the reverse rest is free.
    """
    started = time.perf_counter()
    rep = VerificationReport("table2", {"k_max": k_max, "margin": margin})
    full = frozenset((0, 1))
    table = {}
    for k in range(2, k_max + 1):
        L = perfect_sufficient_length(k) + margin
        keys: dict[int, set] = defaultdict(set)
        for w in enumerate_words(BINARY, L):
            spans = _arch_spans(w.letters, full)
            m = len(spans)
            if m < k and (spans[-1][1] if spans else 0) == len(w):
                keys[m].add(spectrum_key(w.letters, k))
        row = {}
        for m in range(k):
            got, expected = len(keys[m]), counting.perfect_universal_counts(k, m)
            row[m] = got
            if got != expected:
                rep.fail({"k": k, "m": m, "got": got, "expected": expected})
        table[k] = {"max_len": L, "counts": row}
    rep.details["table"] = table
    return rep.finish(started)


# --- binary ------------------------------------------------------------------


def _interned_keys(words: list[Word], k: int) -> list[int]:
    ids: dict = {}
    return [ids.setdefault(spectrum_key(w.letters, k), len(ids)) for w in words]


def verify_binary_characterization(max_len: int = 10, k_max: int = 4) -> VerificationReport:
    """``equiv_binary`` against spectra on every ordered pair of binary words."""
    started = time.perf_counter()
    rep = VerificationReport("binary-char", {"max_len": max_len, "k_max": k_max})
    words = list(enumerate_words(BINARY, max_len))
    profiles = [binary._profile(w.letters) for w in words]
    equiv = binary._equiv_profiles
    checked = 0
    for k in range(1, k_max + 1):
        ids = _interned_keys(words, k)
        for i, (p, a) in enumerate(zip(profiles, ids)):
            for j, (q, b) in enumerate(zip(profiles, ids)):
                if equiv(p, q, k) != (a == b):
                    rep.fail({"u": str(words[i]), "v": str(words[j]), "k": k, "oracle": a == b})
        checked += len(words) ** 2
        # k = 0 is trivially total on both sides
    rep.details["pairs_checked"] = checked
    return rep.finish(started)


def _layer_ids(words: list[Word], depth: int) -> list[tuple[int, ...]]:
    ids: dict = {}
    out = []
    for w in words:
        row = []
        for j, layer in enumerate(iter_layers(w.letters)):
            if j > depth:
                break
            row.append(ids.setdefault(layer, len(ids)))
        out.append(tuple(row))
    return out


def _maxsimk_from_layers(a: tuple[int, ...], b: tuple[int, ...]) -> float | int:
    if a == b:
        return INFINITE
    for j, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return j - 1
    raise AssertionError("layer sequences differ only in depth")


def verify_maxsimk(
    max_len: int = 9, random_pairs: int = 10_000, random_len: int = 14, seed: int = 0
) -> VerificationReport:
    """Algorithm 1 against spectra: every pair up to ``max_len`` plus random longer pairs.

    Exhaustively each word is summarized by its scattered-factor layers of
    every length up to ``max_len`` (distinct words differ by then); the random
    pairs go through :func:`maxsimk_oracle` directly.
    """
    started = time.perf_counter()
    params = {"max_len": max_len, "random_pairs": random_pairs, "random_len": random_len, "seed": seed}
    rep = VerificationReport("maxsimk", params)
    words = list(enumerate_words(BINARY, max_len))
    layers = _layer_ids(words, max_len)
    # a missing layer (word too short) keeps the sequences comparable: pad with -1
    layers = [row + (-1,) * (max_len + 1 - len(row)) for row in layers]
    for i, u in enumerate(words):
        for j, v in enumerate(words):
            got = binary.maxsimk_binary(u, v)
            if i == j:
                expected = INFINITE
            else:
                expected = _maxsimk_from_layers(layers[i], layers[j])
            if got != expected:
                rep.fail({"u": str(u), "v": str(v), "got": got, "oracle": expected})
    rng = random.Random(seed)
    for _ in range(random_pairs):
        u = Word(tuple(rng.randrange(2) for _ in range(rng.randint(0, random_len))), BINARY)
        v = Word(tuple(rng.randrange(2) for _ in range(rng.randint(0, random_len))), BINARY)
        got, expected = binary.maxsimk_binary(u, v), maxsimk_oracle(u, v)
        if got != expected:
            rep.fail({"u": str(u), "v": str(v), "got": got, "oracle": expected})
    rep.details["exhaustive_pairs"] = len(words) ** 2
    return rep.finish(started)


def verify_singleton(max_len: int = 10, k_max: int = 4) -> VerificationReport:
    """The singleton predicate against class sizes in a longer partition.

    Non-singletons must come with a witness the oracle accepts.
    """
    started = time.perf_counter()
    rep = VerificationReport("singleton", {"max_len": max_len, "k_max": k_max})
    stats = {}
    for k in range(1, k_max + 1):
        part = partition_classes(BINARY, max_len + k, k)
        singles = 0
        for w in enumerate_words(BINARY, max_len):
            pred = binary.is_singleton(w, k)
            alone = len(part.class_of(w)) == 1
            if pred != alone:
                rep.fail({"w": str(w), "k": k, "predicate": pred, "class_size": len(part.class_of(w))})
            if pred:
                singles += 1
                continue
            x = binary.singleton_witness(w, k)
            if x == w or not simk_oracle(w, x, k):
                rep.fail({"w": str(w), "k": k, "bad_witness": str(x)})
        stats[k] = singles
    rep.details["singletons_per_k"] = stats
    return rep.finish(started)


# --- ternary -----------------------------------------------------------------


def one_universal(alphabet: Alphabet, max_len: int) -> Iterable[Word]:
    full = frozenset(range(alphabet.size))
    for w in enumerate_words(alphabet, max_len):
        if len(_arch_spans(w.letters, full)) == 1:
            yield w


def _compare_grouped(groups: dict, relation, rep: VerificationReport, label: dict, bucket=None) -> int:
    """Check ``relation`` on profile pairs against the spectrum keys behind them.

    A true verdict needs both groups to sit in one common class, a false one
    needs them to share no class. With ``bucket`` the relation is known to be
    false across buckets, so that half reduces to every class lying in a
    single bucket. Returns the number of profile pairs decided.
    """
    buckets: dict = defaultdict(list)
    owner: dict = {}
    for p, (keys, example) in groups.items():
        b = bucket(p) if bucket else None
        buckets[b].append(p)
        for key in keys:
            first = owner.setdefault(key, (b, example))
            if first[0] != b:
                rep.fail({**label, "u": first[1], "v": example, "verdict": False})
    decided = 0
    for members in buckets.values():
        for p, q in itertools.product(members, repeat=2):
            verdict = relation(p, q)
            kp, kq = groups[p][0], groups[q][0]
            ok = (len(kp) == 1 and kp == kq) if verdict else not (kp & kq)
            if not ok:
                rep.fail({**label, "u": groups[p][1], "v": groups[q][1], "verdict": verdict})
        decided += len(members) ** 2
    return decided


def verify_ternary_characterization(
    max_len: int = 9,
    k_set: Iterable[int] = (2, 3),
    classify_len: int = 12,
    delta: str = "rest",
    direct_len: int = 6,
) -> VerificationReport:
    """``equiv_ternary`` against spectra on all 1-universal ternary pairs.

    Words are grouped by their ternary profile, on which the relation
    depends exclusively; a smaller length is also checked pair by pair
    through the public function. Every 1-universal word up to
    ``classify_len`` must fit its row of the beta table.
    """
    started = time.perf_counter()
    k_set = tuple(k_set)
    params = {"max_len": max_len, "k_set": list(k_set), "classify_len": classify_len, "delta": delta}
    rep = VerificationReport("ternary-char", params)
    rows: dict[str, int] = defaultdict(int)
    for w in one_universal(TERNARY, classify_len):
        try:
            rows[ternary.classify_ternary_beta(w).row] += 1
        except AssertionError as e:
            rep.fail({"classify": str(w), "error": str(e)})
    rep.details["rows"] = dict(sorted(rows.items()))
    words = list(one_universal(TERNARY, max_len))
    small = [w for w in words if len(w) <= direct_len]
    pairs = {}
    for k in k_set:
        groups: dict = {}
        for w in words:
            prof = ternary._ternary_profile(w.letters, TERNARY.symbols, k, delta)
            entry = groups.setdefault(prof, (set(), str(w)))
            entry[0].add(spectrum_key(w.letters, k))
        pairs[k] = _compare_grouped(
            groups, ternary.profiles_equiv, rep, {"k": k}, bucket=lambda p: p.alpha_keys
        )
        for u, v in itertools.product(small, repeat=2):
            if ternary.equiv_ternary(u, v, k, delta) != simk_oracle(u, v, k):
                rep.fail({"k": k, "u": str(u), "v": str(v), "direct": True})
    rep.details["words"] = len(words)
    rep.details["profile_pairs"] = pairs
    return rep.finish(started)


def _triples(letters: tuple[int, ...], full: frozenset):
    alphas, betas = _alpha_beta_spans(letters, full)
    return tuple(
        letters[alphas[i][0]:alphas[i + 1][1]] for i in range(len(betas))
    )


def verify_reduction_to_one_arch(max_len: int = 10, delta: str = "rest") -> VerificationReport:
    """Congruence of ternary words with ``m >= 2`` arches from their 1-universal pieces.

    For ``k`` in ``{m + 1, m + 2}`` two words with ``m`` arches are
    ``k``-congruent iff every factor ``alpha_{i-1} beta_i alpha_i`` is
    ``(k - m + 1)``-congruent to its counterpart, the latter decided by
    ``equiv_ternary``.
    """
    started = time.perf_counter()
    rep = VerificationReport("ternary-reduction", {"max_len": max_len, "delta": delta})
    full = frozenset((0, 1, 2))
    by_m: dict[int, list] = defaultdict(list)
    for w in enumerate_words(TERNARY, max_len):
        m = len(_arch_spans(w.letters, full))
        if m >= 2:
            by_m[m].append(w)
    checked = {}
    for m, words in sorted(by_m.items()):
        for k in (m + 1, m + 2):
            level = k - m + 1
            groups: dict = {}
            for w in words:
                key = tuple(
                    ternary._ternary_profile(t, TERNARY.symbols, level, delta)
                    for t in _triples(w.letters, full)
                )
                entry = groups.setdefault(key, (set(), str(w)))
                entry[0].add(spectrum_key(w.letters, k))

            def relation(p, q):
                return all(ternary.profiles_equiv(x, y) for x, y in zip(p, q))

            checked[f"m={m},k={k}"] = _compare_grouped(
                groups, relation, rep, {"m": m, "k": k},
                bucket=lambda p: tuple(x.alpha_keys for x in p),
            )
    rep.details["profile_pairs"] = checked
    return rep.finish(started)


def modus_set_blocks_report(max_len: int = 9, k_max: int = 3, bound: int | None = None) -> VerificationReport:
    """Whenever a class shows two reverse-modus letters, ``alpha_0`` splits into W-blocks.

    The modus letter sets come from one partition of all ternary words up to
    ``bound`` (default ``max_len + k``), so they are under-approximations.
    """
    started = time.perf_counter()
    rep = VerificationReport("modus-set", {"max_len": max_len, "k_max": k_max})
    full = frozenset((0, 1, 2))
    counts = {}
    for k in range(2, k_max + 1):
        L = max_len + k if bound is None else bound
        W: dict = defaultdict(set)
        for w in one_universal(TERNARY, L):
            (a0, _), ((b0, _),) = _alpha_beta_spans(w.letters, full)
            W[spectrum_key(w.letters, k)].add(w.letters[b0])
        hits = 0
        for w in one_universal(TERNARY, max_len):
            letters_w = W[spectrum_key(w.letters, k)]
            if len(letters_w) < 2:
                continue
            hits += 1
            (a0, _), _ = _alpha_beta_spans(w.letters, full)
            alpha0 = w[a0[0]:a0[1]]
            if ternary.w_blocks_factorization(alpha0, letters_w, k) is None:
                rep.fail({"w": str(w), "k": k, "W": TERNARY.render_set(letters_w)})
        counts[k] = hits
    rep.details["words_with_two_modus_letters"] = counts
    return rep.finish(started)
