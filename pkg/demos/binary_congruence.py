"""
Deciding Simon's congruence over two letters
============================================

Over a binary alphabet two words are k-congruent iff they have the same
number of arches m (or both at least k), the same beta factors, and alphas of
the same letters whose lengths agree once capped at k - m.
"""

from simonk import (
    equiv_binary,
    is_singleton,
    maxsimk_binary,
    maxsimk_oracle,
    normal_form_binary,
    parse_word,
    simk_oracle,
    singleton_witness,
)

u, v = parse_word("bab"), parse_word("bbabb")
for k in range(1, 5):
    print(k, equiv_binary(u, v, k), simk_oracle(u, v, k))

# largest level of congruence, linear time against brute force
print(maxsimk_binary(u, v), maxsimk_oracle(u, v))

# bbabb is alone in its 4-class; bab is not alone in its 2-class
print(is_singleton(parse_word("bbabb"), 4))
print(is_singleton(u, 2), singleton_witness(u, 2))

# a canonical representative per class
for text in ("bbbabbb", "babbb", "bab"):
    print(text, "->", normal_form_binary(parse_word(text, "ab"), 2))
