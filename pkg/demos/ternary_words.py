"""
One arch over three letters
===========================

A 1-universal ternary word is alpha_0 beta alpha_1 where each alpha misses a
letter. The beta factor falls into one of nine shapes, and congruence reduces
to the alphas one level lower plus either a free modus or matching modi with
unary cores compared at a reduced level.
"""

from simonk import classify_ternary_beta, core_level, equiv_ternary, parse_word, simk_oracle

for text in ("abbc", "abcab", "abbaca", "ababaac", "cabab"):
    print(text, classify_ternary_beta(parse_word(text, "abc")).describe())

# the level discount for the core comes from arches inside the alphas
w = parse_word("ababaac")
print(core_level(w))

u, v = parse_word("01112"), parse_word("011112", "012")
print(equiv_ternary(u, v, 3), simk_oracle(u, v, 3))

# counting the letter y anywhere in alpha_0 (rather than in its rest) gives wrong answers
u, v = parse_word("ababc"), parse_word("ababbc", "abc")
print(simk_oracle(u, v, 3), equiv_ternary(u, v, 3), equiv_ternary(u, v, 3, delta="whole"))
