"""
Arches, reverse arches and the alpha-beta factorization
=======================================================

A word is cut greedily into arches: shortest blocks that contain every letter.
Doing the same from the right gives the reverse arches, and overlaying both
splits the word into alternating alpha and beta factors.
"""

from simonk import alpha_beta, arch_factorization, parse_word, universality_index

w = parse_word("abaccaabca")
print(arch_factorization(w).render())          # (abac)(caab)·ca
print("universality:", universality_index(w))

# the running example: one arch, the beta factor sits where arch and reverse arch overlap
w = parse_word("bakebananacake")
f = alpha_beta(w)
print([str(a) for a in f.alphas], [str(b) for b in f.betas])
print("modus", f.modus, "reverse modus", f.reverse_modus, "core", f.cores[0])

# the alphabet is part of the word: "aab" over {a, b, c} has no arch at all
print(universality_index(parse_word("aab", "abc")))

# everything is available as JSON as well
print(f.to_json())
