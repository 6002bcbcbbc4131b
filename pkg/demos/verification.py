"""
Checking the structure theory against brute force
=================================================

Each suite enumerates a small domain exhaustively and compares the
structural answers with spectra computed from the definition.
"""

from simonk import oracle

part = oracle.partition_classes("ab", 6, 2)
print(len(part), "classes of ~_2 among binary words up to length 6")
print(part.counts_by_arches())

for report in (
    oracle.verify_counting(k_max=3),
    oracle.verify_binary_characterization(max_len=7, k_max=3),
    oracle.verify_singleton(max_len=7, k_max=3),
    oracle.verify_ternary_characterization(max_len=7, k_set=(2, 3), classify_len=8),
):
    print(report.summary())

print(oracle.verify_perfect_universal(k_max=4).to_json())
