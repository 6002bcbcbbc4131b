"""
Counting binary congruence classes
==================================

The classes with m < k arches are counted by powers of a 3x3 transfer matrix,
or equivalently by a recurrence along the diagonals k - m = const. The total
gives the index of the congruence over two letters.
"""

from simonk import (
    classes_with_m_arches_matrix,
    classes_with_m_arches_rec,
    lucas_u,
    perfect_universal_counts,
    simon_index_binary,
)
from simonk.counting import index_table

for k, row in index_table(7).items():
    print(k, " ".join(f"{row[m]:>6}" for m in range(k + 1)))

print([simon_index_binary(k) for k in range(12)])
print(simon_index_binary(16))

# two ways to the same number
print(classes_with_m_arches_matrix(7, 4), classes_with_m_arches_rec(7, 4))

# perfect universal words (empty rest) follow Lucas sequences along diagonals
d = 2
print([perfect_universal_counts(m + d, m) for m in range(8)])
print([lucas_u(2 * d + 2, 2 * d, m + 1) for m in range(8)])
