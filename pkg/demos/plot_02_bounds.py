"""
Lower bounds on |hA|
====================

An arithmetic progression has the smallest possible h-fold sumset,
hk - h + 1 elements. Sets with more spread can only do worse, and the
step bound tracks how much |hA| must grow from |(h-1)A|.
"""

import numpy as np

from hfold import (
    freiman_2a_bound,
    h_fold_cardinality,
    lev_chain_bound,
    lev_step_bound,
    make_set,
    theorem_a_bound,
    theorem_d_check,
)

A = make_set([0, 1, 2, 3, 7])
k = A.k
cards = [h_fold_cardinality(A, h) for h in range(1, 6)]
print("|hA| for h=1..5:", cards)
print("minimum possible:", [k] + [theorem_a_bound(h, k) for h in range(2, 6)])

print("|2A| =", cards[1], ">=", freiman_2a_bound(A))
for h in range(2, 6):
    print(h, cards[h - 1], lev_step_bound(A, h, cards[h - 2]), lev_chain_bound(A, h))

# small doubling forces A into a short progression
print(theorem_d_check(A))

# growth of |hA| is eventually linear in h with slope max(A)
print(np.diff(cards))
