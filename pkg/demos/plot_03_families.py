"""
Structured families
===================

Intervals with one or two holes have sumset sizes given by closed forms.
Here each prediction is compared against the engine.
"""

from hfold import L2, L3, P1, P2, P3, P4, build, h_fold, predict_cardinality
from hfold.verify import family_sweep

k = 7
for f in (P1(k, 1), P1(k, 3), P2(k, 3), P3(k, 2), P4(k, 1, 5), P4(k, 2, 6)):
    S = build(f)
    print(f, S.tolist(), [(predict_cardinality(f, h), h_fold(S, h).cardinality)
                          for h in (2, 3, 4)])

# with one or two early holes the sumset fills a whole interval
print(h_fold(build(L2(3, 9)), 2).elements.tolist())
print(h_fold(build(L3(3, 9)), 3).cardinality, 3 * 9 + 1)

rep = family_sweep(5, 12, k_min=4)
print(rep.total_sets, "families checked,", rep.failure_count, "failures")
