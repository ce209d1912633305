"""
Inverse classification
======================

Knowing only |A| = k and |hA| pins down the shape of A when |hA| is close
to its minimum. Some values in that window are never attained at all.
"""

from hfold import classify_by_cardinality, consistency_check, make_set

h, k = 3, 5
for card in range(h * k - h + 1, h * k + 2 * h - 2):
    pred = classify_by_cardinality(h, k, card)
    print(card, pred.status.value, [s.to_dict() for s in pred.structures])

# h = 2 has extra achievers of 2k+1, reported with a caveat
pred = classify_by_cardinality(2, 6, 13)
print(len(pred.structures), pred.caveats)

# one concrete set checked against its prediction
rec = consistency_check(make_set([10, 12, 18, 20, 22]), 3)
print(rec.set.tolist(), rec.cardinality, rec.structure, rec.checks)
