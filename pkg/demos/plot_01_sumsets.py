"""
Sumsets and normal form
=======================

hA is every sum of h elements of A, repetitions allowed. Its size only
depends on A up to translation and dilation, so most of the library works
with the normal form: minimum 0 and difference-gcd 1.
"""

from hfold import h_fold, h_fold_bruteforce, make_set, normalize, reflect

A = make_set([0, 1, 4])
for h in range(1, 5):
    print(h, h_fold(A, h).elements.tolist())

# the engine and the brute-force oracle agree
assert h_fold(A, 3).elements == h_fold_bruteforce(A, 3).elements

# affine images share the same sumset size
B = make_set([7 + 3 * a for a in A])
N = normalize(B)
print(N.normal.tolist(), N.base, N.dilation)
print(h_fold(B, 3).cardinality, h_fold(N.normal, 3).cardinality)

# so does the reflection x -> max + min - x
print(reflect(A).tolist(), h_fold(reflect(A), 3).cardinality)
