"""Walkthrough: Euclidean point clouds and the embeddability criterion.

Finite subsets of Euclidean space always have 2-negative type, so the
2-classification is never NOT_NEG_TYPE for them; with more points than
dimension + 1 an affine dependence forces the boundary case. Taxicab
geometry behaves differently: the unit square under l_1 is isometric to
the 4-cycle, whose supremal exponent is 1.
"""

import numpy as np

from negtype import classify, from_points, hilbert_embeddable, supremal

rng = np.random.default_rng(5)

for n, dim in ((4, 3), (6, 3), (8, 2)):
    X = from_points(rng.standard_normal((n, dim)), q=2)
    rep = classify(X, 2.0)
    sup = supremal(X)
    print(f"l_2 cloud  n = {n}, dim = {dim}:  classification at p=2 is"
          f" {rep.classification.value:9s}  supremal midpoint ="
          f" {sup.midpoint:.4f}  Hilbert: {hilbert_embeddable(X)}")

# n <= dim + 1 points in general position: strictly 2-negative
Y = from_points(rng.standard_normal((3, 4)), q=2)
print(f"\n3 points in R^4: {classify(Y, 2.0).classification.value}")

# the l_1 unit square is the 4-cycle in disguise
square = from_points([[0, 0], [1, 0], [1, 1], [0, 1]], q=1)
print(f"\nl_1 unit square distance matrix:\n{square.dist}")
print(f"supremal midpoint: {supremal(square).midpoint:.6f}")
print(f"Hilbert-embeddable: {hilbert_embeddable(square)}")
