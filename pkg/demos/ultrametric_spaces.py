"""Walkthrough: ultrametric spaces are the infinite case.

A space has p-negative type for every p exactly when it is ultrametric,
and those are also exactly the spaces admitting no nontrivial polygonal
equality at any exponent. Breaking ultrametricity with one 5% distance
perturbation makes the supremal exponent finite (or at least capped).
"""

import numpy as np

from negtype import (
    is_ultrametric,
    polygonal_interval,
    random_ultrametric,
    supremal,
    validate_metric,
)

U = random_ultrametric(6, seed=11)
print("random ultrametric (merge-tree heights in [1, 2]):")
print(np.round(U.dist, 4))
print(f"is_ultrametric: {is_ultrametric(U)}")

sup = supremal(U)
print(f"supremal status: {sup.status.value}")
print(f"polygonal-equality exponents: {polygonal_interval(U, sup).describe()}")

# Perturb one distance by 5%. The tied-maximum structure of ultrametric
# triples is destroyed, and a finite supremal exponent appears.
d = np.array(U.dist)
i, j = 0, 1
d[i, j] = d[j, i] = 1.05 * d[i, j]
V = validate_metric(U.labels, d)
print(f"\nafter scaling d({i},{j}) by 1.05: is_ultrametric = {is_ultrametric(V)}")

sup_v = supremal(V, cap=4096.0)
print(f"supremal status: {sup_v.status.value}")
if sup_v.midpoint is not None:
    print(f"supremal exponent midpoint: {sup_v.midpoint:.4f}")
    print(f"polygonal-equality exponents: {polygonal_interval(V, sup_v).describe()}")

# An equilateral space is the simplest ultrametric: every triple is a tie.
E = validate_metric(None, np.ones((4, 4)) - np.eye(4))
print(f"\nequilateral 4-point space: ultrametric = {is_ultrametric(E)},"
      f" status = {supremal(E).status.value}")
