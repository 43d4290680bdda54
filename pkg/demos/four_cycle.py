"""Walkthrough: the unit 4-cycle.

The 4-cycle has supremal p-negative type exactly 1, so it does not embed
isometrically in any Hilbert space. The alternating vector (1,-1,1,-1)
certifies everything: its form value is 4 (2^p - 2).
"""

import numpy as np

from negtype import (
    classify,
    from_graph,
    hilbert_embeddable,
    polygonal_interval,
    quad_form,
    supremal,
    witness_at_supremal,
)

C = from_graph(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)])
print("distance matrix (adjacent 1, antipodal 2):")
print(C.dist)

alternating = [1.0, -1.0, 1.0, -1.0]
for p in (0.5, 1.0, 1.5, 2.0):
    val = quad_form(C, p, alternating)
    rep = classify(C, p)
    print(f"p = {p:3.1f}   form(1,-1,1,-1) = {val:+8.4f}   {rep.classification.value}")

sup = supremal(C)
print(f"\nsupremal exponent midpoint: {sup.midpoint:.10f}")

w = witness_at_supremal(C, sup)
print(f"witness ({w.method.value}): xi = {np.round(w.xi.weights, 6)},"
      f" residual = {w.residual:.3g}")
print(f"as a simplex: left {w.simplex.left}, right {w.simplex.right}")

iv = polygonal_interval(C, sup)
print(f"\nexponents with a nontrivial polygonal equality: {iv.describe()}")
print(f"Hilbert-embeddable: {hilbert_embeddable(C)} (needs supremal exponent >= 2)")
