"""Walkthrough: signed simplices, reduction, and the link identity.

A signed simplex is two weighted point lists; its p-gap compares the
cross-side sum of p-th-power distances against the same-side sums. Every
simplex reduces, through its induced zero-sum vector, to either a
degenerate simplex (zero vector) or a completely refined one, without
changing any gap. The induced vector links the gap to the quadratic form:
form(xi) = -2 * gap.
"""

import numpy as np

from negtype import (
    SignedSimplex,
    from_graph,
    gap,
    is_nondegenerate,
    quad_form,
    reduce,
    simplex_to_vector,
    vector_to_simplex,
)

X = from_graph(3, [(0, 1, 1.0), (1, 2, 1.0)])

# A messy simplex: repeated points, a zero weight, a negative weight.
messy = SignedSimplex(
    left=((0, 1.0), (0, 1.5), (2, -0.5), (1, 0.0)),
    right=((1, 1.0), (2, 1.0)),
)
print("messy simplex:")
print(f"  left  = {messy.left}")
print(f"  right = {messy.right}")

xi = simplex_to_vector(X, messy)
print(f"induced zero-sum vector: {xi.weights}")

reduced = reduce(X, messy)
print(f"reduction kind: {reduced.kind.value}")
print(f"refined simplex: left {reduced.simplex.left}, right {reduced.simplex.right}")

for p in (0.5, 1.0, 2.0, 3.0):
    g_orig = gap(X, p, messy)
    g_red = gap(X, p, reduced.simplex)
    f = quad_form(X, p, xi)
    print(f"p = {p:3.1f}  gap(messy) = {g_orig:+.6f}  gap(reduced) = {g_red:+.6f}"
          f"  -form/2 = {-0.5 * f:+.6f}")

# The trivial cancelling pair reduces to nothing: any equality it realizes
# carries no geometric information.
trivial = SignedSimplex(((0, 1.0), (1, 1.0)), ((0, 1.0), (1, 1.0)))
print(f"\ntrivial pair degenerate: {reduce(X, trivial).kind.value},"
      f" nondegenerate = {is_nondegenerate(X, trivial)}")

# Round trip: vectors and refined simplices are two views of one object.
v = np.array([0.3, 0.4, -0.7])
Q = vector_to_simplex(X, v)
print(f"\nvector {v} -> simplex left {Q.left}, right {Q.right}")
print(f"back to vector: {simplex_to_vector(X, Q).weights}")
