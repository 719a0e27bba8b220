#!/usr/bin/env python3
"""Tour of the operator interval [0, I].

Effects are Hermitian matrices with spectrum in [0, 1].  This script
walks through the structure the package models: the partial order, the
orthocomplement, partial addition, the triple product ABA, and the two
spectral decompositions used everywhere else.
"""

import numpy as np

from effectsym import (
    NotSummableError,
    as_effect,
    is_extreme,
    jordan_triple,
    leq,
    orthocomplement,
    partial_add,
    positive_negative_parts,
    random_effect,
    random_projection,
)

np.set_printoptions(precision=4, suppress=True)

dim = 3
a = random_effect(dim, seed=1)
b = random_effect(dim, seed=2)

print("A random effect A (Hermitian, spectrum in [0, 1]):")
print(a.round(4))
print("eigenvalues:", np.linalg.eigvalsh(a).round(4))

print("\nThe orthocomplement I - A is again an effect:")
print(orthocomplement(a).round(4))

print("\nOrder: 0 <= A <= I ...")
print("  leq(0, A):", leq(np.zeros((dim, dim)), a))
print("  leq(A, I):", leq(a, np.eye(dim)))
print("  leq(A, B):", leq(a, b), " (two random effects are usually incomparable)")
print("  leq(B, A):", leq(b, a))

print("\nPartial addition is defined only when the sum stays below I:")
print("  A + (I - A) = I works:", np.allclose(partial_add(a, orthocomplement(a)), np.eye(dim)))
try:
    partial_add(a, a)
    print("  A + A stayed inside [0, I]")
except NotSummableError as err:
    print("  A + A failed as expected:", err)

print("\nProducts AB generally leave [0, I], but the triple product ABA never does:")
ab = a @ b
aba = jordan_triple(a, b)
print("  eigenvalues of AB :", np.sort(np.linalg.eigvals(ab).real).round(4), "(can stray)")
print("  eigenvalues of ABA:", np.linalg.eigvalsh(aba).round(4))

print("\nExtreme points of the interval are exactly the projections:")
p = random_projection(dim, seed=3)
print("  random projection extreme?", is_extreme(p))
print("  A extreme?", is_extreme(a))
print("  midpoint (A + P)/2 extreme?", is_extreme(as_effect(0.5 * (a + p))))

print("\nAny Hermitian H splits as H = H+ - H- with orthogonal psd parts:")
h = a - b
pos, neg = positive_negative_parts(h)
print("  ||H - (H+ - H-)|| =", np.linalg.norm(h - (pos - neg)))
print("  ||H+ H-||         =", np.linalg.norm(pos @ neg))
