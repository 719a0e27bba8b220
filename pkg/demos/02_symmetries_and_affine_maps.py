#!/usr/bin/env python3
"""The canonical symmetry families and their flattened affine form.

Every map studied here is conjugation by a unitary U (or by U after
entrywise conjugation, the antiunitary case), possibly precomposed with
A -> I - A (affine family) or negated (Hermitian triple family).  The
script shows how the three families behave, how composition works, and
how descriptors round-trip through the coordinate representation.
"""

import numpy as np

from effectsym import (
    EffectMapOracle,
    SymmetryDescriptor,
    apply_affine_rep,
    apply_symmetry,
    compose,
    gauge_normalize,
    hermitian_basis,
    inverse,
    jordan_triple,
    random_effect,
    random_symmetry,
    to_affine_rep,
)

np.set_printoptions(precision=4, suppress=True)

dim = 3
a = random_effect(dim, seed=10)
b = random_effect(dim, seed=11)

print("Synthesize one descriptor per family (same Haar seed):")
d_affine = random_symmetry(dim, 42, family="affine", kind="antiunitary", complement=True)
d_triple = random_symmetry(dim, 42, family="triple_effects", kind="unitary")
d_signed = random_symmetry(dim, 42, family="triple_hermitian", kind="unitary", sign=-1)
for d in (d_affine, d_triple, d_signed):
    print(f"  kind={d.kind:12s} complement={d.complement} sign={d.sign:+d}")

print("\nThe triple-family map respects the triple product:")
lhs = apply_symmetry(d_triple, jordan_triple(a, b))
rhs = jordan_triple(apply_symmetry(d_triple, a), apply_symmetry(d_triple, b))
print("  ||phi(ABA) - phi(A) phi(B) phi(A)|| =", np.linalg.norm(lhs - rhs))

print("\nThe complemented map is affine but breaks the triple identity:")
lhs = apply_symmetry(d_affine, jordan_triple(a, b))
rhs = jordan_triple(apply_symmetry(d_affine, a), apply_symmetry(d_affine, b))
print("  ||phi(ABA) - phi(A) phi(B) phi(A)|| =", np.linalg.norm(lhs - rhs))
lam = 0.3
mid = apply_symmetry(d_affine, lam * a + (1 - lam) * b)
avg = lam * apply_symmetry(d_affine, a) + (1 - lam) * apply_symmetry(d_affine, b)
print("  affine defect:", np.linalg.norm(mid - avg))

print("\nComposition: two complemented maps cancel their complements,")
print("two antiunitaries compose to a unitary:")
cc = compose(d_affine, d_affine)
print("  complement of the square:", cc.complement, "; kind:", cc.kind)
print("  descriptor times its inverse acts as the identity:",
      np.allclose(apply_symmetry(compose(inverse(d_triple), d_triple), a), a))

print("\nGauge: U and exp(i theta) U act identically; normalization pins one:")
d_rot = gauge_normalize(SymmetryDescriptor(d_triple.kind, np.exp(2.2j) * d_triple.unitary))
print("  ||normalized(e^{2.2i} U) - normalized(U)|| =",
      np.linalg.norm(d_rot.unitary - gauge_normalize(d_triple).unitary))

print("\nFlattening to coordinates: the Hermitian basis has dim^2 elements,")
basis = hermitian_basis(dim)
print("  basis shape:", basis.shape)
rep = to_affine_rep(d_affine)
print("  linear part shape:", rep.linear.shape, "; constant is phi(0):")
print(rep.constant.round(4))
err = max(
    np.linalg.norm(apply_affine_rep(rep, random_effect(dim, s)) -
                   apply_symmetry(d_affine, random_effect(dim, s)))
    for s in range(20)
)
print("  max disagreement descriptor vs coordinates over 20 effects:", err)

print("\nAn EffectMapOracle hides either form behind one callable:")
phi = EffectMapOracle.from_affine_rep(rep)
print("  oracle(A) matches descriptor:", np.allclose(phi(a), apply_symmetry(d_affine, a)))
