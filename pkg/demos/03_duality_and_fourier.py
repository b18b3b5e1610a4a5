"""The dual quantum group seen three ways.

First as right slices of W spanning the dual subspace, then as the abstract
dual Hopf *-algebra on the dual basis, and finally through the slice
isomorphism and the Fourier transform connecting the two.  Taking the dual
of a group algebra lands exactly on the function algebra of the same group,
and the double dual reproduces the original structure tensors bit for bit.
"""

import numpy as np

from fqg import (
    G_map,
    build_dual,
    build_dual_subspace,
    build_multiplicative_unitary,
    compute_haar,
    dual_coproduct,
    fourier,
    fourier_matrix,
    gns_construct,
    preset,
)
from fqg.haar import Functional
from fqg.multiplicative import dual_subspace_commutativity_defect

np.set_printoptions(precision=3, suppress=True, linewidth=120)

algebra = preset("kz2")
gns = gns_construct(algebra, compute_haar(algebra))
wop = build_multiplicative_unitary(algebra, gns)

dual_space = build_dual_subspace(wop)
print("right-slice basis of the dual subspace of kz2:")
for j, mat in enumerate(dual_space.basis):
    print(f"  x[{j}] =\n{mat.real}")

p_g = dual_space.basis[1]
print("\ndual coproduct of the projection onto the u_g sector:")
print(dual_coproduct(wop, p_g).real)
print("(reads as p_e (x) p_g + p_g (x) p_e: the dual group law)")

print("\ndual algebras as structure constants:")
for name in ("kz3", "ks3", "fs3"):
    dual = build_dual(preset(name))
    both = build_dual(dual)
    same = all(
        np.array_equal(getattr(both, f), getattr(preset(name), f))
        for f in ("mult", "comult", "unit", "counit", "antipode", "star")
    )
    print(
        f"  dual of {name}: commutative defect {dual.commutativity_defect():.2f}, "
        f"cocommutative defect {dual.cocommutativity_defect():.2f}, "
        f"double dual equals primal: {same}"
    )

print("\ncommutativity of the dual subspace classifies the primal coproduct:")
for name in ("ks3", "fs3"):
    w = build_multiplicative_unitary(
        preset(name), gns_construct(preset(name), compute_haar(preset(name)))
    )
    print(f"  {name}: largest commutator in the dual subspace = "
          f"{dual_subspace_commutativity_defect(w):.3f}")

print("\nFourier transform on kz3 (matrix in dual-basis coordinates):")
a3 = preset("kz3")
h3 = compute_haar(a3)
f3 = fourier_matrix(a3, h3)
print(f3.real)
print(f"condition number {np.linalg.cond(f3):.2f}")
print(f"image of the unit is the Haar state: {np.allclose(fourier(a3, h3, a3.unit).coords, h3.coords)}")

w3 = build_multiplicative_unitary(a3, gns_construct(a3, h3))
phi = Functional(a3.counit)
print(f"slice image of the counit is the identity: "
      f"{np.allclose(G_map(w3, phi), np.eye(3))}")
