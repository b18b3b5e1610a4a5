"""Walk through the multiplicative unitary of the smallest nontrivial example.

The group algebra of the order-2 group has basis u_e, u_g with coproduct
u (x) u on both.  The fundamental map a (x) b -> coproduct(a)(1 (x) b) sends
u_a (x) u_b to u_a (x) u_{ab}, which in the orthonormal Haar coordinates is
exactly the controlled-not permutation.  This script builds it, checks the
pentagon equation, and shows that the plain swap fails it badly.
"""

import numpy as np

from fqg import (
    TensorOperator,
    build_multiplicative_unitary,
    compute_haar,
    embed_legs,
    gns_construct,
    pentagon_residual,
    preset,
)

np.set_printoptions(precision=3, suppress=True, linewidth=120)

algebra = preset("kz2")
print(f"algebra: {algebra.name}, basis {algebra.basis_labels}")

h = compute_haar(algebra)
print(f"Haar state on the basis: {h.coords.real}")

gns = gns_construct(algebra, h)
print(f"Gram matrix of <a, b> = haar(a* b):\n{gns.gram.real}")

wop = build_multiplicative_unitary(algebra, gns)
print(f"\nW (the controlled-not):\n{wop.w.entries.real}")

print(f"\nunitarity defect |W* W - 1| = {np.linalg.norm(wop.w.entries.conj().T @ wop.w.entries - np.eye(4)):.2e}")
print(f"pentagon defect |W23 W12 W23* - W12 W13| = {pentagon_residual(wop.w):.2e}")

# the same contraction spelled out by hand on three legs
ambient = (2, 2, 2)
w12 = embed_legs(wop.w, [1, 2], ambient).entries
w13 = embed_legs(wop.w, [1, 3], ambient).entries
w23 = embed_legs(wop.w, [2, 3], ambient).entries
print(f"hand-assembled defect          = {np.linalg.norm(w23 @ w12 @ w23.conj().T - w12 @ w13):.2e}")

swap = TensorOperator((2, 2), np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
))
print(f"\nnegative control: pentagon defect of the plain swap = {pentagon_residual(swap):.2f}")
print("the swap is unitary but does not implement any coproduct")
