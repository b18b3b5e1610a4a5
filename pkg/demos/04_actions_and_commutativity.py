"""Finite group actions by automorphisms and the commutation they force.

A finite group K acting on the algebra by Hopf *-automorphisms induces a
coaction into A (x) C(K).  The Haar state is automatically invariant, the
strong invariance identity holds, and the twisted coaction beta exchanges
with the Fourier-conjugated coaction gamma across the multiplicative
unitary.  Feeding that exchange into the coproduct expansions of
V = (id (x) beta) W forces V234 V135 = V135 V234 on five legs, whose slices
say: the algebra generated by the slices of beta is commutative.
"""

import numpy as np

from fqg import (
    build_group_action,
    build_intertwiner_data,
    build_multiplicative_unitary,
    compute_haar,
    gns_construct,
    group_preset,
    preset,
    resolve_automorphisms,
)
from fqg.actions import (
    enumerate_group_automorphisms,
    strong_right_invariance_residual,
    verify_action_intertwiner,
    verify_slice_commutativity,
    verify_strong_right_invariance,
)

np.set_printoptions(precision=3, suppress=True, linewidth=120)

print("automorphism groups found by brute force:")
for name in ("z2", "z3", "z4", "s3"):
    autos = enumerate_group_automorphisms(group_preset(name))
    print(f"  {name}: order {len(autos)}")

for algebra_name, group_name, kind in (
    ("kz3", "z2", "inversion"),
    ("ks3", "s3", "conjugation"),
):
    print(f"\n=== {algebra_name} acted on by {group_name} via {kind} ===")
    algebra = preset(algebra_name)
    k_group = group_preset(group_name)
    theta = resolve_automorphisms(algebra, k_group, kind)
    action = build_group_action(algebra, k_group, theta)
    print("action axioms:", "pass" if action.report.overall_pass else "FAIL")

    h = compute_haar(algebra)
    gns = gns_construct(algebra, h)
    wop = build_multiplicative_unitary(algebra, gns)
    data = build_intertwiner_data(action, wop)

    invariance = verify_strong_right_invariance(action, h)
    print(f"strong right invariance defect: {invariance.max_residual():.1e}")
    control = strong_right_invariance_residual(action, h, "identity")
    print(f"  (control with the group antipode removed: {control:.1e})")

    exchange = verify_action_intertwiner(data, wop)
    print(f"exchange identity defect |(id x beta)W - (gamma x id)W|: "
          f"{exchange.residual('intertwiner_exchange'):.1e} "
          f"on a {data.v.entries.shape[0]}-dimensional space")

    mode = "full" if algebra.dim ** 4 * k_group.order <= 1000 else "sliced"
    commutation = verify_slice_commutativity(data, wop, mode=mode)
    for check in commutation.checks:
        print(f"  {check.name}: residual {check.residual:.1e}  {check.detail}")

print("\nconclusion: every slice family lands in a commutative algebra, so the")
print("automorphisms of these quantum groups assemble into ordinary groups.")
