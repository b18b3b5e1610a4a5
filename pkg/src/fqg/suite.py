"""Full verification pipelines: every identity for one algebra or one action.

A stage that raises a VerificationError (no Haar state, Gram not positive,
span of the wrong dimension, ...) is recorded as a failed check and aborts
the stages that depend on it; structural errors propagate to the caller.
"""

from __future__ import annotations

import numpy as np

from . import actions as actions_mod
from . import duality, haar, multiplicative
from .errors import VerificationError
from .groups import CayleyTable
from .hopf import DEFAULT_TOL, FiniteHopfStarAlgebra, verify_hopf_star_axioms
from .report import Check, ReportBuilder, VerificationReport


def _aborted(name: str, tol: float, exc: VerificationError) -> Check:
    return Check(name, None, tol, False, f"aborted: {exc}")


def full_suite(a: FiniteHopfStarAlgebra, tol: float = DEFAULT_TOL) -> VerificationReport:
    """Axioms, Haar, GNS, trace, the full unitary suite, duality and Fourier."""
    checks: list[Check] = []

    def extend(prefix: str, report: VerificationReport) -> None:
        for c in report.checks:
            checks.append(Check(prefix + c.name, c.residual, c.tolerance, c.passed, c.detail))

    extend("axioms/", verify_hopf_star_axioms(a, tol))

    try:
        h = haar.compute_haar(a, tol)
    except VerificationError as exc:
        checks.append(_aborted("haar/" + (exc.check or "haar_exists"), tol, exc))
        return VerificationReport(tuple(checks))
    rb = ReportBuilder("haar/")
    rb.add("invariance", haar.haar_invariance_residual(a, h), tol * a.structure_scale())
    rb.add_count("nullspace_dimension", haar.haar_nullspace_dimension(a, tol), 1)
    extend("", rb.build())

    try:
        gns = haar.gns_construct(a, h, tol)
    except VerificationError as exc:
        checks.append(_aborted("gns/" + (exc.check or "gram_positive"), tol, exc))
        return VerificationReport(tuple(checks))
    extend("gns/", haar.verify_gns(a, h, gns, tol))
    extend("trace/", haar.verify_trace(a, h, tol))

    wop = multiplicative.build_multiplicative_unitary(a, gns)
    extend("unitary/", multiplicative.verify_unitarity(wop, tol))
    extend("unitary/", multiplicative.verify_inverse_via_antipode(wop, tol))
    extend("pentagon/", multiplicative.verify_pentagon(wop, tol))
    extend("slices/", multiplicative.verify_left_slices_span(wop, tol))

    rb = ReportBuilder("coproduct_via_w/")
    worst_conj = 0.0
    global_report = None
    for i in range(a.dim):
        sub = multiplicative.verify_coproduct_implemented(wop, a.basis_element(i), tol)
        worst_conj = max(worst_conj, sub.residual("coproduct_conjugation"))
        global_report = sub
    rb.add("conjugation_over_basis", worst_conj, tol)
    assert global_report is not None
    rb.add(
        "coproduct_on_second_leg_of_w",
        global_report.residual("coproduct_on_second_leg_of_w"),
        tol,
    )
    extend("", rb.build())

    try:
        extend("antipode_relation/", multiplicative.verify_antipode_relation(wop, tol))
        dual_space = multiplicative.build_dual_subspace(wop, tol)
    except VerificationError as exc:
        checks.append(_aborted("dual_subspace/" + (exc.check or "build"), tol, exc))
        return VerificationReport(tuple(checks))
    rb = ReportBuilder("dual_subspace/")
    rb.add_count("dimension", dual_space.basis.shape[0], a.dim)
    rb.add("closed_under_product_and_adjoint", dual_space.closure_residual, tol)
    rb.add("w_expansion", wop.expansion_residual, tol)
    extend("", rb.build())

    extend("dual_coproduct/", multiplicative.verify_dual_coproduct_identities(wop, tol))
    rb = ReportBuilder("dual_coproduct/")
    worst_member = 0.0
    for j in range(a.dim):
        try:
            _, sub = multiplicative.dual_coproduct_checked(wop, wop.slice_basis[j], tol)
        except VerificationError as exc:
            checks.append(_aborted("dual_coproduct/membership", tol, exc))
            return VerificationReport(tuple(checks))
        worst_member = max(worst_member, sub.max_residual())
    rb.add("image_in_doubled_span", worst_member, tol)
    extend("", rb.build())

    dual_algebra = duality.build_dual(a)
    extend("dual_algebra/", verify_hopf_star_axioms(dual_algebra, tol))
    try:
        dual_h = haar.compute_haar(dual_algebra, tol)
        haar.gns_construct(dual_algebra, dual_h, tol)
    except VerificationError as exc:
        checks.append(_aborted("dual_algebra/haar", tol, exc))
        return VerificationReport(tuple(checks))
    rb = ReportBuilder("dual_algebra/")
    rb.add(
        "haar_invariance",
        haar.haar_invariance_residual(dual_algebra, dual_h),
        tol * dual_algebra.structure_scale(),
    )
    double = duality.build_dual(dual_algebra)
    rb.add(
        "double_dual_is_primal",
        max(
            float(np.max(np.abs(double.mult - a.mult))),
            float(np.max(np.abs(double.comult - a.comult))),
            float(np.max(np.abs(double.unit - a.unit))),
            float(np.max(np.abs(double.counit - a.counit))),
            float(np.max(np.abs(double.antipode - a.antipode))),
            float(np.max(np.abs(double.star - a.star))),
        ),
        0.0,
        detail="exact tensor equality",
    )
    extend("", rb.build())

    extend("slice_isomorphism/", duality.verify_G_isomorphism(wop, tol))
    extend("fourier/", duality.verify_fourier(a, h, tol))
    extend("fourier/", duality.verify_fourier_slice_identity(wop, tol))

    return VerificationReport(tuple(checks))


def action_suite(
    a: FiniteHopfStarAlgebra,
    k_group: CayleyTable,
    theta,
    tol: float = DEFAULT_TOL,
    mode: str = "auto",
) -> VerificationReport:
    """Action axioms, invariance, beta/gamma, exchange identity, commutation."""
    checks: list[Check] = []

    def extend(prefix: str, report: VerificationReport) -> None:
        for c in report.checks:
            checks.append(Check(prefix + c.name, c.residual, c.tolerance, c.passed, c.detail))

    axioms = actions_mod.action_axioms_report(a, k_group, theta, tol)
    extend("action/", axioms)
    if not axioms.overall_pass:
        return VerificationReport(tuple(checks))
    try:
        action = actions_mod.build_group_action(a, k_group, theta, tol)
        h = haar.compute_haar(a, tol)
        gns = haar.gns_construct(a, h, tol)
    except VerificationError as exc:
        checks.append(_aborted("action/" + (exc.check or "build"), tol, exc))
        return VerificationReport(tuple(checks))

    extend("invariance/", actions_mod.verify_haar_invariance(action, h, tol))
    extend("invariance/", actions_mod.verify_strong_right_invariance(action, h, tol))

    wop = multiplicative.build_multiplicative_unitary(a, gns)
    data = actions_mod.build_intertwiner_data(action, wop, tol)
    rb = ReportBuilder("intertwiner/")
    rb.add("v_expansion", data.v_expansion_residual, tol)
    extend("", rb.build())
    extend("beta/", actions_mod.verify_beta(data, wop, tol))
    extend("gamma/", actions_mod.verify_gamma(data, wop, tol))
    extend("intertwiner/", actions_mod.verify_action_intertwiner(data, wop, tol))
    extend("commutation/", actions_mod.verify_slice_commutativity(data, wop, tol, mode))

    return VerificationReport(tuple(checks))
