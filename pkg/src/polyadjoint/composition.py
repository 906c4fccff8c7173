"""Two-sided composition operators P |-> R o P o B and their factorizations.

For fixed maps B (degree s, from the test domain into the middle domain)
and R (degree r, from the middle codomain onward), composing a degree-m map
P on both sides yields a degree-mrs map; the operator taking P to that
composite is itself r-homogeneous in P.  This module builds the operator,
the rank-one building blocks that factor operators through it, and exact
checkers for the recovery and factorization identities:

* evaluating the composite of a rank-one lift of x at a normalized point
  recovers R(x);
* sandwiching rank-one lifts of a linear form through the operator recovers
  the (mr-fold) adjoint of B on powers of forms — on all of the degree-m
  space when R is linear;
* the operator of a rank-one linear map factors through the adjoint of B;
* left/right multiplying R by linear maps conjugates the operator by
  left-composition operators;
* with scalar test spaces the operator recovers R itself.

The numeric two-sided bound |R o P o Q| <= |R| |P|^deg(R) |Q|^{deg(P) deg(R)}
is checked with certified lower-bound sup norms.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import (
    F64,
    RATIONAL,
    HomPoly,
    PolyMap,
    Scalar,
    compose_map,
    compose_scalar,
)
from .adjoint import adjoint_apply, integer_points
from .errors import DegreeError, DimensionError, PreconditionError, SearchBudgetError
from .norms import NormConfig, Report, _elapsed_ms, sup_norm


@dataclass(frozen=True)
class CompositionInstance:
    """Fixed flanks of the operator P |-> outer o P o inner.

    ``inner`` maps the test domain into the space where P's arguments live;
    ``outer`` consumes P's values.  ``middle_degree`` fixes the degree m of
    the P's this instance accepts.
    """

    outer: PolyMap
    inner: PolyMap
    middle_degree: int

    def __post_init__(self):
        if self.middle_degree < 1:
            raise DegreeError("middle degree must be >= 1")

    @property
    def result_degree(self) -> int:
        return self.outer.degree * self.middle_degree * self.inner.degree


def compose_three(inst: CompositionInstance, P: PolyMap) -> PolyMap:
    """outer o P o inner, exactly; degree multiplies out to r*m*s."""
    if P.degree != inst.middle_degree:
        raise DegreeError(
            f"P has degree {P.degree}, instance expects {inst.middle_degree}")
    if P.domain_dim != inst.inner.codomain_dim:
        raise DimensionError("P's domain does not match the inner map's codomain")
    if P.codomain_dim != inst.outer.domain_dim:
        raise DimensionError("P's codomain does not match the outer map's domain")
    return compose_map(inst.outer, compose_map(P, inst.inner))


# -- rank-one building blocks ---------------------------------------------

def rank_one_map(q: HomPoly, b: Sequence) -> PolyMap:
    """The map x |-> q(x) * b."""
    return PolyMap(tuple(q.scale(bi) for bi in b))


def vector_to_rank_one(phi: HomPoly, m: int) -> Callable[[Sequence], PolyMap]:
    """x |-> (y |-> phi(y)^m x): lifts a vector to a rank-one degree-m map."""
    if phi.degree != 1:
        raise DegreeError("phi must be a linear form")
    pm = phi ** m
    return lambda x: rank_one_map(pm, x)


def form_to_rank_one(z: Sequence, m: int) -> Callable[[HomPoly], PolyMap]:
    """phi |-> phi^m tensor z, for linear forms phi."""
    def build(phi: HomPoly) -> PolyMap:
        if phi.degree != 1:
            raise DegreeError("expected a linear form")
        return rank_one_map(phi ** m, z)
    return build


def tensor_with_vector(b: Sequence) -> Callable[[HomPoly], PolyMap]:
    """q |-> q tensor b (no degree restriction on q)."""
    return lambda q: rank_one_map(q, b)


def eval_at(z: Sequence) -> Callable[[PolyMap], tuple[Scalar, ...]]:
    """P |-> P(z)."""
    return lambda P: P.eval_map(z)


def post_compose_form(psi: HomPoly) -> Callable[[PolyMap], HomPoly]:
    """P |-> psi o P for a linear form psi on P's codomain."""
    if psi.degree != 1:
        raise DegreeError("psi must be a linear form")
    return lambda P: compose_scalar(psi, P)


def left_compose(A: PolyMap) -> Callable[[PolyMap], PolyMap]:
    """P |-> A o P (used for both flanking linear maps of a sandwich)."""
    return lambda P: compose_map(A, P)


def scalar_embedding(m: int, field: str = RATIONAL) -> Callable[[Sequence], PolyMap]:
    """x |-> (t |-> t^m x): the rank-one lift over a one-dimensional test space."""
    tm = HomPoly.monomial(1, (m,), 1, field)
    return lambda x: rank_one_map(tm, x)


def eval_at_one(field: str = RATIONAL) -> Callable[[PolyMap], tuple[Scalar, ...]]:
    """P |-> P(1) on a one-dimensional domain."""
    one = Fraction(1) if field == RATIONAL else 1.0
    return lambda P: P.eval_map((one,))


def normalization_witness(B: PolyMap, budget: int = 10_000
                          ) -> tuple[HomPoly, tuple[Fraction, ...]]:
    """Deterministic (phi, z) with phi a linear form and phi(B(z)) = 1.

    Walks the integer grid for a z with B(z) != 0, then rescales the first
    nonvanishing coordinate functional.
    """
    for z in integer_points(B.domain_dim, budget):
        w = B.eval_map(z)
        for i, wi in enumerate(w):
            if wi != 0:
                coeffs = [Fraction(0)] * B.codomain_dim
                coeffs[i] = Fraction(1) / wi
                return HomPoly.linear_form(coeffs, B.field), z
    raise SearchBudgetError("no point with B(z) != 0 found (is B zero?)")


# -- identity checkers -----------------------------------------------------

def _max_abs(values) -> Scalar:
    worst = Fraction(0)
    for v in values:
        worst = max(worst, abs(v))
    return worst


def check_recovery_identities(inst: CompositionInstance,
                              phi: HomPoly, z_a: Sequence,
                              psi: HomPoly, z_b: Sequence,
                              test_points: Sequence[Sequence],
                              test_forms: Sequence[HomPoly]) -> tuple[Scalar, Scalar]:
    """Defects of the two recovery identities of the composition operator.

    (a) With phi(inner(z_a)) = 1: evaluating the operator's value on the
        rank-one lift of x at z_a returns outer(x); max abs defect over
        ``test_points``.
    (b) With psi(outer(z_b)) = 1 and z_b in the outer map's domain: pushing
        phi' |-> phi'^m tensor z_b through the operator and then through psi
        equals the (m*r)-fold adjoint of the inner map on phi'; coefficient-
        wise max abs defect over ``test_forms``.
    Raises PreconditionError when a normalization fails.
    """
    m = inst.middle_degree
    r = inst.outer.degree
    if phi.eval(inst.inner.eval_map(z_a)) != 1:
        raise PreconditionError("phi(inner(z_a)) must equal 1")
    if psi.eval(inst.outer.eval_map(z_b)) != 1:
        raise PreconditionError("psi(outer(z_b)) must equal 1")
    lift = vector_to_rank_one(phi, m)
    at_za = eval_at(z_a)
    defect_a = Fraction(0)
    for x in test_points:
        got = at_za(compose_three(inst, lift(x)))
        want = inst.outer.eval_map(x)
        defect_a = max(defect_a, _max_abs(g - w for g, w in zip(got, want)))
    lift_form = form_to_rank_one(z_b, m)
    through_psi = post_compose_form(psi)
    defect_b = Fraction(0)
    for form in test_forms:
        got_poly = through_psi(compose_three(inst, lift_form(form)))
        want_poly = adjoint_apply(inst.inner, m * r, 1, form)
        defect_b = max(defect_b, _max_abs((got_poly - want_poly).coeffs.values()))
    return defect_a, defect_b


def check_linear_recovery(inst: CompositionInstance,
                          psi: HomPoly, z: Sequence,
                          test_qs: Sequence[HomPoly]) -> Scalar:
    """Linear-outer variant of recovery (b): for linear outer maps the
    sandwich recovers the adjoint of the inner map on the whole degree-m
    space, not only on powers of forms."""
    if inst.outer.degree != 1:
        raise PreconditionError("this identity needs a linear outer map")
    if psi.eval(inst.outer.eval_map(z)) != 1:
        raise PreconditionError("psi(outer(z)) must equal 1")
    lift = tensor_with_vector(z)
    through_psi = post_compose_form(psi)
    worst = Fraction(0)
    for q in test_qs:
        got = through_psi(compose_three(inst, lift(q)))
        want = adjoint_apply(inst.inner, 1, inst.middle_degree, q)
        worst = max(worst, _max_abs((got - want).coeffs.values()))
    return worst


def check_factorization_identities(m: int, B: PolyMap,
                                   phi: HomPoly, b: Sequence,
                                   A: PolyMap, R_mid: PolyMap, C: PolyMap,
                                   R_scalar: PolyMap,
                                   test_maps: Sequence[PolyMap],
                                   test_points: Sequence[Sequence],
                                   field: str = RATIONAL) -> dict[str, Scalar]:
    """Max abs defects of the three operator factorizations, all exact.

    rank_one:  the operator with outer map phi tensor b equals
               (tensor with b) o (adjoint of B on degree m) o (phi o .).
    sandwich:  the operator of C o R_mid o A equals left-composition by C,
               then the operator of R_mid, then left-composition by A.
    unit:      over scalar test spaces, evaluating at 1 after the operator
               of R_scalar undoes the rank-one scalar lift: recovers R_scalar.

    ``test_maps`` supplies the P arguments (degree m, mapping B's codomain
    into A's domain for the sandwich; into phi's space for rank_one);
    ``test_points`` supplies evaluation points for the unit identity.
    """
    defects: dict[str, Scalar] = {}

    # rank-one factorization: operator outer = phi (x) b, inner = B
    rank_one_outer = rank_one_map(phi, b)
    inst1 = CompositionInstance(rank_one_outer, B, m)
    mb = tensor_with_vector(b)
    worst = Fraction(0)
    for P in test_maps:
        lhs = compose_three(inst1, P)
        rhs = mb(adjoint_apply(B, 1, m, compose_scalar(phi, P)))
        worst = max(worst, _max_abs(c for comp in (lhs - rhs).components
                                    for c in comp.coeffs.values()))
    defects["rank_one"] = worst

    # sandwich factorization
    outer_full = compose_map(C, compose_map(R_mid, A))
    inst_full = CompositionInstance(outer_full, B, m)
    inst_mid = CompositionInstance(R_mid, B, m)
    pre = left_compose(A)
    post = left_compose(C)
    worst = Fraction(0)
    for P in test_maps:
        lhs = compose_three(inst_full, P)
        rhs = post(compose_three(inst_mid, pre(P)))
        worst = max(worst, _max_abs(c for comp in (lhs - rhs).components
                                    for c in comp.coeffs.values()))
    defects["sandwich"] = worst

    # unit factorization over scalar test spaces
    ident1 = PolyMap.identity(1, field)
    inst_unit = CompositionInstance(R_scalar, ident1, m)
    delta = scalar_embedding(m, field)
    gamma = eval_at_one(field)
    worst = Fraction(0)
    for x in test_points:
        got = gamma(compose_three(inst_unit, delta(x)))
        want = R_scalar.eval_map(x)
        worst = max(worst, _max_abs(g - w for g, w in zip(got, want)))
    defects["unit"] = worst
    return defects


def check_two_sided_norm(R: PolyMap, P: PolyMap, Q: PolyMap,
                         cfg: NormConfig = NormConfig()) -> Report:
    """|R o P o Q| <= |R| * |P|^deg(R) * |Q|^(deg(P)*deg(R)), numerically.

    All four sup norms are certified lower bounds, so a genuine violation
    beyond tolerance would be meaningful; the reported slack is relative.
    """
    t0 = time.perf_counter()
    R, P, Q = R.as_field(F64), P.as_field(F64), Q.as_field(F64)
    if Q.codomain_dim != P.domain_dim or P.codomain_dim != R.domain_dim:
        raise DimensionError("R o P o Q is not composable")
    k, m = R.degree, P.degree
    comp = compose_map(R, compose_map(P, Q))
    lhs = sup_norm(comp, cfg).value
    bound = (sup_norm(R, cfg).value
             * sup_norm(P, cfg).value ** k
             * sup_norm(Q, cfg).value ** (m * k))
    slack = (bound - lhs) / bound if bound > 0 else 0.0
    passed = slack >= -1e-9
    return Report("two_sided_bound", lhs, bound, max(0.0, -slack), 1e-9,
                  True, cfg.samples, cfg.seed, _elapsed_ms(t0), passed,
                  {"slack": slack, "deg_R": k, "deg_P": m, "deg_Q": Q.degree})
