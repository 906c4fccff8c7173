"""
Finite-type maps and the combinatorial expansion of the adjoint
===============================================================

A map of coefficient rank l factors as P = sum_j p_j(.) b_j with
independent vectors b_j.  The adjoint of such a map expands into finitely
many terms indexed by weak compositions and exponent vectors, each with an
exact rational weight that the expansion also reports in factored form.
"""
from fractions import Fraction

from polyadjoint import (
    HomPoly,
    PolyMap,
    adjoint_apply,
    expand_adjoint,
    expansion_defect,
    finite_rank_rep,
)

# a rank-2 quadratic map into R^3
p1 = HomPoly(2, 2, {(2, 0): Fraction(1)})
p2 = HomPoly(2, 2, {(0, 2): Fraction(1)})
P = PolyMap((p1 + p2, p1.scale(Fraction(2)), p2.scale(Fraction(-1))))

rep = finite_rank_rep(P)
print("coefficient rank:", rep.rank)
print("vectors:", rep.vectors)
print("scalar factors:", [dict(s.coeffs) for s in rep.scalars])
x = (Fraction(1), Fraction(3))
print("reconstruction matches P:", rep.reconstruct(x) == P.eval_map(x))

# expand q |-> q(P(.))^n over the representation
n, k = 2, 2
exp = expand_adjoint(rep, n, k)
print(f"expansion of the (n={n}, k={k}) adjoint has {len(exp.terms)} terms:")
for t in exp.terms:
    print("  theta =", t.theta, " from ", t.theta_factored)

# every term evaluates through the polarized form of q at composition
# multisets of the vectors; the total reproduces the adjoint exactly
q = HomPoly(3, k, {(1, 1, 0): Fraction(1), (0, 0, 2): Fraction(3)})
print("expansion value:", exp.evaluate(q, x))
print("direct adjoint: ", adjoint_apply(P, n, k, q).eval(x))
print("max defect over random probes:",
      expansion_defect(exp, P, n, k, trials=10, seed=1))
