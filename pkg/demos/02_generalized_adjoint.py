"""
The generalized adjoint of a polynomial map
===========================================

The adjoint sends a scalar polynomial q on the codomain to x |-> q(P(x))^n,
a homogeneous polynomial of degree m*n*k on the domain.  Materializing it
treats the coefficients of q as formal variables, which turns the adjoint
itself into a degree-n polynomial map between coefficient spaces.
"""
from fractions import Fraction

from polyadjoint import (
    HomPoly,
    PolyMap,
    adjoint_apply,
    composition_identity_defect,
    diagram_defect,
    materialize_adjoint,
)

# P(x, y) = x^2 + y^2 into the line, q(t) = t, squared pullback
P = PolyMap((HomPoly(2, 2, {(2, 0): Fraction(1), (0, 2): Fraction(1)}),))
q = HomPoly(1, 1, {(1,): Fraction(1)})
squared = adjoint_apply(P, 2, 1, q)
print("q(P(.))^2 =", dict(squared.coeffs))  # (x^2 + y^2)^2

# scaling the map scales the adjoint by lambda^(k*n)
lam = Fraction(-3)
scaled = adjoint_apply(P.scale(lam), 2, 1, q)
print("homogeneity:", scaled == squared.scale(lam ** 2))

# materialize: a degree-2 map from the 1-dim q-coefficient space into the
# 3-dim space of quartics on the plane
mat = materialize_adjoint(P, 2, 1)
print("materialized shape:", mat.polymap.domain_dim, "->",
      mat.polymap.codomain_dim, "degree", mat.polymap.degree)
print("agrees with direct application:", mat.apply_to(q) == squared)

# iterating adjoints composes the underlying maps (and multiplies the
# powers); the defect of the exchange identity is identically zero
Q = PolyMap((
    HomPoly(1, 2, {(2,): Fraction(1)}),
    HomPoly(1, 2, {(2,): Fraction(-1)}),
))
q2 = HomPoly(2, 1, {(1, 0): Fraction(1), (0, 1): Fraction(2)})
x = (Fraction(1), Fraction(2))
print("composition identity defect:",
      composition_identity_defect(P, Q, 2, 1, 1, q2, x))

# the evaluation embedding J(x): q |-> q(x)^m makes the adjoint square
# commute against evaluation on both sides
print("diagram defect:", diagram_defect(P, 2, 1, 1, 2, q, x))
