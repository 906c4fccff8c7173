"""
Homogeneous polynomials, exact arithmetic and polarization
==========================================================

Everything here runs over Fractions, so every printed identity is exact.
"""
from fractions import Fraction

from polyadjoint import (
    HomPoly,
    PolyMap,
    additivity_defect,
    enumerate_multi_indices,
    polarize,
)

# The monomial basis in a fixed descending-lex order: coefficient vectors,
# matrices and serialized files all agree on this ordering.
print("degree-3 monomials in two variables:", enumerate_multi_indices(2, 3))

# p(x, y) = x^3 - 2 x y^2, q(x, y) = x y
p = HomPoly(2, 3, {(3, 0): Fraction(1), (1, 2): Fraction(-2)})
q = HomPoly(2, 2, {(1, 1): Fraction(1)})
x = (Fraction(2), Fraction(1, 2))
print("p(2, 1/2) =", p.eval(x))
print("(p*q)(2, 1/2) =", (p * q).eval(x), "=", p.eval(x) * q.eval(x))

# polarize recovers the unique symmetric multilinear form behind a
# homogeneous polynomial; restitution plugs the same point into every slot
form = polarize(q)
e1, e2 = (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))
print("polar form of xy at (e1, e2):", form.apply([e1, e2]))
print("restitution check:", form.apply([x, x]) == q.eval(x))

# the additivity defect of a polynomial map collects all mixed terms of
# R(x + y) - R(x) - R(y); it vanishes exactly when the map is linear
R = PolyMap((HomPoly(1, 2, {(2,): Fraction(1)}),))
W = additivity_defect(R)
print("defect of x^2 on the doubled variables:", dict(W.components[0].coeffs))

L = PolyMap((HomPoly(1, 1, {(1,): Fraction(5)}),))
print("defect of a linear map is zero:", additivity_defect(L).is_zero)
