"""
Inverse systems and the algebra of a cubic
==========================================

Differential operators act on forms; the ones killing ``f`` form an ideal
and the quotient is a graded Artinian Gorenstein algebra.
"""

from apolarity.apolar import ann_generators, build_algebra, catalecticant
from apolarity.kernel import rank
from apolarity.polyring import apply, gradient, parse_operator, parse_polynomial

f = parse_polynomial("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5)
print("f =", f)

# operators act by plain differentiation
print("X3^2 f =", apply(parse_operator("X3^2", 5), f))
print("gradient:", [str(g) for g in gradient(f)])

# the Hilbert vector is the list of catalecticant ranks
print("ranks:", [rank(catalecticant(f, k)) for k in range(4)])
A = build_algebra(f)
print("hilbert:", A.hilbert, "dim A =", A.dimension)

# quadrics in the annihilator
quadrics = [g for g in ann_generators(A) if g.degree == 2]
print(len(quadrics), "quadrics kill f, e.g.", quadrics[0])
