"""
Higher Hessians, Lefschetz elements and Jordan types
====================================================

A linear form is a strong Lefschetz element when every higher Hessian is
nonzero at it.  The Jordan type of multiplication by it records how far
the algebra is from having that property.
"""

from apolarity.apolar import (
    JordanType,
    build_algebra,
    generic_jordan_type,
    has_slp,
    higher_hessian,
    jordan_type,
)
from apolarity.polyring import parse_polynomial

fermat = build_algebra(parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", 5))
print("hess^1 =", higher_hessian(fermat, 1).symbolic_det)
holds, witness = has_slp(fermat)
print("SLP:", holds, "witness", [str(c) for c in witness])
print("generic Jordan type:", generic_jordan_type(fermat))
print("dual of the Hilbert vector:", JordanType(fermat.hilbert).dual())

# a special element gives a smaller type
print("at x0:", jordan_type(fermat, [1, 0, 0, 0, 0]))

perazzo = build_algebra(parse_polynomial("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5))
print("Perazzo hess^1 =", higher_hessian(perazzo, 1).symbolic_det)
print("SLP:", has_slp(perazzo))
print("generic Jordan type:", generic_jordan_type(perazzo))
