"""
Degrees of loci by Schubert calculus
====================================

Chow rings of Grassmannians, Chern and Segre classes of the tautological
bundles, and the degrees of three loci in the space of cubic threefolds.
"""

from apolarity.schubert import (
    ChowClass,
    GrassContext,
    degree_cone_locus,
    degree_intersection_locus,
    degree_vanishing_hessian_locus,
    integral,
    schubert_class,
    segre,
    sym_power,
    dual,
    tautological_bundles,
)

ctx = GrassContext(2, 4)
s1 = ChowClass.q(ctx, 1)
print("lines meeting four general lines:", integral(s1 ** 4))
print("sigma_1^2 =", (s1 * s1).schubert_expansion())
print("Giambelli sigma_(1,1) =", schubert_class(ctx, (1, 1)))

# Segre classes of Sym^3 P* on P^4 count cones
P4 = GrassContext(1, 5)
_, P = tautological_bundles(P4)
F = sym_power(3, dual(P))
print("s_4(Sym^3 P*) integrates to", integral(segre(F).component(4)))
print("cone locus degree:", degree_cone_locus(4, 3))

print("vanishing Hessian locus (dim, deg):", degree_vanishing_hessian_locus())
print("its cones (dim, deg):", degree_intersection_locus())
print("same, Segre class taken as c^-1:", degree_intersection_locus("inverse"))
