"""
Cubic threefolds with degenerate Gauss map
==========================================

Cones, the vanishing-Hessian cubic and the two developable families are
told apart by a few exact invariants, which survive a change of
coordinates.
"""

from apolarity.classify import canonical_form, classify, random_pgl_conjugate
from apolarity.polyring import parse_polynomial

for kind in ["SECANT_RNC", "JOIN_CONICS", "PERAZZO_S12", "FERMAT"]:
    f = canonical_form(kind).form
    c = classify(f)
    print(f"{kind:12s} {c.label.value:16s} dual_dim={c.dual_dim} stab_dim={c.stab_dim}")

# the label does not depend on coordinates
f = canonical_form("JOIN_CONICS").form
g = random_pgl_conjugate(f, seed=3)
print("conjugate:", g)
print("label:", classify(g, seed=3).label.value)

# a cone over a plane cubic curve
c = classify(parse_polynomial("x0^3 + x1^3 + x2^3", 5))
print(c.label.value, "with vertex of dimension", c.vertex_dim)
