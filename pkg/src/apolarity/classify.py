"""Classification of cubic threefolds in P^4 with degenerate Gauss map.

Decision procedure:

1. linearly dependent partials            -> ``CONE``
2. vanishing Hessian (not a cone)         -> ``PERAZZO_S12``
3. three-dimensional dual variety         -> ``NON_DEVELOPABLE``
4. developable, told apart by the dimension of the infinitesimal
   stabiliser ``{A : D_A f in span(f)}``: 4 -> ``SECANT_RNC``,
   5 -> ``JOIN_CONICS``; anything else is reported as ``UNRECOGNIZED``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .apolar import GenericityError, build_algebra, has_vanishing_hessian, is_cone
from .kernel import Matrix, NumberField, det_fraction_free, kernel_basis, rank, rational_roots
from .polyring import (
    Form,
    Polynomial,
    evaluate,
    gradient,
    hessian_matrix,
    linear_substitution,
    monomials,
    parse_polynomial,
)

__all__ = [
    "Label",
    "CanonicalKind",
    "CanonicalForm",
    "CubicClass",
    "canonical_form",
    "random_pgl_conjugate",
    "stabilizer_dimension",
    "dual_variety_dimension",
    "classify",
    "STABILIZER_DIMENSIONS",
]


class Label(str, enum.Enum):
    CONE = "CONE"
    PERAZZO_S12 = "PERAZZO_S12"
    SECANT_RNC = "SECANT_RNC"
    JOIN_CONICS = "JOIN_CONICS"
    NON_DEVELOPABLE = "NON_DEVELOPABLE"
    UNRECOGNIZED = "UNRECOGNIZED"

    def __str__(self):
        return self.value


class CanonicalKind(str, enum.Enum):
    SECANT_RNC = "SECANT_RNC"
    JOIN_CONICS = "JOIN_CONICS"
    PERAZZO_S12 = "PERAZZO_S12"
    FERMAT = "FERMAT"
    RANDOM = "RANDOM"


# Stabiliser dimensions of the developable normal forms (scalars included).
# Re-derived by tests/assets/derive_constants.py.
STABILIZER_DIMENSIONS = {
    Label.SECANT_RNC: 4,
    Label.JOIN_CONICS: 5,
    Label.PERAZZO_S12: 7,
}

_EQUATIONS = {
    # normal form of the vanishing-Hessian cubic
    CanonicalKind.PERAZZO_S12: "x0*x3^2 + x1*x3*x4 + x2*x4^2",
    # det [[x0,x1,x2],[x1,x2,x3],[x2,x3,x4]]
    CanonicalKind.SECANT_RNC: "-x2^3 + 2*x1*x2*x3 - x0*x3^2 - x1^2*x4 + x0*x2*x4",
    # det [[x2,x1,x3],[x1,x0,0],[x3,0,x4]]: the section y12 = 0 of the symmetric
    # determinantal cubic; conics x1^2 = x0*x2 in {x3=x4=0} and x3^2 = x2*x4 in
    # {x0=x1=0}, meeting at e2
    CanonicalKind.JOIN_CONICS: "x0*x2*x4 - x0*x3^2 - x1^2*x4",
    CanonicalKind.FERMAT: "x0^3 + x1^3 + x2^3 + x3^3 + x4^3",
}


@dataclass(frozen=True)
class CanonicalForm:
    kind: CanonicalKind
    form: Form


@dataclass(frozen=True)
class CubicClass:
    label: Label
    is_cone: bool
    vertex_dim: int
    hess_vanishes: bool | None = None
    dual_dim: int | None = None
    stab_dim: int | None = None
    hilbert: tuple = ()
    diagnostics: tuple = field(default=(), compare=False)

    @property
    def invariants_record(self):
        return {
            "is_cone": self.is_cone,
            "vertex_dim": self.vertex_dim,
            "hess_vanishes": self.hess_vanishes,
            "dual_dim": self.dual_dim,
            "stab_dim": self.stab_dim,
            "hilbert": list(self.hilbert),
        }


def _random_cubic(seed, nvars=5, bound=3):
    rng = random.Random(seed)
    while True:
        terms = {m: rng.randint(-bound, bound) for m in monomials(nvars, 3)}
        p = Polynomial(nvars, terms)
        if p:
            return Form.of(p)


def canonical_form(kind, seed=0):
    """Normal-form cubic in five variables for ``kind``.

    ``RANDOM`` draws every coefficient uniformly from ``[-3, 3]``.
    """
    kind = CanonicalKind(kind)
    if kind is CanonicalKind.RANDOM:
        return CanonicalForm(kind, _random_cubic(seed))
    return CanonicalForm(kind, Form.of(parse_polynomial(_EQUATIONS[kind], 5)))


def random_invertible_matrix(n, rng, bound=3):
    while True:
        M = Matrix(n, n, [Fraction(rng.randint(-bound, bound)) for _ in range(n * n)])
        if det_fraction_free(M) != 0:
            return M


def random_pgl_conjugate(f, seed, bound=3):
    """``f(M x)`` for a seeded random invertible integer matrix ``M``."""
    rng = random.Random(seed)
    M = random_invertible_matrix(f.nvars, rng, bound)
    return Form.of(linear_substitution(f, M))


def stabilizer_dimension(f):
    """Dimension of ``{A in gl_n : sum A_ij x_i df/dx_j in span(f)}``."""
    f = Form.of(f)
    n = f.nvars
    basis = monomials(n, f.degree)
    grad = gradient(f)
    columns = []
    for i in range(n):
        xi = Polynomial.variable(i, n)
        for j in range(n):
            columns.append((xi * grad[j]).coefficient_vector(basis))
    columns.append((-f).coefficient_vector(basis))
    system = Matrix.from_columns(columns, len(basis))
    # (A, lambda) -> A is injective since f != 0
    return system.cols - rank(system)


def _line_restriction(f, p, q):
    """Coefficients (constant first) of ``t -> f(p + t q)``, by interpolation at t = 0..d."""
    d = f.degree
    values = [evaluate(f, [a + t * b for a, b in zip(p, q)]) for t in range(d + 1)]
    # Newton forward differences, then expand
    coeffs = [Fraction(0)] * (d + 1)
    diffs = list(values)
    newton = []
    for level in range(d + 1):
        newton.append(diffs[0])
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    # sum_k newton[k] * binom(t, k)
    basis = [Fraction(1)]  # coefficients of binom(t, k)
    for k in range(d + 1):
        if k > 0:
            nxt = [Fraction(0)] * (len(basis) + 1)
            for i, c in enumerate(basis):
                nxt[i + 1] += c / k
                nxt[i] -= c * (k - 1) / k
            basis = nxt
        for i, c in enumerate(basis):
            coeffs[i] += newton[k] * c
    return coeffs


def _sample_smooth_point(f, rng, bound, attempts):
    n = f.nvars
    grad = gradient(f)
    for _ in range(attempts):
        p = [Fraction(rng.randint(-bound, bound)) for _ in range(n)]
        q = [Fraction(rng.randint(-bound, bound)) for _ in range(n)]
        m = _line_restriction(f, p, q)
        if m[-1] == 0:
            continue
        roots = rational_roots(m)
        if roots:
            t = roots[rng.randrange(len(roots))]
        else:
            t = NumberField(m).generator()
        point = [a + t * b for a, b in zip(p, q)]
        if all(evaluate(g, point) == 0 for g in grad):
            continue
        return point
    return None


def dual_variety_dimension(f, seed=0, points=2, max_retries=20, bound=5):
    """Dimension of the dual variety of the cubic threefold ``V(f)``.

    The Hessian is evaluated at points where a random rational line meets
    ``V(f)`` (a rational root if there is one, otherwise in the cubic
    number field cut out by the line); the dimension is the largest rank
    seen minus 2.  Raises :class:`GenericityError` after ``max_retries``
    lines without a smooth point.
    """
    f = Form.of(f)
    if f.degree != 3 or f.nvars != 5:
        raise ValueError("expected a cubic form in 5 variables")
    if is_cone(f)[0]:
        raise ValueError("dual variety dimension is only computed for non-cones")
    rng = random.Random(seed)
    H = hessian_matrix(f)
    best = None
    for _ in range(points):
        point = _sample_smooth_point(f, rng, bound, max_retries)
        if point is None:
            raise GenericityError(f"no smooth point found on {max_retries} random lines")
        r = rank(H.map(lambda e: evaluate(e, point)))
        best = r if best is None else max(best, r)
    return best - 2


def classify(f, seed=0):
    f = Form.of(f)
    if f.degree != 3 or f.nvars != 5:
        raise ValueError("classify expects a cubic form in 5 variables")
    hilbert = build_algebra(f).hilbert
    cone, vdim = is_cone(f)
    if cone:
        return CubicClass(Label.CONE, True, vdim, hilbert=hilbert)
    hess0 = has_vanishing_hessian(f)
    stab = stabilizer_dimension(f)
    try:
        ddim = dual_variety_dimension(f, seed)
    except GenericityError as exc:
        return CubicClass(Label.UNRECOGNIZED, False, vdim, hess0, None, stab, hilbert,
                          diagnostics=(str(exc),))
    record = dict(is_cone=False, vertex_dim=vdim, hess_vanishes=hess0,
                  dual_dim=ddim, stab_dim=stab, hilbert=hilbert)
    if hess0:
        return CubicClass(Label.PERAZZO_S12, **record)
    if ddim == 3:
        return CubicClass(Label.NON_DEVELOPABLE, **record)
    if stab == STABILIZER_DIMENSIONS[Label.SECANT_RNC]:
        return CubicClass(Label.SECANT_RNC, **record)
    if stab == STABILIZER_DIMENSIONS[Label.JOIN_CONICS]:
        return CubicClass(Label.JOIN_CONICS, **record)
    return CubicClass(Label.UNRECOGNIZED, **record,
                      diagnostics=(f"developable (dual dim {ddim}) with stabiliser "
                                   f"dimension {stab}",))
