"""Chow rings of Grassmannians and Chern-class calculus.

A class on ``G(k, n)`` (``k``-dimensional subspaces of an ``n``-dimensional
space) is a polynomial in ``q_1 .. q_{n-k}``, the Chern classes of the
universal quotient bundle, truncated above ``k (n - k)``.  Conversion to the
Schubert basis happens only when needed, by iterated Pieri products; since
``q_i`` is the special Schubert class ``sigma_i``, this is exact in the ring.

Characteristic classes of bundles built by symmetric/exterior powers and
tensor products are computed with the splitting principle: the new total
Chern class is expanded in formal roots and rewritten in elementary
symmetric functions by leading-term subtraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb

from .kernel import Matrix, det_cofactor

__all__ = [
    "GrassContext",
    "ChowClass",
    "BundleClass",
    "InconsistencyError",
    "pieri",
    "schubert_class",
    "tautological_bundles",
    "trivial_bundle",
    "line_bundle",
    "dual",
    "sym_power",
    "ext_power",
    "tensor",
    "tensor_line",
    "direct_sum",
    "difference",
    "scale",
    "segre",
    "SEGRE_CONVENTIONS",
    "integral",
    "degree_cone_locus",
    "cone_locus_dimension",
    "degree_vanishing_hessian_locus",
    "degree_intersection_locus",
]


class InconsistencyError(ArithmeticError):
    """Two independent routes to the same number disagreed."""


@dataclass(frozen=True)
class GrassContext:
    k: int
    n: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")

    @property
    def rank_q(self):
        return self.n - self.k

    @property
    def dim(self):
        return self.k * (self.n - self.k)

    @property
    def box(self):
        return (self.n - self.k,) * self.k

    def weight(self, exps):
        return sum((i + 1) * e for i, e in enumerate(exps))


# ---------------------------------------------------------------------------
# Pieri rule

def _strips(lam, i, rows, width):
    """Partitions ``mu`` with ``mu / lam`` a horizontal strip of size ``i`` inside the box."""
    lam = list(lam) + [0] * (rows - len(lam))
    out = []

    def rec(j, left, acc):
        if j == rows:
            if left == 0:
                out.append(tuple(x for x in acc if x))
            return
        upper = width if j == 0 else lam[j - 1]
        for add in range(min(left, upper - lam[j]), -1, -1):
            rec(j + 1, left - add, acc + [lam[j] + add])

    rec(0, i, [])
    return out


def pieri(expansion, i, ctx):
    """Multiply a Schubert-basis dict by ``sigma_i``."""
    out = {}
    for lam, c in expansion.items():
        for mu in _strips(lam, i, ctx.k, ctx.rank_q):
            out[mu] = out.get(mu, 0) + c
    return {m: c for m, c in out.items() if c}


@lru_cache(maxsize=None)
def _monomial_expansion(ctx, exps):
    if not any(exps):
        return ((), 1),
    i = max(j for j, e in enumerate(exps) if e)
    rest = list(exps)
    rest[i] -= 1
    base = dict(_monomial_expansion(ctx, tuple(rest)))
    return tuple(pieri(base, i + 1, ctx).items())


# ---------------------------------------------------------------------------
# classes

class ChowClass:
    """Element of ``A*(G(k, n))`` as a truncated polynomial in ``q_1 .. q_{n-k}``.

    Equality is equality in the Chow ring (compared in the Schubert basis).
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if c and ctx.weight(m) <= ctx.dim:
                clean[m] = clean.get(m, 0) + c
                if not clean[m]:
                    del clean[m]
        self.terms = clean

    @classmethod
    def one(cls, ctx):
        return cls(ctx, {(0,) * ctx.rank_q: 1})

    @classmethod
    def q(cls, ctx, i):
        """``q_i = c_i(Q)``; zero outside ``0 <= i <= n-k``."""
        if i == 0:
            return cls.one(ctx)
        if not 1 <= i <= ctx.rank_q:
            return cls(ctx)
        return cls(ctx, {tuple(int(j == i - 1) for j in range(ctx.rank_q)): 1})

    def _coerce(self, other):
        if isinstance(other, ChowClass):
            if other.ctx != self.ctx:
                raise ValueError("classes on different Grassmannians")
            return other
        if isinstance(other, int):
            return ChowClass.one(self.ctx) * other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return ChowClass(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowClass(self.ctx, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ctx = self.ctx
        top = ctx.dim
        terms = {}
        for m1, c1 in self.terms.items():
            w1 = ctx.weight(m1)
            for m2, c2 in other.terms.items():
                if w1 + ctx.weight(m2) > top:
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return ChowClass(ctx, terms)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = ChowClass.one(self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def component(self, i):
        """Homogeneous part of degree ``i``."""
        return ChowClass(self.ctx, {m: c for m, c in self.terms.items()
                                    if self.ctx.weight(m) == i})

    def constant_term(self):
        return self.terms.get((0,) * self.ctx.rank_q, 0)

    def is_homogeneous(self, i):
        return all(self.ctx.weight(m) == i for m in self.terms)

    def inverse(self):
        """Multiplicative inverse of a class with constant term 1."""
        if self.constant_term() != 1:
            raise ValueError("only classes with constant term 1 are inverted")
        x = ChowClass.one(self.ctx) - self
        result = ChowClass.one(self.ctx)
        power = ChowClass.one(self.ctx)
        for _ in range(self.ctx.dim):
            power = power * x
            if not power.terms:
                break
            result = result + power
        return result

    def schubert_expansion(self):
        """``{partition: coefficient}`` in the Schubert basis, all degrees."""
        out = {}
        for m, c in self.terms.items():
            for lam, a in _monomial_expansion(self.ctx, m):
                out[lam] = out.get(lam, 0) + a * c
        return {lam: c for lam, c in out.items() if c}

    def __eq__(self, other):
        if isinstance(other, int):
            other = ChowClass.one(self.ctx) * other
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.ctx == other.ctx and (self - other).schubert_expansion() == {}

    def __hash__(self):
        return hash((self.ctx, frozenset(self.schubert_expansion().items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda t: (self.ctx.weight(t[0]), t[0])):
            mono = "*".join(f"q{i + 1}" + (f"^{e}" if e > 1 else "")
                            for i, e in enumerate(m) if e)
            if not mono:
                parts.append(str(c))
            elif abs(c) == 1:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def schubert_class(ctx, lam):
    """``sigma_lam`` as a polynomial in the ``q_i`` (Giambelli determinant)."""
    lam = [x for x in lam if x]
    if len(lam) > ctx.k or any(x > ctx.rank_q for x in lam):
        return ChowClass(ctx)
    r = len(lam)
    if r == 0:
        return ChowClass.one(ctx)
    M = Matrix(r, r, [ChowClass.q(ctx, lam[i] + j - i) for i in range(r) for j in range(r)])
    return det_cofactor(M)


def integral(c):
    """Degree of the top-dimensional part of ``c``."""
    ctx = c.ctx
    top = c.component(ctx.dim)
    return top.schubert_expansion().get(ctx.box, 0)


# ---------------------------------------------------------------------------
# bundles

@dataclass(frozen=True, eq=False)
class BundleClass:
    """Rank (possibly virtual, possibly negative) and total Chern class."""

    rank: int
    chern: ChowClass

    def __post_init__(self):
        if self.chern.constant_term() != 1:
            raise ValueError("total Chern class must start with 1")

    @property
    def ctx(self):
        return self.chern.ctx

    def c(self, i):
        return self.chern.component(i)

    def chern_classes(self, upto=None):
        upto = self.ctx.dim if upto is None else upto
        return [self.c(i) for i in range(upto + 1)]

    def __eq__(self, other):
        return (isinstance(other, BundleClass) and self.rank == other.rank
                and self.chern == other.chern)

    __hash__ = None


def tautological_bundles(ctx):
    """``(S, Q)``: the rank ``k`` subbundle and the rank ``n - k`` quotient."""
    cq = sum((ChowClass.q(ctx, i) for i in range(1, ctx.rank_q + 1)), ChowClass.one(ctx))
    Q = BundleClass(ctx.rank_q, cq)
    S = BundleClass(ctx.k, cq.inverse())
    return S, Q


def trivial_bundle(ctx, rank):
    return BundleClass(rank, ChowClass.one(ctx))


def line_bundle(c1):
    return BundleClass(1, ChowClass.one(c1.ctx) + c1)


def dual(B):
    ctx = B.ctx
    terms = {m: (-c if ctx.weight(m) % 2 else c) for m, c in B.chern.terms.items()}
    return BundleClass(B.rank, ChowClass(ctx, terms))


def direct_sum(B1, B2):
    return BundleClass(B1.rank + B2.rank, B1.chern * B2.chern)


def difference(B1, B2):
    """The virtual bundle ``B1 - B2``: ``c = c(B1) / c(B2)``."""
    return BundleClass(B1.rank - B2.rank, B1.chern * B2.chern.inverse())


def scale(B, m):
    """``m`` copies of ``B`` (negative ``m`` gives a virtual bundle)."""
    return BundleClass(B.rank * m, B.chern ** m)


SEGRE_CONVENTIONS = ("inverse", "dual-inverse")


def segre(B, convention="inverse"):
    """Total Segre class.

    ``"inverse"``: ``s(B) = c(B)^-1``, so ``p_* h^(r-1+i) = s_i(B)`` on the
    bundle of lines ``P(B)``.  ``"dual-inverse"``: ``s(B) = c(B*)^-1``, which
    differs by the sign ``(-1)^i`` in degree ``i`` (the convention of
    Macaulay2's Schubert2 ``segre``).
    """
    if convention == "inverse":
        return B.chern.inverse()
    if convention == "dual-inverse":
        return dual(B).chern.inverse()
    raise ValueError(f"unknown Segre convention {convention!r}; use one of {SEGRE_CONVENTIONS}")


# --- splitting principle ----------------------------------------------------
# Root polynomials: dict exponent-tuple -> int over the concatenated root
# variables of several groups, truncated at total degree ``top``.

def _rp_mul(a, b, top):
    out = {}
    for m1, c1 in a.items():
        d1 = sum(m1)
        for m2, c2 in b.items():
            if d1 + sum(m2) > top:
                continue
            m = tuple(x + y for x, y in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def _chern_of_root_sums(linear_forms, nroots, top):
    """``prod (1 + L)`` over linear forms ``L`` in the roots, truncated."""
    one = (0,) * nroots
    poly = {one: 1}
    for L in linear_forms:
        factor = {one: 1}
        for i, a in enumerate(L):
            if a:
                factor[tuple(int(j == i) for j in range(nroots))] = a
        poly = _rp_mul(poly, factor, top)
    return poly


@lru_cache(maxsize=None)
def _elementary(group_sizes, g, i):
    """``e_i`` of root group ``g`` as a root polynomial."""
    offset = sum(group_sizes[:g])
    n = sum(group_sizes)
    out = {}
    for subset in combinations(range(group_sizes[g]), i):
        m = [0] * n
        for s in subset:
            m[offset + s] = 1
        out[tuple(m)] = 1
    return out


def _e_monomial(group_sizes, key, top):
    """Root polynomial of ``prod_g prod_i e_{g,i}^{key[g][i]}``."""
    n = sum(group_sizes)
    poly = {(0,) * n: 1}
    for g, exps in enumerate(key):
        for i, e in enumerate(exps):
            for _ in range(e):
                poly = _rp_mul(poly, _elementary(group_sizes, g, i + 1), top)
    return poly


def symmetric_reduce(poly, group_sizes, top):
    """Rewrite a polynomial symmetric in each root group via elementary symmetric functions.

    Returns ``{key: coeff}`` where ``key[g][i]`` is the exponent of
    ``e_{i+1}`` of group ``g``.  Classical leading-term subtraction in lex
    order.
    """
    group_sizes = tuple(group_sizes)
    poly = dict(poly)
    result = {}
    bounds = []
    offset = 0
    for s in group_sizes:
        bounds.append((offset, offset + s))
        offset += s
    while poly:
        lead = max(poly)
        c = poly[lead]
        key = []
        for lo, hi in bounds:
            lam = lead[lo:hi]
            if any(lam[j] < lam[j + 1] for j in range(len(lam) - 1)):
                raise ValueError("polynomial is not symmetric in its root groups")
            key.append(tuple(lam[j] - (lam[j + 1] if j + 1 < len(lam) else 0)
                             for j in range(len(lam))))
        key = tuple(key)
        result[key] = result.get(key, 0) + c
        for m, a in _e_monomial(group_sizes, key, top).items():
            v = poly.get(m, 0) - c * a
            if v:
                poly[m] = v
            else:
                poly.pop(m, None)
    return result


def _from_roots(linear_forms, bundles):
    """Total Chern class of the bundle whose roots are the given linear forms
    in the roots of ``bundles`` (concatenated)."""
    ctx = bundles[0].ctx
    sizes = tuple(B.rank for B in bundles)
    top = ctx.dim
    poly = _chern_of_root_sums(linear_forms, sum(sizes), top)
    reduced = symmetric_reduce(poly, sizes, top)
    classes = [B.chern_classes() for B in bundles]
    total = ChowClass(ctx)
    for key, c in reduced.items():
        term = ChowClass.one(ctx) * c
        for g, exps in enumerate(key):
            for i, e in enumerate(exps):
                if e:
                    term = term * classes[g][i + 1] ** e
        total = total + term
    return total


_MAX_ROOTS = 6
_MAX_POWER = 4


def _check_actual(B):
    if not 0 <= B.rank <= _MAX_ROOTS:
        raise ValueError(f"root calculus needs an actual bundle of rank <= {_MAX_ROOTS}, "
                         f"got rank {B.rank}")


def sym_power(d, B):
    """``Sym^d B`` by the splitting principle."""
    _check_actual(B)
    if not 0 <= d <= _MAX_POWER:
        raise ValueError(f"symmetric powers of degree > {_MAX_POWER} are not supported")
    r = B.rank
    forms = []
    for combo in combinations_with_replacement(range(r), d):
        L = [0] * r
        for i in combo:
            L[i] += 1
        forms.append(L)
    rank = comb(r + d - 1, d)
    if rank == 0 or r == 0:
        return trivial_bundle(B.ctx, rank)
    return BundleClass(rank, _from_roots(forms, [B]))


def ext_power(d, B):
    """``Lambda^d B`` by the splitting principle."""
    _check_actual(B)
    r = B.rank
    if not 0 <= d <= r:
        return trivial_bundle(B.ctx, 0)
    forms = []
    for combo in combinations(range(r), d):
        L = [0] * r
        for i in combo:
            L[i] = 1
        forms.append(L)
    if d == 0:
        return trivial_bundle(B.ctx, 1)
    return BundleClass(comb(r, d), _from_roots(forms, [B]))


def tensor(B1, B2):
    """``B1 (x) B2`` of two actual bundles, via roots of both."""
    _check_actual(B1)
    _check_actual(B2)
    r1, r2 = B1.rank, B2.rank
    if r1 == 0 or r2 == 0:
        return trivial_bundle(B1.ctx, 0)
    forms = []
    for i in range(r1):
        for j in range(r2):
            L = [0] * (r1 + r2)
            L[i] = 1
            L[r1 + j] = 1
            forms.append(L)
    return BundleClass(r1 * r2, _from_roots(forms, [B1, B2]))


def tensor_line(F, L):
    """``F (x) L`` for a line bundle ``L``:
    ``c_k = sum_i binom(r - i, k - i) c_i(F) c_1(L)^(k - i)``."""
    if L.rank != 1:
        raise ValueError(f"tensor_line needs a line bundle, got rank {L.rank}")
    if F.rank < 0:
        raise ValueError("tensor_line needs a bundle of non-negative rank")
    ctx = F.ctx
    r = F.rank
    l1 = L.c(1)
    cf = F.chern_classes()
    total = ChowClass(ctx)
    for k in range(min(r, ctx.dim) + 1):
        for i in range(k + 1):
            total = total + cf[i] * (l1 ** (k - i)) * comb(r - i, k - i)
    return BundleClass(r, total)


# ---------------------------------------------------------------------------
# the degree computations

def cone_locus_dimension(n, d):
    """Dimension of the locus of degree-``d`` cones in ``P^n``: ``n + binom(n+d-1, d) - 1``."""
    return n + comb(n + d - 1, d) - 1


def degree_cone_locus(n, d):
    """Degree of the locus of cones among degree-``d`` hypersurfaces in ``P^n``.

    ``int_{P^n} s_n(Sym^d P*)`` where ``P`` is the rank-``n`` tautological
    quotient; cross-checked against ``binom(binom(n+d-1, n), n)``.
    """
    ctx = GrassContext(1, n + 1)
    _, P = tautological_bundles(ctx)
    F = sym_power(d, dual(P))
    value = integral(segre(F).component(n))
    closed = comb(comb(n + d - 1, n), n)
    if value != closed:
        raise InconsistencyError(f"Segre route gives {value}, binomial formula {closed}")
    return value


def _vanishing_hessian_bundles():
    ctx = GrassContext(3, 5)
    _, Q = tautological_bundles(ctx)
    R = dual(Q)
    A = sym_power(2, R)
    C = tensor_line(R, ext_power(2, R))
    E = difference(scale(A, 5), C)
    return ctx, Q, A, C, E


def degree_vanishing_hessian_locus(segre_convention="inverse"):
    """``(dim, deg)`` of the closure of non-cone cubic threefolds with vanishing Hessian.

    Projective bundle ``P(E)`` over ``G(3, 5)`` with ``E = Sym^2 Q* (x) V* - Lambda^2 Q* (x) Q*``.
    """
    ctx, _, _, _, E = _vanishing_hessian_bundles()
    return ctx.dim + E.rank - 1, integral(segre(E, segre_convention).component(ctx.dim))


def degree_intersection_locus(segre_convention="dual-inverse"):
    """``(dim, deg)`` of its intersection with the cone locus:
    ``int 3 s_6(E) + (c_1(Sym^2 Q*) + c_1(Q)) s_5(E)``.

    The odd Segre class makes the value convention dependent: the default
    ``"dual-inverse"`` gives 116420, ``"inverse"`` gives 63340.
    """
    ctx, Q, A, C, E = _vanishing_hessian_bundles()
    s = segre(E, segre_convention)
    top = ctx.dim
    cls = s.component(top) * 3 + (A.c(1) + Q.c(1)) * s.component(top - 1)
    # P(T) is a P^2-bundle over G; E_1 = Sym^2 Q* (x) P* - Lambda^2 Q* (x) Q*
    dim_pt = ctx.dim + ctx.k - 1
    rank_e1 = A.rank * (ctx.n - 1) - C.rank
    return dim_pt + rank_e1 - 1, integral(cls)
