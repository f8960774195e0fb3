"""Artinian Gorenstein algebras ``A_f = Q / Ann_f`` of a form ``f``.

Everything is computed degree by degree from catalecticant matrices
``Q_k -> R_{d-k}, alpha -> alpha(f)``: annihilators are their kernels,
``A_k`` is identified with their image, and multiplication by a linear
form ``l`` becomes differentiation of ``alpha(f)`` in the direction ``l``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .kernel import Matrix, det_fraction_free, kernel_basis, rank, row_reduce, solve
from .polyring import (
    DiffOperator,
    Form,
    Polynomial,
    apply,
    evaluate,
    hessian_matrix,
    monomials,
)

__all__ = [
    "AGAlgebra",
    "JordanType",
    "HessianRecord",
    "GenericityError",
    "catalecticant",
    "build_algebra",
    "ann_generators_match",
    "ann_generators",
    "higher_hessian",
    "is_lefschetz_element",
    "has_slp",
    "multiplication_matrix",
    "jordan_type",
    "generic_jordan_type",
    "is_cone",
    "has_vanishing_hessian",
]


class GenericityError(RuntimeError):
    """Random sampling did not reach a generic point within the retry cap."""


def catalecticant(f, k):
    """Matrix of ``Q_k -> R_{d-k}``; columns follow ``monomials(n, k)``."""
    d = f.degree
    n = f.nvars
    rows = monomials(n, d - k)
    cols = monomials(n, k)
    columns = [apply(DiffOperator.monomial(a), f).coefficient_vector(rows) for a in cols]
    return Matrix.from_columns(columns, len(rows))


@dataclass(frozen=True)
class JordanType:
    """A partition, kept non-increasing."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts if p > 0), reverse=True))
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_ranks(cls, ranks, size):
        """Partition from ``ranks[j] = rank(M^j)`` of a nilpotent ``size x size`` matrix."""
        ranks = list(ranks) + [0]
        parts = []
        # blocks of size >= j: r_{j-1} - r_j; exactly j: difference of consecutive counts
        at_least = [ranks[j - 1] - ranks[j] for j in range(1, len(ranks))] + [0]
        for j in range(1, len(at_least)):
            parts += [j] * (at_least[j - 1] - at_least[j])
        assert sum(parts) == size
        return cls(tuple(parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    @property
    def size(self):
        return sum(self.parts)

    def dual(self):
        if not self.parts:
            return JordanType(())
        return JordanType(tuple(sum(1 for p in self.parts if p > i)
                                for i in range(self.parts[0])))

    def dominated_by(self, other):
        """``self <= other`` in the dominance order."""
        a, b = list(self.parts), list(other.parts)
        n = max(len(a), len(b))
        a += [0] * (n - len(a))
        b += [0] * (n - len(b))
        sa = sb = 0
        for x, y in zip(a, b):
            sa += x
            sb += y
            if sa > sb:
                return False
        return True

    def __str__(self):
        groups = []
        for p in self.parts:
            if groups and groups[-1][0] == p:
                groups[-1][1] += 1
            else:
                groups.append([p, 1])
        return "⊕".join(f"{p}^{e}" for p, e in groups) or "0"


@dataclass(frozen=True)
class HessianRecord:
    k: int
    matrix: Matrix
    symbolic_det: Polynomial


@dataclass(frozen=True, eq=False)
class AGAlgebra:
    """Graded data of ``A_f``.

    ``bases[k]`` lists the dual monomials whose classes form the chosen
    basis of ``A_k``; ``ann_kernels[k]`` is a basis of ``(Ann_f)_k`` as
    coefficient vectors over ``monomials(nvars, k)``.
    """

    f: Form
    socle_degree: int
    bases: tuple
    ann_kernels: tuple
    hilbert: tuple
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def nvars(self):
        return self.f.nvars

    @property
    def dimension(self):
        return sum(self.hilbert)

    def basis_images(self, k):
        """``alpha(f)`` for the basis monomials ``alpha`` of ``A_k``."""
        key = ("images", k)
        if key not in self._cache:
            self._cache[key] = [apply(DiffOperator.monomial(a), self.f) for a in self.bases[k]]
        return self._cache[key]

    def coordinates(self, k, g):
        """Coordinates in the basis of ``A_k`` of the class whose image is ``g = alpha(f)``."""
        d = self.socle_degree
        target = monomials(self.nvars, d - k)
        key = ("images_matrix", k)
        if key not in self._cache:
            cols = [p.coefficient_vector(target) for p in self.basis_images(k)]
            self._cache[key] = Matrix.from_columns(cols, len(target))
        x = solve(self._cache[key], g.coefficient_vector(target))
        if x is None:
            raise ValueError(f"{g} is not a derivative of order {k} of f")
        return x


def build_algebra(f):
    f = Form.of(f)
    d = f.degree
    n = f.nvars
    bases, kernels, hilbert = [], [], []
    for k in range(d + 1):
        cat = catalecticant(f, k)
        cols = monomials(n, k)
        _, pivots = row_reduce(cat)
        bases.append(tuple(cols[j] for j in pivots))
        kernels.append(tuple(tuple(v) for v in kernel_basis(cat)))
        hilbert.append(len(pivots))
    return AGAlgebra(f, d, tuple(bases), tuple(kernels), tuple(hilbert))


def ann_generators(algebra):
    """Operators spanning ``(Ann_f)_k`` for ``k <= d`` plus all monomials of degree ``d+1``."""
    n = algebra.nvars
    gens = []
    for k, kernel in enumerate(algebra.ann_kernels):
        cols = monomials(n, k)
        for v in kernel:
            gens.append(DiffOperator(n, {m: c for m, c in zip(cols, v) if c}))
    gens += [DiffOperator.monomial(m) for m in monomials(n, algebra.socle_degree + 1)]
    return gens


def _ann_rank(algebra, k):
    n = algebra.nvars
    total = len(monomials(n, k))
    if k > algebra.socle_degree:
        return total
    return len(algebra.ann_kernels[k])


def ann_generators_match(algebra, generators, max_degree=None):
    """Whether the ideal spanned by ``generators`` equals ``Ann_f`` in degrees ``<= max_degree``.

    ``max_degree`` defaults to ``d + 1``; agreement is only checked up to it.
    Generators must be homogeneous.
    """
    n = algebra.nvars
    d = algebra.socle_degree
    if max_degree is None:
        max_degree = d + 1
    gens = []
    for g in generators:
        g = DiffOperator.of(g)
        if g.nvars != n:
            raise ValueError("generator has the wrong number of variables")
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise ValueError(f"generator {g} is not homogeneous")
        gens.append(g)
    for k in range(max_degree + 1):
        basis = monomials(n, k)
        span = []
        for g in gens:
            if g.degree > k:
                continue
            for m in monomials(n, k - g.degree):
                span.append((g * DiffOperator.monomial(m)).coefficient_vector(basis))
        r_span = rank(Matrix.from_rows(span, len(basis))) if span else 0
        r_ann = _ann_rank(algebra, k)
        if r_span != r_ann:
            return False
        if k <= d and r_ann:
            joint = span + [list(v) for v in algebra.ann_kernels[k]]
            if rank(Matrix.from_rows(joint, len(basis))) != r_ann:
                return False
    return True


def higher_hessian(algebra, k):
    """The ``k``-th Hessian ``[alpha_i(alpha_j(f))]`` on the stored basis of ``A_k``."""
    d = algebra.socle_degree
    if 2 * k > d:
        raise ValueError(f"k-th Hessian needs 2k <= d (k={k}, d={d})")
    key = ("hessian", k)
    if key not in algebra._cache:
        ops = [DiffOperator.monomial(a) for a in algebra.bases[k]]
        s = len(ops)
        entries = [apply(ops[i] * ops[j], algebra.f) for i in range(s) for j in range(s)]
        M = Matrix(s, s, entries)
        det = det_fraction_free(M)
        if not isinstance(det, Polynomial):
            det = Polynomial.constant(det, algebra.nvars)
        algebra._cache[key] = HessianRecord(k, M, det)
    return algebra._cache[key]


def is_lefschetz_element(algebra, a):
    """Whether ``sum a_i X_i`` is a strong Lefschetz element (all ``hess^k(a) != 0``)."""
    a = [Fraction(x) for x in a]
    if len(a) != algebra.nvars:
        raise ValueError("element has the wrong number of coordinates")
    for k in range(algebra.socle_degree // 2 + 1):
        M = higher_hessian(algebra, k).matrix.map(lambda p: evaluate(p, a))
        if det_fraction_free(M) == 0:
            return False
    return True


def has_slp(algebra, seed=0, bound=5, max_tries=200):
    """Decide the strong Lefschetz property and, if it holds, find a witness.

    Returns ``(holds, witness)``.  The all-ones vector is tried first, then
    seeded random integer vectors in a slowly widening box.
    """
    dets = [higher_hessian(algebra, k).symbolic_det
            for k in range(algebra.socle_degree // 2 + 1)]
    if any(p.is_zero() for p in dets):
        return False, None
    n = algebra.nvars
    candidate = (Fraction(1),) * n
    rng = random.Random(seed)
    for attempt in range(max_tries):
        if all(evaluate(p, candidate) != 0 for p in dets):
            return True, candidate
        b = bound * (1 + attempt // 20)
        candidate = tuple(Fraction(rng.randint(-b, b)) for _ in range(n))
    raise GenericityError("no Lefschetz witness found although all Hessians are nonzero")


def multiplication_matrix(algebra, l, k):
    """Matrix of ``mu_l: A_k -> A_{k+1}`` in the stored bases."""
    d = algebra.socle_degree
    if not 0 <= k < d:
        raise ValueError(f"need 0 <= k < d (k={k}, d={d})")
    l = [Fraction(x) for x in l]
    if len(l) != algebra.nvars:
        raise ValueError("linear form has the wrong number of coordinates")
    op = DiffOperator.linear(l)
    cols = [algebra.coordinates(k + 1, apply(op, g)) for g in algebra.basis_images(k)]
    return Matrix.from_columns(cols, algebra.hilbert[k + 1])


def _full_multiplication(algebra, l):
    offsets = [0]
    for a in algebra.hilbert:
        offsets.append(offsets[-1] + a)
    size = offsets[-1]
    entries = [[Fraction(0)] * size for _ in range(size)]
    for k in range(algebra.socle_degree):
        block = multiplication_matrix(algebra, l, k)
        for i in range(block.rows):
            for j in range(block.cols):
                entries[offsets[k + 1] + i][offsets[k] + j] = block[i, j]
    return Matrix.from_rows(entries, size)


def jordan_type(algebra, l):
    """Jordan type of multiplication by ``l = sum l_i X_i`` on ``A_f``."""
    M = _full_multiplication(algebra, l)
    size = M.rows
    ranks = [size]
    P = M
    while ranks[-1]:
        ranks.append(rank(P))
        P = P @ M
    return JordanType.from_ranks(ranks, size)


def generic_jordan_type(algebra, seed=0, samples=3, bound=5, rounds=6):
    """Jordan type at a generic linear form, by seeded sampling.

    Each round draws ``samples`` forms with integer coefficients in
    ``[-bound, bound]``; if one sampled type dominates every other it is
    returned, otherwise the box doubles and another round is drawn.
    """
    rng = random.Random(seed)
    seen = []
    n = algebra.nvars
    for _ in range(rounds):
        for _ in range(samples):
            l = [rng.randint(-bound, bound) for _ in range(n)]
            seen.append(jordan_type(algebra, l))
        top = max(seen, key=lambda j: tuple(j.parts))
        if all(j.dominated_by(top) for j in seen):
            return top
        bound *= 2
        samples += 1
    raise GenericityError("sampled Jordan types stayed incomparable; input looks ill-conditioned")


def is_cone(f):
    """``(is_cone, vertex_dim)``: vertex_dim is the projective dimension of the vertex, -1 if empty."""
    f = Form.of(f)
    nullity = len(kernel_basis(catalecticant(f, 1)))
    return nullity > 0, nullity - 1


def has_vanishing_hessian(f):
    return det_fraction_free(hessian_matrix(f)) == 0
