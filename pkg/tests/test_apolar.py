import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apolarity.apolar import (
    JordanType,
    ann_generators,
    ann_generators_match,
    build_algebra,
    catalecticant,
    generic_jordan_type,
    has_slp,
    has_vanishing_hessian,
    higher_hessian,
    is_cone,
    is_lefschetz_element,
    jordan_type,
    multiplication_matrix,
)
from apolarity.kernel import Matrix, det_fraction_free, rank
from apolarity.polyring import DiffOperator, Form, Polynomial, apply, monomials, parse_operator, parse_polynomial

from conftest import same_poly

# Normal-form ideal of the vanishing-Hessian cubic as it is usually printed,
# i.e. for the contraction action.
PERAZZO_IDEAL = ["X0^2", "X0*X1", "X0*X2", "X1^2", "X1*X2", "X2^2", "X0*X4", "X2*X3",
                 "X1*X3 - X2*X4", "X0*X3 - X1*X4",
                 "X3^3", "X3^2*X4", "X3*X4^2", "X4^3"]


def random_form(seed, nvars, degree, bound=3, density=1.0):
    rng = random.Random(seed)
    while True:
        terms = {m: rng.randint(-bound, bound) for m in monomials(nvars, degree)
                 if rng.random() < density}
        p = Polynomial(nvars, terms)
        if p:
            return Form.of(p)


forms = st.builds(random_form, st.integers(0, 10**6), st.integers(2, 4), st.integers(2, 4),
                  density=st.sampled_from([0.3, 1.0]))


def test_perazzo_hilbert(perazzo, derived):
    assert list(build_algebra(perazzo).hilbert) == derived["perazzo_hilbert"]


def test_perazzo_cat1_rank(perazzo, derived):
    assert rank(catalecticant(perazzo, 1)) == derived["perazzo_cat1_rank"]


def test_fermat_hilbert(fermat, derived):
    assert list(build_algebra(fermat).hilbert) == derived["fermat_hilbert"]


def test_quintic_in_two_variables(derived):
    A = build_algebra(parse_polynomial("x0^5 + x1^5", 2))
    assert list(A.hilbert) == derived["quintic_hilbert"]
    rec = higher_hessian(A, 2)
    assert rec.matrix.rows == A.hilbert[2]
    assert same_poly(rec.symbolic_det, derived["quintic_hess2_det"])


def test_first_hessian_is_classical(fermat, derived):
    rec = higher_hessian(build_algebra(fermat), 1)
    assert same_poly(rec.symbolic_det, derived["fermat_hessian_det"])


def test_hessian_zero_needs_2k_le_d(perazzo):
    with pytest.raises(ValueError):
        higher_hessian(build_algebra(perazzo), 2)


def test_perazzo_ideal_needs_rescaling(perazzo):
    A = build_algebra(perazzo)
    literal = [parse_operator(s, 5) for s in PERAZZO_IDEAL]
    # with plain differentiation the printed ideal kills x0x3^2 + 2x1x3x4 + x2x4^2
    assert not ann_generators_match(A, literal, max_degree=4)
    other = build_algebra(parse_polynomial("x0*x3^2 + 2*x1*x3*x4 + x2*x4^2", 5))
    assert ann_generators_match(other, literal, max_degree=4)
    rescaled = [parse_operator(s, 5) for s in
                PERAZZO_IDEAL[:8] + ["2*X1*X3 - X2*X4", "X0*X3 - 2*X1*X4"] + PERAZZO_IDEAL[10:]]
    assert ann_generators_match(A, rescaled, max_degree=4)


def test_ann_generators_round_trip(fermat):
    A = build_algebra(fermat)
    assert ann_generators_match(A, ann_generators(A))
    assert not ann_generators_match(A, ann_generators(A)[1:])


def test_ann_generators_match_rejects_inhomogeneous(fermat):
    with pytest.raises(ValueError):
        ann_generators_match(build_algebra(fermat), [parse_operator("X0 + X1^2", 5)])


@settings(max_examples=30, deadline=None)
@given(forms)
def test_hilbert_palindromic(f):
    h = build_algebra(f).hilbert
    assert h == h[::-1]
    assert h[0] == 1


@settings(max_examples=20, deadline=None)
@given(forms)
def test_annihilator_kills_f(f):
    A = build_algebra(f)
    for g in ann_generators(A):
        assert apply(g, f).is_zero()


@settings(max_examples=20, deadline=None)
@given(forms)
def test_perfect_pairing(f):
    # A_k x A_{d-k} -> A_d = Q is nondegenerate
    A = build_algebra(f)
    d = A.socle_degree
    for k in range(d + 1):
        ops_k = [DiffOperator.monomial(a) for a in A.bases[k]]
        ops_dk = [DiffOperator.monomial(b) for b in A.bases[d - k]]
        pairing = Matrix(len(ops_k), len(ops_dk),
                         [apply(a * b, f).coefficient((0,) * f.nvars)
                          for a in ops_k for b in ops_dk])
        assert det_fraction_free(pairing) != 0


@settings(max_examples=20, deadline=None)
@given(forms)
def test_slp_iff_jordan_is_hilbert_dual(f):
    A = build_algebra(f)
    holds, witness = has_slp(A)
    dual = JordanType(A.hilbert).dual()
    assert (generic_jordan_type(A) == dual) == holds
    if holds:
        assert is_lefschetz_element(A, witness)
        assert jordan_type(A, witness) == dual


def test_perazzo_slp_fails(perazzo):
    A = build_algebra(perazzo)
    assert has_slp(A) == (False, None)
    assert not is_lefschetz_element(A, [1] * 5)


def test_fermat_slp_witness(fermat, derived):
    A = build_algebra(fermat)
    holds, witness = has_slp(A)
    assert holds
    assert witness == (1,) * 5
    value = det_fraction_free(higher_hessian(A, 1).matrix.map(lambda p: p(*witness)))
    assert value == derived["fermat_hess_at_ones"]


def test_jordan_types_against_oracle(perazzo, fermat, derived):
    P = build_algebra(perazzo)
    F = build_algebra(fermat)
    assert list(jordan_type(P, [1] * 5).parts) == derived["perazzo_jordan_ones"]
    assert list(jordan_type(P, [2, -1, 3, 1, -2]).parts) == derived["perazzo_jordan_generic"]
    assert list(generic_jordan_type(P).parts) == derived["perazzo_jordan_generic"]
    assert list(jordan_type(F, [1, 0, 0, 0, 0]).parts) == derived["fermat_jordan_x0"]
    assert list(generic_jordan_type(F).parts) == derived["fermat_jordan_generic"]
    assert jordan_type(P, [0] * 5).parts == (1,) * 12


def test_perazzo_multiplication_rank(perazzo, derived):
    M = multiplication_matrix(build_algebra(perazzo), [2, -1, 3, 1, -2], 1)
    assert rank(M) == derived["perazzo_mult_k1_rank_generic"]


def test_jordan_type_helpers():
    j = JordanType((1, 4, 2, 2))
    assert j.parts == (4, 2, 2, 1)
    assert str(j) == "4^1⊕2^2⊕1^1"
    assert j.dual() == JordanType((4, 3, 1, 1))
    assert j.dual().dual() == j
    assert JordanType((4, 2, 2, 2, 1, 1)).dominated_by(JordanType((4, 2, 2, 2, 2)))
    assert not JordanType((4, 2, 2, 2, 2)).dominated_by(JordanType((4, 2, 2, 2, 1, 1)))
    # a single 3x3 nilpotent block: ranks 3, 2, 1, 0
    assert JordanType.from_ranks([3, 2, 1, 0], 3) == JordanType((3,))


def test_cones(derived):
    assert is_cone(parse_polynomial("x0^3", 5)) == (True, 3)
    g = parse_polynomial("x0*x3^2 + x1*x3*x4", 5)
    assert is_cone(g) == (True, derived["cone_x0x3sq_x1x3x4_nullity"] - 1)


def test_vanishing_hessian(perazzo, fermat):
    assert has_vanishing_hessian(perazzo)
    assert not has_vanishing_hessian(fermat)
    assert has_vanishing_hessian(parse_polynomial("x0^3 + x1^3", 3))


def test_coordinates_rejects_non_derivatives(fermat):
    A = build_algebra(fermat)
    with pytest.raises(ValueError):
        A.coordinates(1, parse_polynomial("x0*x1", 5))


def test_jordan_rejects_bad_length(perazzo):
    with pytest.raises(ValueError):
        jordan_type(build_algebra(perazzo), [Fraction(1)] * 4)
