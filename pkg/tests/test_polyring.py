from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from apolarity.kernel import Matrix
from apolarity.polyring import (
    DiffOperator,
    Form,
    ParseError,
    Polynomial,
    apply,
    evaluate,
    gradient,
    hessian_matrix,
    linear_substitution,
    monomials,
    parse_operator,
    parse_polynomial,
)

from conftest import same_poly


def polys(nvars=3, max_deg=3, homogeneous=None):
    exps = st.tuples(*[st.integers(0, max_deg)] * nvars)
    if homogeneous is not None:
        exps = st.sampled_from(monomials(nvars, homogeneous))
    terms = st.dictionaries(exps, st.fractions(min_value=-5, max_value=5, max_denominator=4),
                            max_size=6)
    return terms.map(lambda t: Polynomial(nvars, t))


def ops(nvars=3, max_deg=3):
    return polys(nvars, max_deg).map(DiffOperator.of)


def test_monomial_count_and_order():
    ms = monomials(5, 3)
    assert len(ms) == 35
    assert ms[0] == (3, 0, 0, 0, 0)
    assert ms == sorted(ms, reverse=True)


def test_canonical_string(perazzo):
    assert str(perazzo) == "x0*x3^2 + x1*x3*x4 + x2*x4^2"
    assert str(parse_polynomial("-1/2 * x1^3", 3)) == "-1/2*x1^3"
    assert str(Polynomial(2)) == "0"


@given(polys())
def test_parse_round_trip(p):
    assert parse_polynomial(str(p), p.nvars) == p


@given(ops())
def test_operator_round_trip(g):
    assert parse_operator(str(g), g.nvars) == g


@pytest.mark.parametrize("text,pos", [("x0 +", 4), ("x0 ** 2", 4), ("x9", 0), ("2 $ x0", 2)])
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, 3)
    assert info.value.position == pos


def test_underscore_alias():
    assert parse_polynomial("x_0*x_2^2", 3) == parse_polynomial("x0*x2^2", 3)


def test_form_validation():
    with pytest.raises(ValueError):
        Form.of(parse_polynomial("x0 + x1^2", 2))
    with pytest.raises(ValueError):
        Form.of(Polynomial(2))
    assert Form.of(parse_polynomial("x0*x1", 2)).degree == 2


def test_perazzo_gradient(perazzo, derived):
    for g, expected in zip(gradient(perazzo), derived["perazzo_gradient"]):
        assert same_poly(g, expected)


def test_X3_squared(perazzo, derived):
    g = apply(parse_operator("X3^2", 5), perazzo)
    assert same_poly(g, derived["perazzo_X3sq"])


def test_apply_kills_high_powers(perazzo):
    assert apply(parse_operator("X0^2", 5), perazzo).is_zero()
    assert apply(parse_operator("X3^4", 5), perazzo).is_zero()


def test_evaluate(perazzo, derived):
    assert evaluate(perazzo, [1] * 5) == derived["perazzo_value_at_ones"]
    assert evaluate(perazzo, [Fraction(1, 2), 0, 0, 2, 0]) == 2


@given(polys(homogeneous=3))
def test_euler_identity(p):
    n = p.nvars
    lhs = sum((Polynomial.variable(i, n) * p.diff(i) for i in range(n)), Polynomial(n))
    assert lhs == p * 3


@given(ops(), ops(), polys(), st.fractions(-3, 3, max_denominator=3))
def test_apply_bilinear(a, b, f, c):
    assert apply(a + b * c, f) == apply(a, f) + apply(b, f) * c


@given(ops(max_deg=2), ops(max_deg=2), polys(max_deg=4))
def test_apply_is_a_module_action(a, b, f):
    assert apply(a * b, f) == apply(a, apply(b, f))


@given(polys(), polys())
def test_product_rule(p, q):
    for i in range(p.nvars):
        assert (p * q).diff(i) == p.diff(i) * q + p * q.diff(i)


def test_hessian_symmetric(perazzo):
    H = hessian_matrix(perazzo)
    assert H.is_symmetric()
    assert H[0, 3] == Polynomial.variable(3, 5) * 2


def test_linear_substitution():
    f = parse_polynomial("x0^2 - x1^2", 2)
    M = Matrix.from_rows([[1, 1], [1, -1]])
    assert linear_substitution(f, M) == parse_polynomial("4*x0*x1", 2)
    g = linear_substitution(parse_operator("X1", 2), Matrix.from_rows([[1, 0], [0, 2]]))
    assert isinstance(g, DiffOperator)
    assert g == parse_operator("2*X1", 2)
