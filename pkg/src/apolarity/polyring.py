"""Multivariate polynomials over Q and the apolarity action.

Monomials are exponent tuples.  Terms are kept in a dict with no zero
coefficients; printing uses graded lex order with ``x0 > x1 > ...``.

The dual ring of differential operators uses the same representation
(:class:`DiffOperator`), printed with capital ``X``.  ``X_i`` acts as
``d/dx_i``, factorials included.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial

from .kernel import Matrix

__all__ = [
    "Polynomial",
    "Form",
    "DiffOperator",
    "ParseError",
    "monomials",
    "parse_polynomial",
    "parse_operator",
    "apply",
    "gradient",
    "hessian_matrix",
    "evaluate",
    "linear_substitution",
]


def monomials(nvars, degree):
    """Exponent tuples of the given degree in decreasing lex order."""
    if nvars == 0:
        return [()] if degree == 0 else []
    if nvars == 1:
        return [(degree,)]
    out = []
    for e in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - e):
            out.append((e,) + rest)
    return out


def _grlex_key(m):
    return (-sum(m), tuple(-e for e in m))


class Polynomial:
    __slots__ = ("nvars", "terms")
    _letter = "x"

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != nvars:
                raise ValueError(f"monomial {m} does not have {nvars} exponents")
            if c != 0:
                clean[m] = clean.get(m, 0) + Fraction(c)
                if clean[m] == 0:
                    del clean[m]
        self.terms = clean

    def _like(self, terms):
        cls = DiffOperator if isinstance(self, DiffOperator) else Polynomial
        p = cls.__new__(cls)
        p.nvars = self.nvars
        p.terms = terms
        return p

    # constructors

    @classmethod
    def constant(cls, c, nvars):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i, nvars):
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        return cls(nvars, {tuple(int(j == i) for j in range(nvars)): 1})

    @classmethod
    def monomial(cls, exponents, coefficient=1):
        return cls(len(exponents), {tuple(exponents): coefficient})

    @classmethod
    def linear(cls, coefficients):
        n = len(coefficients)
        return cls(n, {tuple(int(j == i) for j in range(n)): c
                       for i, c in enumerate(coefficients)})

    # basic queries

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def coefficient(self, m):
        return self.terms.get(tuple(m), Fraction(0))

    def homogeneous_component(self, d):
        return self._like({m: c for m, c in self.terms.items() if sum(m) == d})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    def coefficient_vector(self, basis):
        """Coefficients against an ordered list of monomials."""
        return [self.terms.get(m, Fraction(0)) for m in basis]

    # arithmetic

    def _check(self, other):
        if other.nvars != self.nvars:
            raise ValueError("polynomials in different numbers of variables")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self._like({(0,) * self.nvars: Fraction(other)} if other else {})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self._like({})
            return self._like({m: c * other for m, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = terms.get(m, 0) + c1 * c2
                if v:
                    terms[m] = v
                else:
                    terms.pop(m, None)
        return self._like(terms)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = self._like({(0,) * self.nvars: Fraction(1)})
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # calculus

    def diff(self, i, times=1):
        terms = {}
        for m, c in self.terms.items():
            if m[i] < times:
                continue
            n = list(m)
            n[i] -= times
            terms[tuple(n)] = c * (factorial(m[i]) // factorial(m[i] - times))
        return self._like(terms)

    def __call__(self, *point):
        return evaluate(self, point)

    # text

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(m):
                if e:
                    factors.append(f"{self._letter}{i}" + (f"^{e}" if e > 1 else ""))
            mono = "*".join(factors)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {b}" for s, b in parts[1:])

    def __repr__(self):
        return f"{type(self).__name__}({self.nvars}, {str(self)!r})"


class Form(Polynomial):
    """A nonzero homogeneous polynomial."""

    __slots__ = ()

    def __init__(self, nvars, terms=None):
        super().__init__(nvars, terms)
        if not self.terms:
            raise ValueError("a form must be nonzero")
        if not self.is_homogeneous():
            raise ValueError(f"{self} is not homogeneous")

    @classmethod
    def of(cls, p):
        if isinstance(p, Form):
            return p
        return cls(p.nvars, p.terms)


class DiffOperator(Polynomial):
    """A polynomial in the dual variables ``X_i = d/dx_i``."""

    __slots__ = ()
    _letter = "X"

    @classmethod
    def of(cls, p):
        return cls(p.nvars, p.terms)


# ---------------------------------------------------------------------------
# parsing

class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[A-Za-z]_?\d+)|(?P<op>[-+*/^])|(?P<bad>\S))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group("bad") is not None:
            raise ParseError(f"unexpected character {m.group('bad')!r}", m.start("bad"))
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return out


def _parse(text, nvars, letter, cls):
    tokens = _tokenize(text)
    end = len(text)
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None, end)

    def take(kind, value=None):
        nonlocal i
        t = peek()
        if t[0] != kind or (value is not None and t[1] != value):
            want = value or kind
            got = t[1] if t[0] else "end of input"
            raise ParseError(f"expected {want}, found {got!r}", t[2])
        i += 1
        return t

    def posint():
        t = take("int")
        v = int(t[1])
        if v <= 0:
            raise ParseError("exponent must be a positive integer", t[2])
        return v

    def factor(exps):
        t = take("var")
        name = t[1]
        if name[0] != letter:
            raise ParseError(f"unknown variable {name!r}", t[2])
        idx = int(name[1:].lstrip("_"))
        if idx >= nvars:
            raise ParseError(f"variable {name} out of range for {nvars} variables", t[2])
        e = 1
        if peek()[1] == "^":
            take("op", "^")
            e = posint()
        exps[idx] += e

    def term():
        exps = [0] * nvars
        coeff = Fraction(1)
        if peek()[0] == "int":
            num = int(take("int")[1])
            den = 1
            if peek()[1] == "/":
                take("op", "/")
                den = posint()
            coeff = Fraction(num, den)
            if peek()[1] != "*":
                return tuple(exps), coeff
            take("op", "*")
        factor(exps)
        while peek()[1] == "*":
            take("op", "*")
            factor(exps)
        return tuple(exps), coeff

    terms = {}
    first = True
    while True:
        sign = 1
        t = peek()
        if t[1] in ("+", "-"):
            take("op")
            sign = -1 if t[1] == "-" else 1
        elif not first:
            if t[0] is None:
                break
            raise ParseError(f"expected '+' or '-', found {t[1]!r}", t[2])
        m, c = term()
        terms[m] = terms.get(m, 0) + sign * c
        first = False
        if peek()[0] is None:
            break
    return cls(nvars, terms)


def parse_polynomial(text, nvars):
    """Parse ``text`` (e.g. ``"x0*x3^2 - 1/2*x4^3"``) as a polynomial in ``nvars`` variables."""
    return _parse(text, nvars, "x", Polynomial)


def parse_operator(text, nvars):
    """Parse a differential operator written in ``X0, X1, ...``."""
    return _parse(text, nvars, "X", DiffOperator)


# ---------------------------------------------------------------------------
# apolarity and calculus

def _apply_monomial(a, b):
    coeff = 1
    for ai, bi in zip(a, b):
        if ai > bi:
            return None, 0
        coeff *= factorial(bi) // factorial(bi - ai)
    return tuple(bi - ai for ai, bi in zip(a, b)), coeff


def apply(op, f):
    """The action ``op(f)`` of a differential operator on a polynomial."""
    if op.nvars != f.nvars:
        raise ValueError("operator and polynomial have different numbers of variables")
    terms = {}
    for a, ca in op.terms.items():
        for b, cb in f.terms.items():
            m, k = _apply_monomial(a, b)
            if m is None:
                continue
            v = terms.get(m, 0) + ca * cb * k
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
    return Polynomial(f.nvars, terms)


def gradient(f):
    return [Polynomial(f.nvars, f.diff(i).terms) for i in range(f.nvars)]


def hessian_matrix(f):
    g = gradient(f)
    n = f.nvars
    return Matrix(n, n, [g[i].diff(j) for i in range(n) for j in range(n)])


def evaluate(f, point):
    """Exact value of ``f`` at ``point`` (rationals or number-field elements)."""
    point = list(point)
    if len(point) != f.nvars:
        raise ValueError(f"point has {len(point)} coordinates, expected {f.nvars}")
    powers = [{0: 1} for _ in point]
    total = Fraction(0)
    for m, c in f.terms.items():
        v = c
        for i, e in enumerate(m):
            if e == 0:
                continue
            cache = powers[i]
            if e not in cache:
                cache[e] = point[i] ** e
            v = v * cache[e]
        total = total + v
    return total


def linear_substitution(f, M):
    """``f(M x)``: each ``x_i`` becomes ``sum_j M[i, j] x_j``.

    ``M`` may be rectangular (``f.nvars`` rows); the result lives in
    ``M.cols`` variables.
    """
    if M.rows != f.nvars:
        raise ValueError("substitution matrix must have one row per variable")
    forms = [Polynomial.linear(M.row(i)) for i in range(M.rows)]
    powers = [{0: Polynomial.constant(1, M.cols)} for _ in forms]
    total = Polynomial(M.cols)
    for m, c in f.terms.items():
        t = Polynomial.constant(c, M.cols)
        for i, e in enumerate(m):
            if e == 0:
                continue
            cache = powers[i]
            if e not in cache:
                cache[e] = forms[i] ** e
            t = t * cache[e]
        total = total + t
    if isinstance(f, DiffOperator):
        return DiffOperator.of(total)
    return total
