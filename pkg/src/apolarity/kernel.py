"""Exact scalars and dense exact linear algebra.

Rationals are :class:`fractions.Fraction`.  Simple algebraic extensions
``Q[t]/(m(t))`` with ``deg m <= 3`` are provided by :class:`NumberField`.
Matrices are small and dense; elimination is plain Gauss-Jordan over the
field of the entries.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Fraction",
    "NumberField",
    "NumberFieldElement",
    "Matrix",
    "rank",
    "kernel_basis",
    "row_reduce",
    "solve",
    "det_fraction_free",
    "det_cofactor",
    "rational_roots",
]


# ---------------------------------------------------------------------------
# univariate helpers (coefficient lists, lowest degree first)

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([Fraction(x) - y for x, y in zip(a, b)])


def _pdivmod(a, b):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = [Fraction(x) for x in a]
    lead = Fraction(b[-1])
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / lead
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] -= c * y
        r = _trim(r)
    return _trim(q), r


def rational_roots(coeffs):
    """Distinct rational roots of a univariate polynomial.

    ``coeffs`` are listed from the constant term upwards.
    """
    c = _trim(Fraction(x) for x in coeffs)
    if len(c) <= 1:
        return []
    roots = []
    if c[0] == 0:
        roots.append(Fraction(0))
        while c[0] == 0:
            c.pop(0)
        if len(c) <= 1:
            return roots
    den = 1
    for x in c:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in c]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    ints = [x // g for x in ints]
    for p in _divisors(abs(ints[0])):
        for q in _divisors(abs(ints[-1])):
            for s in (1, -1):
                r = Fraction(s * p, q)
                if r in roots:
                    continue
                if _horner(ints, r) == 0:
                    roots.append(r)
    return sorted(roots)


def _horner(c, x):
    acc = Fraction(0)
    for a in reversed(c):
        acc = acc * x + a
    return acc


def _divisors(n):
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


# ---------------------------------------------------------------------------
# number fields

class NumberField:
    """The field ``Q[t]/(m(t))`` for a monic irreducible ``m`` of degree <= 3."""

    __slots__ = ("modulus",)

    def __init__(self, modulus):
        m = _trim(Fraction(x) for x in modulus)
        if len(m) < 2:
            raise ValueError("modulus must have positive degree")
        if len(m) > 4:
            raise ValueError("only extensions of degree <= 3 are supported")
        lead = m[-1]
        m = tuple(x / lead for x in m)
        # degree <= 3: irreducible iff no rational root
        if len(m) > 2 and rational_roots(m):
            raise ValueError(f"modulus {list(m)} has a rational root")
        self.modulus = m

    @property
    def degree(self):
        return len(self.modulus) - 1

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"NumberField({[str(x) for x in self.modulus]})"

    def __call__(self, value):
        if isinstance(value, NumberFieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        return NumberFieldElement([Fraction(value)], self)

    def generator(self):
        """The class of ``t``."""
        return NumberFieldElement([0, 1], self)


class NumberFieldElement:
    """An element of a :class:`NumberField`, stored as a reduced coefficient vector."""

    __slots__ = ("coefficients", "field")

    def __init__(self, coefficients, field):
        c = [Fraction(x) for x in coefficients]
        if len(c) > field.degree:
            _, c = _pdivmod(c, field.modulus)
        c = c + [Fraction(0)] * (field.degree - len(c))
        self.coefficients = tuple(c)
        self.field = field

    @property
    def modulus(self):
        return self.field.modulus

    def _coerce(self, other):
        if isinstance(other, NumberFieldElement):
            if other.field != self.field:
                raise ValueError("mixed number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement([other], self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumberFieldElement(
            [a + b for a, b in zip(self.coefficients, other.coefficients)], self.field)

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement([-a for a in self.coefficients], self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement([a * other for a in self.coefficients], self.field)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumberFieldElement(_pmul(self.coefficients, other.coefficients), self.field)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in a number field")
        # extended Euclid: s*a + u*m = 1
        r0, r1 = list(self.field.modulus), _trim(self.coefficients)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        c = r1[0]
        return NumberFieldElement([x / c for x in s1], self.field)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = NumberFieldElement([1], self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return any(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coefficients[0] == other and not any(self.coefficients[1:])
        if isinstance(other, NumberFieldElement):
            return self.field == other.field and self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        if not any(self.coefficients[1:]):
            return hash(self.coefficients[0])
        return hash((self.coefficients, self.field))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            terms.append(str(c) if i == 0 else f"{c}*t" + (f"^{i}" if i > 1 else ""))
        return " + ".join(terms) or "0"


# ---------------------------------------------------------------------------
# matrices

class Matrix:
    """Immutable dense matrix stored row-major.

    Entries can be anything supporting ring arithmetic and comparison with 0:
    ``int``/``Fraction``, :class:`NumberFieldElement`, or polynomials.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns, rows):
        columns = [list(c) for c in columns]
        return cls(rows, len(columns), [columns[j][i] for i in range(rows)
                                        for j in range(len(columns))])

    @classmethod
    def identity(cls, n, one=Fraction(1), zero=Fraction(0)):
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols, zero=Fraction(0)):
        return cls(rows, cols, [zero] * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def tolist(self):
        return [self.row(i) for i in range(self.rows)]

    @property
    def shape(self):
        return self.rows, self.cols

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    T = property(transpose)

    def map(self, fn):
        return Matrix(self.rows, self.cols, [fn(x) for x in self.entries])

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            out = []
            for i in range(self.rows):
                r = self.row(i)
                for j in range(other.cols):
                    acc = 0
                    for k in range(self.cols):
                        a = r[k]
                        if a != 0:
                            acc = acc + a * other.entries[k * other.cols + j]
                    out.append(acc)
            return Matrix(self.rows, other.cols, out)
        return self.apply(other)

    def apply(self, vector):
        """``M v`` for a plain sequence ``v``."""
        v = list(vector)
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            acc = 0
            for a, b in zip(self.row(i), v):
                if a != 0 and b != 0:
                    acc = acc + a * b
            out.append(acc)
        return out

    def is_zero(self):
        return all(x == 0 for x in self.entries)

    def is_symmetric(self):
        return self.rows == self.cols and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i))

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.shape == other.shape
                and all(a == b for a, b in zip(self.entries, other.entries)))

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = ",\n ".join("[" + ", ".join(str(x) for x in self.row(i)) + "]"
                           for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols},\n[{body}])"


def row_reduce(M):
    """Reduced row echelon form of ``M`` over its field.

    Returns ``(rows, pivots)`` where ``rows`` are the nonzero rows of the RREF
    and ``pivots`` the pivot column indices.
    """
    a = [list(M.row(i)) for i in range(M.rows)]
    pivots = []
    r = 0
    for c in range(M.cols):
        p = next((i for i in range(r, M.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(M.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == M.rows:
            break
    return a[:r], pivots


def rank(M):
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(row_reduce(M)[1])


def kernel_basis(M):
    """Basis of the right null space ``{v : M v = 0}``."""
    if M.cols == 0:
        return []
    if M.rows == 0:
        return [[Fraction(int(i == j)) for i in range(M.cols)] for j in range(M.cols)]
    rows, pivots = row_reduce(M)
    zero = 0 * M.entries[0]
    one = zero + 1
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [zero] * M.cols
        v[fc] = one
        for r, pc in zip(rows, pivots):
            v[pc] = -r[fc]
        basis.append(v)
    return basis


def solve(M, b):
    """One solution ``x`` of ``M x = b``, or ``None`` if inconsistent."""
    aug = Matrix(M.rows, M.cols + 1,
                 [x for i in range(M.rows) for x in M.row(i) + [b[i]]])
    rows, pivots = row_reduce(aug)
    if pivots and pivots[-1] == M.cols:
        return None
    zero = 0 * aug.entries[0] if aug.entries else Fraction(0)
    x = [zero] * M.cols
    for r, pc in zip(rows, pivots):
        x[pc] = r[-1]
    return x


def _is_field_scalar(x):
    return isinstance(x, (int, Fraction, NumberFieldElement))


def det_fraction_free(M):
    """Exact determinant.

    Bareiss elimination for field entries; memoised Laplace expansion for
    entries from a polynomial (or other commutative) ring.
    """
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return Fraction(1)
    if not all(_is_field_scalar(x) for x in M.entries):
        return det_cofactor(M)
    a = [[x if isinstance(x, NumberFieldElement) else Fraction(x) for x in M.row(i)]
         for i in range(n)]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return 0 * a[0][0]
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = 0 * a[k][k]
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def det_cofactor(M):
    """Laplace expansion along rows, memoised on the set of remaining columns."""
    n = M.rows
    if n != M.cols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    entries = M.entries

    @lru_cache(maxsize=None)
    def minor(cols):
        # rows n-len(cols) .. n-1 against the given column set
        r = n - len(cols)
        if len(cols) == 1:
            return entries[r * n + cols[0]]
        acc = None
        for idx, c in enumerate(cols):
            e = entries[r * n + c]
            if e == 0:
                continue
            term = e * minor(cols[:idx] + cols[idx + 1:])
            if idx % 2:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            return 0 * entries[0]
        return acc

    return minor(tuple(range(n)))


def _permutation_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_leibniz(M):
    """Determinant by the permutation sum; only for tiny matrices and tests."""
    from itertools import permutations
    n = M.rows
    total = Fraction(0)
    for p in permutations(range(n)):
        term = Fraction(_permutation_sign(p))
        for i in range(n):
            term = term * M[i, p[i]]
        total = total + term
    return total

