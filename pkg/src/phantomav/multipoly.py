"""Sparse multivariate polynomials over Q or a prime field F_p.

Terms map exponent vectors to nonzero coefficients. Coefficients are
Fraction over Q and canonical ints in [1, p) over F_p. Supports the
exact division needed by fraction-free determinant expansion.
"""

from __future__ import annotations

from fractions import Fraction

from ._parse import format_terms, parse_terms
from .errors import FieldMismatch, InputError


class MultiPoly:
    __slots__ = ("variables", "p", "terms")

    def __init__(self, variables, terms, p=None):
        self.variables = tuple(variables)
        self.p = p
        clean = {}
        nvars = len(self.variables)
        for exps, c in terms.items():
            if len(exps) != nvars:
                raise InputError("exponent vector length mismatch")
            c = self._canon(c)
            if c:
                clean[tuple(int(e) for e in exps)] = c
        self.terms = clean

    def _canon(self, c):
        if self.p is None:
            return Fraction(c)
        if isinstance(c, Fraction):
            if c.denominator % self.p == 0:
                raise FieldMismatch(f"denominator not invertible mod {self.p}")
            return (c.numerator * pow(c.denominator, -1, self.p)) % self.p
        return int(c) % self.p

    # -- construction ---------------------------------------------------------

    @classmethod
    def zero(cls, variables, p=None):
        return cls(variables, {}, p)

    @classmethod
    def constant(cls, variables, c, p=None):
        return cls(variables, {(0,) * len(variables): c}, p)

    @classmethod
    def variable(cls, variables, name, p=None):
        variables = tuple(variables)
        if name not in variables:
            raise InputError(f"unknown variable {name!r}")
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): 1}, p)

    @classmethod
    def parse(cls, s, variables, p=None):
        return cls(variables, parse_terms(s, list(variables)), p)

    # -- basics -----------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (self.variables, self.p, self.terms) == \
                (other.variables, other.p, other.terms)
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, self.p, tuple(sorted(self.terms.items()))))

    def __str__(self):
        if self.p is None:
            return format_terms(self.terms, list(self.variables))
        shown = {e: Fraction(c) for e, c in self.terms.items()}
        return format_terms(shown, list(self.variables))

    def __repr__(self):
        field = "Q" if self.p is None else f"F{self.p}"
        return f"MultiPoly({str(self)!r}, {field})"

    def _compat(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.variables, other, self.p)
        if self.variables != other.variables or self.p != other.p:
            raise FieldMismatch("mixed variable sets or coefficient fields")
        return other

    def total_degree(self):
        """Max total degree of a term; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        other = self._compat(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(self.variables, terms, self.p)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(
            self.variables, {e: -c for e, c in self.terms.items()}, self.p)

    def __sub__(self, other):
        return self + (-self._compat(other))

    def __rsub__(self, other):
        return self._compat(other) - self

    def __mul__(self, other):
        other = self._compat(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return MultiPoly(self.variables, terms, self.p)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise InputError("negative power")
        out = MultiPoly.constant(self.variables, 1, self.p)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _lead(self):
        e = max(self.terms)  # lex order on exponent tuples
        return e, self.terms[e]

    def divexact(self, other):
        """Exact quotient self/other; raises if the division is not exact."""
        other = self._compat(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self.terms)
        out = {}
        de, dc = other._lead()
        dc_inv = (Fraction(1) / dc) if self.p is None else pow(dc, -1, self.p)
        while rem:
            le = max(rem)
            qe = tuple(a - b for a, b in zip(le, de))
            if any(x < 0 for x in qe):
                raise InputError("division is not exact")
            qc = rem[le] * dc_inv
            if self.p is not None:
                qc %= self.p
            out[qe] = qc
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(qe, e2))
                val = rem.get(key, 0) - qc * c2
                if self.p is not None:
                    val %= self.p
                if val:
                    rem[key] = val
                else:
                    rem.pop(key, None)
        return MultiPoly(self.variables, out, self.p)

    # -- calculus and evaluation -------------------------------------------------

    def derivative(self, var):
        idx = self.variables.index(var) if isinstance(var, str) else var
        terms = {}
        for e, c in self.terms.items():
            if e[idx]:
                key = e[:idx] + (e[idx] - 1,) + e[idx + 1:]
                terms[key] = terms.get(key, 0) + c * e[idx]
        return MultiPoly(self.variables, terms, self.p)

    def evaluate(self, point):
        """Evaluate at a point with entries in the coefficient field
        (Fractions over Q, ints over F_p)."""
        if len(point) != len(self.variables):
            raise InputError("point has wrong length")
        if self.p is None:
            point = [Fraction(x) for x in point]
            total = Fraction(0)
        else:
            point = [int(x) % self.p for x in point]
            total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total % self.p if self.p is not None else total

    def map_coefficients(self, fn, p=None):
        return MultiPoly(
            self.variables, {e: fn(c) for e, c in self.terms.items()}, p)

    def reduce_mod(self, p):
        """Image in F_p[variables]; denominators must be invertible mod p."""
        if self.p is not None:
            raise FieldMismatch("already over a finite field")
        return MultiPoly(self.variables, dict(self.terms), p)


def determinant(grid):
    """Determinant of a square grid of MultiPoly: cofactor expansion for
    size <= 5, fraction-free Bareiss (exact polynomial division) beyond."""
    n = len(grid)
    if n == 0:
        raise InputError("empty matrix")
    if any(len(row) != n for row in grid):
        raise InputError("non-square grid")
    sample = grid[0][0]
    if n <= 5:
        return _det_cofactor(grid, sample)
    return _det_bareiss(grid, sample)


def _det_cofactor(grid, sample):
    n = len(grid)
    if n == 1:
        return grid[0][0]
    total = MultiPoly.zero(sample.variables, sample.p)
    for j in range(n):
        if not grid[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in grid[1:]]
        term = grid[0][j] * _det_cofactor(minor, sample)
        total = total + (term if j % 2 == 0 else -term)
    return total


def _det_bareiss(grid, sample):
    n = len(grid)
    m = [list(row) for row in grid]
    one = MultiPoly.constant(sample.variables, 1, sample.p)
    prev = one
    sign = 1
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if m[i][c]), None)
        if pivot_row is None:
            return MultiPoly.zero(sample.variables, sample.p)
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]).divexact(prev)
            m[i][c] = MultiPoly.zero(sample.variables, sample.p)
        prev = m[c][c]
    out = m[n - 1][n - 1]
    return -out if sign < 0 else out
