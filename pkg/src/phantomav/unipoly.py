"""Dense univariate polynomials over the rationals, stored exactly.

Coefficients are `fractions.Fraction`; index i is the coefficient of T^i.
The zero polynomial has an empty coefficient tuple and degree -1.
Includes Euclidean arithmetic, Sturm counting with interval endpoints of
the form c*sqrt(q) compared exactly, and the text grammar shared with
the command line ("T^2 - 2*T + 8").
"""

from __future__ import annotations

from fractions import Fraction

from ._parse import format_terms, parse_terms
from .errors import InputError, NotSquarefree, ZeroPolynomial

VAR = "T"


def _strip(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class UniPoly:
    """Immutable dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip([Fraction(c) for c in coeffs])

    # -- construction ----------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @classmethod
    def parse(cls, s, var=VAR):
        terms = parse_terms(s, [var])
        d = max((e[0] for e in terms), default=0)
        coeffs = [Fraction(0)] * (d + 1)
        for (e,), c in terms.items():
            coeffs[e] = c
        return cls(coeffs)

    # -- basics ----------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({str(self)!r})"

    def __str__(self):
        terms = {(i,): c for i, c in enumerate(self.coeffs) if c}
        return format_terms(terms, [VAR])

    @property
    def leading(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self or not other:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise InputError("negative polynomial power")
        result = UniPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @staticmethod
    def _coerce(x):
        if isinstance(x, UniPoly):
            return x
        return UniPoly((Fraction(x),))

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly.zero(), self
        quo = [Fraction(0)] * (dq + 1)
        inv_lead = 1 / other.leading
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lead
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(quo), UniPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divexact(self, other):
        q, r = divmod(self, other)
        if r:
            raise InputError("division is not exact")
        return q

    # -- calculus and evaluation -----------------------------------------

    def derivative(self):
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, UniPoly) else UniPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, mat):
        """Horner evaluation at a square matrix."""
        acc = mat.zero_like()
        ident = mat.identity_like()
        for c in reversed(self.coeffs):
            acc = acc @ mat + ident * c
        return acc

    def monic(self):
        if not self:
            raise ZeroPolynomial("zero polynomial has no monic normalization")
        inv = 1 / self.leading
        return UniPoly([c * inv for c in self.coeffs])

    def gcd(self, other):
        a, b = self, self._coerce(other)
        while b:
            a, b = b, a % b
        return a.monic() if a else a

    def squarefree_part(self):
        if not self:
            raise ZeroPolynomial("zero polynomial")
        g = self.gcd(self.derivative())
        return self.divexact(g).monic()

    def is_squarefree(self):
        return bool(self) and self.gcd(self.derivative()).degree == 0

    def scale_roots(self, c):
        """Polynomial with roots multiplied by c: coefficient a_i -> a_i * c^(d-i)."""
        c = Fraction(c)
        d = self.degree
        return UniPoly([a * c ** (d - i) for i, a in enumerate(self.coeffs)])

    def reverse(self):
        """T^d * f(1/T)."""
        return UniPoly(tuple(reversed(self.coeffs)))


# -- Sturm counting with c*sqrt(q) endpoints ---------------------------------


class SqrtEndpoint:
    """The real number c*sqrt(q), c rational, q a positive rational non-square.

    Comparisons against rationals and sign evaluations of polynomials at
    this point reduce to exact rational sign tests via (a + b*sqrt(q))
    having the sign of a when a,b agree, and of a*(a^2 - q*b^2) otherwise.
    """

    __slots__ = ("c", "q")

    def __init__(self, c, q):
        self.c = Fraction(c)
        self.q = Fraction(q)
        if self.q <= 0:
            raise InputError("sqrt endpoint needs positive radicand")

    def __repr__(self):
        return f"SqrtEndpoint({self.c}, {self.q})"


def _surd_sign(a, b, q):
    """Exact sign of a + b*sqrt(q)."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if (a > 0) == (b > 0):
        return 1 if a > 0 else -1
    n = a * a - q * b * b
    s = (n > 0) - (n < 0)
    return s if a > 0 else -s


def sign_at(f: UniPoly, x) -> int:
    """Exact sign of f at a rational point or a SqrtEndpoint."""
    if not isinstance(x, SqrtEndpoint):
        v = f(Fraction(x))
        return (v > 0) - (v < 0)
    # f(c*sqrt(q)) = E(c^2 q) + c*sqrt(q)*O(c^2 q) with f = E(T^2) + T*O(T^2)
    t2 = x.c * x.c * x.q
    even = UniPoly(f.coeffs[0::2])
    odd = UniPoly(f.coeffs[1::2])
    return _surd_sign(even(t2), x.c * odd(t2), x.q)


def sturm_chain(f: UniPoly):
    chain = [f, f.derivative()]
    while chain[-1]:
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_variations(chain, x):
    signs = [s for s in (sign_at(g, x) for g in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(f: UniPoly, a, b) -> int:
    """Number of distinct real roots of squarefree f in the closed
    interval [a, b]; endpoints rational or SqrtEndpoint."""
    if not f:
        raise ZeroPolynomial("zero polynomial")
    if not f.is_squarefree():
        raise NotSquarefree("sturm_count needs a squarefree polynomial")
    if f.degree == 0:
        return 0
    chain = sturm_chain(f)
    count = _sign_variations(chain, a) - _sign_variations(chain, b)
    # Sturm counts roots in (a, b]; add the left endpoint if it is a root.
    if sign_at(f, a) == 0:
        count += 1
    return count
