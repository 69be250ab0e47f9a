"""Arithmetic in small finite fields F_{p^k} and univariate polynomials
over them.

Elements are little-endian coefficient tuples of length k over F_p;
fields are built either from a supplied irreducible modulus (typically a
factor just produced by a mod-p factorization, so its root is the class
of the generator) or by a deterministic search for an irreducible
polynomial of the requested degree. Used by the plane-curve smoothness
certificate and by point enumeration.
"""

from __future__ import annotations

from itertools import product

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor, gf_irreducible_p

from .errors import InputError


class GF:
    """F_{p^k} = F_p[u]/(modulus), modulus monic irreducible of degree k."""

    __slots__ = ("p", "k", "modulus")

    def __init__(self, p: int, modulus=None):
        self.p = p
        if modulus is None:
            modulus = (0, 1)  # u, so the field is F_p itself
        modulus = tuple(int(c) % p for c in modulus)
        if not modulus or modulus[-1] != 1:
            raise InputError("modulus must be monic")
        self.k = len(modulus) - 1
        self.modulus = modulus

    @classmethod
    def of_degree(cls, p: int, k: int) -> "GF":
        """Field with p^k elements, deterministic modulus search."""
        if k == 1:
            return cls(p)
        for tail in product(range(p), repeat=k):
            candidate = list(tail) + [1]
            if gf_irreducible_p([int(c) for c in reversed(candidate)], p, ZZ):
                return cls(p, candidate)
        raise AssertionError("no irreducible polynomial found")  # unreachable

    # -- elements ------------------------------------------------------------

    def zero(self):
        return (0,) * self.k

    def one(self):
        return self.embed(1)

    def embed(self, n: int):
        """Image of an integer (prime-subfield element)."""
        return (int(n) % self.p,) + (0,) * (self.k - 1)

    def generator(self):
        """The class of u (a root of the modulus when k > 1)."""
        if self.k == 1:
            return self.embed(0)
        return (0, 1) + (0,) * (self.k - 2)

    def elements(self):
        """All p^k elements (deterministic order)."""
        for tup in product(range(self.p), repeat=self.k):
            yield tup

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return ((a[0] * b[0]) % p,)
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] = (conv[i + j] + x * y) % p
        # reduce by the monic modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = conv[i]
            if c:
                conv[i] = 0
                for j in range(self.k):
                    conv[i - k + j] = (conv[i - k + j] - c * self.modulus[j]) % p
        return tuple(conv[:k])

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def inv(self, a):
        """Inverse by extended Euclid in F_p[u] against the modulus."""
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return (pow(a[0], -1, self.p),)
        r0, r1 = list(self.modulus), list(a)
        s0, s1 = [0], [1]
        while any(r1):
            q, r = _fp_divmod(r0, r1, self.p)
            r0, r1 = r1, r
            s0, s1 = s1, _fp_sub(s0, _fp_mul(q, s1, self.p), self.p)
        lead = pow(_fp_strip(r0)[-1], -1, self.p)
        s = [(c * lead) % self.p for c in s0]
        s = s[:self.k] + [0] * (self.k - len(s))
        return tuple(s[:self.k])

    def power(self, a, n: int):
        out = self.one()
        base = a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out


def _fp_strip(f):
    n = len(f)
    while n and f[n - 1] == 0:
        n -= 1
    return f[:n]


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _fp_strip([(x - y) % p for x, y in zip(a, b)])


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_strip(out)


def _fp_divmod(a, b, p):
    a = _fp_strip(list(a))
    b = _fp_strip(list(b))
    if not b:
        raise ZeroDivisionError
    if len(a) < len(b):
        return [], a
    inv = pow(b[-1], -1, p)
    quo = [0] * (len(a) - len(b) + 1)
    rem = list(a)
    for k in range(len(quo) - 1, -1, -1):
        c = (rem[k + len(b) - 1] * inv) % p
        quo[k] = c
        if c:
            for j, y in enumerate(b):
                rem[k + j] = (rem[k + j] - c * y) % p
    return _fp_strip(quo), _fp_strip(rem[:len(b) - 1])


# -- dense univariate polynomials with GF coefficients -----------------------


def poly_strip(F: GF, f):
    n = len(f)
    while n and F.is_zero(f[n - 1]):
        n -= 1
    return f[:n]


def poly_add(F: GF, f, g):
    n = max(len(f), len(g))
    f = list(f) + [F.zero()] * (n - len(f))
    g = list(g) + [F.zero()] * (n - len(g))
    return poly_strip(F, [F.add(a, b) for a, b in zip(f, g)])


def poly_mul(F: GF, f, g):
    if not f or not g:
        return []
    out = [F.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not F.is_zero(a):
            for j, b in enumerate(g):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return poly_strip(F, out)


def poly_rem(F: GF, f, g):
    f = poly_strip(F, list(f))
    g = poly_strip(F, list(g))
    if not g:
        raise ZeroDivisionError
    inv = F.inv(g[-1])
    while len(f) >= len(g):
        c = F.mul(f[-1], inv)
        shift = len(f) - len(g)
        for j, b in enumerate(g):
            f[shift + j] = F.sub(f[shift + j], F.mul(c, b))
        f = poly_strip(F, f)
    return f


def poly_gcd(F: GF, f, g):
    """Monic gcd over F."""
    a = poly_strip(F, list(f))
    b = poly_strip(F, list(g))
    while b:
        a, b = b, poly_rem(F, a, b)
    if a:
        inv = F.inv(a[-1])
        a = [F.mul(c, inv) for c in a]
    return a


def poly_eval(F: GF, f, x):
    acc = F.zero()
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def fp_factor(f, p):
    """Irreducible factorization of a univariate integer-coefficient list
    (little-endian) over F_p: returns [(little-endian coeff tuple, mult)],
    factors monic."""
    dense = [int(c) % p for c in reversed(f)]
    while dense and dense[0] == 0:
        dense.pop(0)
    if not dense:
        raise InputError("zero polynomial mod p")
    _, factors = gf_factor([ZZ(c) for c in dense], p, ZZ)
    return [
        (tuple(int(c) % p for c in reversed(fac)), int(mult))
        for fac, mult in factors
    ]
