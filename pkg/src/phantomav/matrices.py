"""Exact linear algebra over Q.

Matrices are immutable grids of Fraction. Echelon forms run fraction-free
(Bareiss) on denominator-cleared rows to control coefficient growth;
characteristic polynomials use Faddeev-LeVerrier; minimal polynomials
factor the characteristic polynomial and trim exponents by exact matrix
substitution.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import InputError, NotInvariant, Singular
from .unipoly import UniPoly


class RatMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(Fraction(x) for x in row) for row in entries)
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        if any(len(row) != self.cols for row in entries):
            raise InputError("ragged matrix")
        self.entries = entries

    # -- construction ------------------------------------------------------

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns, rows=None):
        if not columns:
            return cls.zeros(rows if rows is not None else 0, 0)
        return cls(columns).transpose()

    def zero_like(self):
        return RatMatrix.zeros(self.rows, self.cols)

    def identity_like(self):
        if not self.is_square():
            raise InputError("identity_like needs a square matrix")
        return RatMatrix.identity(self.rows)

    # -- basics -------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if isinstance(other, RatMatrix):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"RatMatrix[{self.rows}x{self.cols}: {body}]"

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return all(x == 0 for row in self.entries for x in row)

    def is_symmetric(self):
        return self.is_square() and self == self.transpose()

    def is_antisymmetric(self):
        return self.is_square() and self.transpose() == -self

    def transpose(self):
        return RatMatrix(tuple(zip(*self.entries))) if self.rows else \
            RatMatrix.zeros(self.cols, 0)

    def trace(self):
        if not self.is_square():
            raise InputError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        self._shape_check(other)
        return RatMatrix(
            [[a + b for a, b in zip(r1, r2)]
             for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._shape_check(other)
        return RatMatrix(
            [[a - b for a, b in zip(r1, r2)]
             for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return RatMatrix([[-a for a in row] for row in self.entries])

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return RatMatrix([[a * scalar for a in row] for row in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise InputError(
                f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = other.transpose().entries
        return RatMatrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols]
             for row in self.entries])

    def apply(self, vec):
        if len(vec) != self.cols:
            raise InputError("vector length mismatch")
        return tuple(
            sum((a * Fraction(b) for a, b in zip(row, vec)), Fraction(0))
            for row in self.entries)

    def _shape_check(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise InputError("shape mismatch")

    # -- echelon machinery ----------------------------------------------------

    def _integer_rows(self):
        out = []
        for row in self.entries:
            mult = lcm(*(x.denominator for x in row)) if row else 1
            out.append([int(x * mult) for x in row])
        return out

    def _ff_echelon(self):
        """Fraction-free (Bareiss) row echelon of the denominator-cleared
        matrix. Returns (echelon rows as Fractions, pivot column list)."""
        m = self._integer_rows()
        rows, cols = self.rows, self.cols
        pivots = []
        prev = 1
        r = 0
        for c in range(cols):
            pivot_row = next((i for i in range(r, rows) if m[i][c] != 0), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            for i in range(r + 1, rows):
                for j in range(c + 1, cols):
                    m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
                m[i][c] = 0
            prev = m[r][c]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return [[Fraction(x) for x in row] for row in m], pivots

    def rank(self):
        return len(self._ff_echelon()[1])

    def kernel_basis(self):
        """Basis of the right kernel, as a list of coordinate tuples."""
        ech, pivots = self._ff_echelon()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [Fraction(0)] * self.cols
            vec[fc] = Fraction(1)
            # back-substitute through the echelon rows
            for r in range(len(pivots) - 1, -1, -1):
                pc = pivots[r]
                s = sum(
                    (ech[r][j] * vec[j] for j in range(pc + 1, self.cols)),
                    Fraction(0))
                vec[pc] = -s / ech[r][pc]
            basis.append(tuple(vec))
        return basis

    def image_basis(self):
        """Basis of the column space: the pivot columns of the matrix."""
        _, pivots = self._ff_echelon()
        return [self.column(c) for c in pivots]

    def det(self):
        if not self.is_square():
            raise InputError("determinant of a non-square matrix")
        if self.rows == 0:
            return Fraction(1)
        scale = Fraction(1)
        m = []
        for row in self.entries:
            mult = lcm(*(x.denominator for x in row))
            scale *= mult
            m.append([int(x * mult) for x in row])
        n = self.rows
        sign = 1
        prev = 1
        for c in range(n):
            pivot_row = next((i for i in range(c, n) if m[i][c] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != c:
                m[c], m[pivot_row] = m[pivot_row], m[c]
                sign = -sign
            for i in range(c + 1, n):
                for j in range(c + 1, n):
                    m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) // prev
                m[i][c] = 0
            prev = m[c][c]
        return Fraction(sign * m[n - 1][n - 1]) / scale

    def inverse(self):
        if not self.is_square():
            raise InputError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(self.entries)]
        for c in range(n):
            pivot_row = next((i for i in range(c, n) if aug[i][c] != 0), None)
            if pivot_row is None:
                raise Singular("matrix is singular")
            aug[c], aug[pivot_row] = aug[pivot_row], aug[c]
            inv = 1 / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for i in range(n):
                if i != c and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
        return RatMatrix([row[n:] for row in aug])

    def solve(self, rhs: "RatMatrix") -> "RatMatrix":
        """One exact solution X of self @ X = rhs; raises Singular if the
        system is inconsistent."""
        if rhs.rows != self.rows:
            raise InputError("right-hand side has wrong height")
        n, k = self.cols, rhs.cols
        aug = RatMatrix([list(r1) + list(r2)
                         for r1, r2 in zip(self.entries, rhs.entries)])
        ech, pivots = aug._ff_echelon()
        if any(p >= n for p in pivots):
            raise Singular("inconsistent linear system")
        sol = [[Fraction(0)] * k for _ in range(n)]
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            for col in range(k):
                s = ech[r][n + col] - sum(
                    (ech[r][j] * sol[j][col] for j in range(pc + 1, n)),
                    Fraction(0))
                sol[pc][col] = s / ech[r][pc]
        return RatMatrix(sol)

    # -- spectral-style data ---------------------------------------------------

    def char_poly(self) -> UniPoly:
        """Characteristic polynomial det(T*I - M) by Faddeev-LeVerrier."""
        if not self.is_square():
            raise InputError("char_poly of a non-square matrix")
        n = self.rows
        coeffs = [Fraction(0)] * n + [Fraction(1)]
        mk = RatMatrix.identity(n)
        for k in range(1, n + 1):
            mk = self @ mk
            ck = -mk.trace() / k
            coeffs[n - k] = ck
            if k < n:
                mk = mk + RatMatrix.identity(n) * ck
        return UniPoly(coeffs)

    def min_poly(self) -> UniPoly:
        """Monic minimal polynomial, via the factored characteristic
        polynomial: the exponent of each irreducible factor m is the index
        at which the rank of m(M)^k stabilizes."""
        from .factorization import factor_over_Q

        if not self.is_square():
            raise InputError("min_poly of a non-square matrix")
        if self.rows == 0:
            return UniPoly.one()
        _, factors = factor_over_Q(self.char_poly())
        out = UniPoly.one()
        for m, mult in factors:
            a = m.eval_matrix(self)
            ranks = [self.rows]
            power = RatMatrix.identity(self.rows)
            for _ in range(mult):
                power = power @ a
                ranks.append(power.rank())
            k = next(k for k in range(mult + 1) if ranks[k] == ranks[mult])
            out = out * m ** k
        return out

    def restrict(self, basis: "RatMatrix") -> "RatMatrix":
        """Matrix of this operator on the subspace spanned by the columns
        of `basis`. Raises NotInvariant if the image of the basis does not
        lie in its span (checked exactly)."""
        if not self.is_square() or basis.rows != self.rows:
            raise InputError("restrict needs a square matrix and a matching basis")
        if basis.cols == 0:
            return RatMatrix.zeros(0, 0)
        if basis.rank() != basis.cols:
            raise InputError("basis columns are dependent")
        try:
            return basis.solve(self @ basis)
        except Singular as exc:
            raise NotInvariant(
                "subspace is not invariant under the operator") from exc


def matrix_from_vectors(vectors, dim):
    """Column matrix of an iterable of coordinate tuples of length dim."""
    vecs = list(vectors)
    if not vecs:
        return RatMatrix.zeros(dim, 0)
    return RatMatrix([[v[i] for v in vecs] for i in range(dim)])
