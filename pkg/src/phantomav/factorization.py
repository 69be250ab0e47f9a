"""Factorization over Q and local factor data over Q_p.

Rational factorization is delegated to sympy (Zassenhaus: factor mod a
good prime, Hensel lift to the Mignotte bound, recombine). The p-adic
layer returns, for each irreducible factor of a squarefree integer
polynomial over Q_p, its degree and the common valuation of its roots.
That data is exactly the list of places above p of the quotient
algebra, so it is computed from a p-maximal order: places correspond to
irreducible p-adic factors, the factor degree is e*f, and the root
valuation is v_P(theta)/e.

Everything is verified on the way out against the Newton polygon of the
input, which is computed independently here from coefficient valuations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy
from sympy.polys.numberfields.basis import (
    _apply_Dedekind_criterion,
    _second_enlargement,
)
from sympy.polys.numberfields.modules import PowerBasis
from sympy.polys.numberfields.primes import prime_decomp, prime_valuation

from .errors import InputError, NotSquarefree, ZeroPolynomial
from .unipoly import UniPoly
from .valuations import lower_convex_hull, hull_slopes, ord_p

_X = sympy.Symbol("x")


def to_sympy(f: UniPoly):
    return sympy.Poly([sympy.Rational(c) for c in reversed(f.coeffs)], _X)


def from_sympy(poly) -> UniPoly:
    return UniPoly([Fraction(c.p, c.q) for c in reversed(poly.all_coeffs())])


def factor_over_Q(f: UniPoly):
    """Factor f over Q.

    Returns (content, [(monic irreducible UniPoly, multiplicity), ...])
    with content * prod(m_i^e_i) == f exactly.
    """
    if not f:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    content, factors = to_sympy(f).factor_list()
    content = Fraction(content.p, content.q)
    out = []
    for g, mult in factors:
        m = from_sympy(g)
        lead = m.leading
        content *= lead ** mult
        out.append((m.monic(), int(mult)))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return content, out


def is_irreducible(f: UniPoly) -> bool:
    if f.degree < 1:
        return False
    _, factors = factor_over_Q(f)
    return len(factors) == 1 and factors[0][1] == 1


@dataclass(frozen=True)
class LocalFactor:
    """One irreducible factor of f over Q_p.

    degree = e*f is the local degree; valuation is ord_p of the factor's
    roots (so ord_p(p) = 1, not normalized by any ambient q).
    """

    degree: int
    valuation: Fraction
    ramification: int
    residue_degree: int

    @property
    def local_degree(self) -> int:
        return self.degree


def newton_slope_data(f: UniPoly, p: int):
    """[(root valuation ord_p, number of roots)] from the Newton polygon
    of f at p, valuations ascending. Needs f(0) != 0."""
    if not f or f[0] == 0:
        raise InputError("Newton slope data needs a nonzero constant term")
    pts = []
    for i, c in enumerate(f.coeffs):
        if c:
            v = Fraction(ord_p(c.numerator, p) - ord_p(c.denominator, p))
            pts.append((Fraction(i), v))
    hull = lower_convex_hull(pts)
    data = [(-s, int(length)) for s, length in hull_slopes(hull)]
    data.sort()
    return data


def _p_maximal_order(T, p):
    """p-maximal order of Q[x]/(T), avoiding sympy round_two's full
    discriminant factorization (a stall risk for hard composites).

    Mirrors the per-prime loop of round_two: one Dedekind enlargement,
    then repeated nilradical enlargements until stable. Returns
    (order, dK_p, nilradical-or-None) where dK_p has the correct p-adic
    valuation (other primes' contributions are irrelevant here).
    """
    n = T.degree()
    dT = int(T.discriminant())
    base = PowerBasis(T)
    H = base.whole_submodule()
    nilrad = None
    U_bar, m = _apply_Dedekind_criterion(T, p)
    if m > 0:
        U = base.element_from_poly(sympy.Poly(U_bar, _X, domain=sympy.ZZ))
        H = H.add(U // p * H)
        q = p
        while q < n:
            q *= p
        H1, nilrad = _second_enlargement(H, p, q)
        while H1 != H:
            H = H1
            H1, nilrad = _second_enlargement(H, p, q)
    H._starts_with_unity = True
    H._is_sq_maxrank_HNF = True
    dK_p = (dT * int(H.matrix.det()) ** 2) // int(H.denom) ** (2 * n)
    return H, dK_p, nilrad


def _local_factors_irreducible(m: UniPoly, p: int):
    """Local factor data for an irreducible monic integer polynomial."""
    if m.degree == 1:
        c = -m[0]
        return [LocalFactor(1, Fraction(ord_p(c.numerator, p)), 1, 1)]
    T = to_sympy(m)
    ZK, dKp, nilrad = _p_maximal_order(T, p)
    places = prime_decomp(p, T, ZK=ZK, dK=dKp, radical=nilrad)
    theta = ZK.parent.element_from_poly(sympy.Poly(_X, _X))
    need_val = ord_p(m[0].numerator, p) > 0
    theta_ideal = None
    if need_val:
        gens = [theta * g for g in ZK.basis_element_pullbacks()]
        theta_ideal = ZK.parent.submodule_from_gens(gens)
    out = []
    for P in places:
        e, fdeg = int(P.e), int(P.f)
        v = prime_valuation(theta_ideal, P) if need_val else 0
        out.append(LocalFactor(e * fdeg, Fraction(v, e), e, fdeg))
    out.sort(key=lambda lf: (lf.valuation, lf.degree, lf.residue_degree))
    return out


def factor_over_Qp(f: UniPoly, p: int):
    """Degrees and root valuations of the irreducible factors of f over Q_p.

    f must be squarefree and monic with integer coefficients and
    f(0) != 0. Returns a list of LocalFactor, sorted by (valuation,
    degree); the degrees sum to deg f. The result is cross-checked
    against the Newton polygon of f at p.
    """
    if not f:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if not f.is_monic() or not f.is_integral():
        raise InputError("p-adic factorization needs a monic integer polynomial")
    if f[0] == 0:
        raise InputError("p-adic factorization needs a nonzero constant term")
    if not f.is_squarefree():
        raise NotSquarefree("p-adic factorization implemented for squarefree input")
    _, rational_factors = factor_over_Q(f)
    out = []
    for m, mult in rational_factors:
        assert mult == 1  # squarefree
        out.extend(_local_factors_irreducible(m, p))
    out.sort(key=lambda lf: (lf.valuation, lf.degree, lf.residue_degree))
    _check_against_polygon(f, p, out)
    return out


def _check_against_polygon(f, p, factors):
    slope_counts = {}
    for lf in factors:
        slope_counts[lf.valuation] = slope_counts.get(lf.valuation, 0) + lf.degree
    polygon = dict(newton_slope_data(f, p))
    if slope_counts != polygon:
        raise AssertionError(
            f"local factor slopes {slope_counts} disagree with the Newton "
            f"polygon {polygon} of {f} at {p}"
        )
