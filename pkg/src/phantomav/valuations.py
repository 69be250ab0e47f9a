"""p-adic valuations and exact lower convex hulls.

The hull routine is the common core of Newton and Hodge polygons: all
comparisons are exact rational arithmetic, no floating point anywhere.
"""

from fractions import Fraction

from .errors import EmptyInput, InputError, ZeroInput


def ord_p(n: int, p: int) -> int:
    """Exponent of the prime p in the nonzero integer n."""
    if n == 0:
        raise ZeroInput("valuation of 0 is +infinity")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(x, p: int) -> int:
    """ord_p of a nonzero rational: ord_p(numerator) - ord_p(denominator)."""
    if p < 2:
        raise InputError(f"{p} is not prime")
    x = Fraction(x)
    if x == 0:
        raise ZeroInput("valuation of 0 is +infinity")
    return ord_p(x.numerator, p) - ord_p(x.denominator, p)


def lower_convex_hull(points):
    """Vertex chain of the lower convex hull, from min-x to max-x.

    Duplicate x-coordinates keep the minimal y. Consecutive hull slopes
    are strictly increasing. Accepts any nonempty iterable of (x, y)
    pairs with rational entries.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if not pts:
        raise EmptyInput("no points")
    best = {}
    for x, y in pts:
        if x not in best or y < best[x]:
            best[x] = y
    pts = sorted(best.items())
    hull = []
    for x, y in pts:
        # pop while the new point does not turn strictly left
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # cross product of (p2-p1) x (p3-p1); keep only strict left turns
            if (x2 - x1) * (y - y1) - (y2 - y1) * (x - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append((x, y))
    return hull


def hull_slopes(hull):
    """[(slope, horizontal length)] along a hull vertex chain, in order."""
    return [
        ((y2 - y1) / (x2 - x1), x2 - x1)
        for (x1, y1), (x2, y2) in zip(hull, hull[1:])
    ]
