"""p-adic valuations and Newton polygons.

A Newton polygon is the lower convex hull of the points
``(j, ord_p(coefficient of x**j))``; its corners are the points where the
slope changes, and its slopes are the negatives of the root valuations.
This module builds polygons for integer, rational and divided-power
polynomials, computes pivotal indices, tests Coleman integrality, derives
Dumas factor-degree sets, and evaluates the Newton index.
"""

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import HurwitzPoly, IntPoly, RatPoly

__all__ = [
    "INFINITY",
    "ord_p",
    "ord_p_factorial",
    "pivotal_indices",
    "Edge",
    "NewtonPolygon",
    "newton_polygon",
    "polygon_of_intpoly",
    "polygon_of_ratpoly",
    "polygon_of_hurwitz",
    "en_polygon",
    "is_coleman_integral",
    "polygon_equals_en",
    "dumas_degree_set",
    "newton_index",
    "slope_denominator_power",
]

INFINITY = math.inf


def _check_prime(p: int) -> None:
    # local deterministic check; arith.is_prime is not imported to keep this
    # module free of package-internal dependencies beyond polynomials
    if p < 2:
        raise ValueError(f"{p} is not prime")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"{p} is not prime")
        d += 1


def ord_p(z, p: int):
    """Exact p-adic valuation of an integer or Fraction; ord_p(0) = +infinity."""
    _check_prime(p)
    if isinstance(z, float):
        raise TypeError("valuations are only defined for exact numbers")
    z = Fraction(z)
    if z == 0:
        return INFINITY
    v = 0
    num = z.numerator
    while num % p == 0:
        num //= p
        v += 1
    den = z.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def ord_p_factorial(j: int, p: int) -> int:
    """ord_p(j!) by Legendre's formula (sum of floor divisions)."""
    v = 0
    q = p
    while q <= j:
        v += j // q
        q *= p
    return v


def pivotal_indices(n: int, p: int) -> list[int]:
    """Partial sums of the base-p expansion of n, most significant digit first.

    Returns 0 = k_0 < k_1 < ... < k_s = n where s is the number of nonzero
    base-p digits of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    _check_prime(p)
    digits = []
    q = n
    e = 0
    while q:
        q, b = divmod(q, p)
        if b:
            digits.append(b * p**e)
        e += 1
    out = [0]
    acc = 0
    for term in reversed(digits):
        acc += term
        out.append(acc)
    return out


@dataclass(frozen=True)
class Edge:
    """One edge of a polygon: width W, height H, slope H/W in lowest terms,
    multiplicity d = gcd(H, W).  The edge consists of d segments of width W/d."""

    width: int
    height: int
    slope: Fraction
    multiplicity: int

    @property
    def segment_width(self) -> int:
        return self.width // self.multiplicity


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull at a prime: corner list plus derived edges.

    Corners have strictly increasing x, start at the smallest index with
    finite valuation and end at the degree; equality of polygons means
    equality of corner lists.
    """

    prime: int
    corners: tuple[tuple[int, int], ...]
    edges: tuple[Edge, ...]

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(e.slope for e in self.edges)

    @property
    def breaks(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.corners)

    @property
    def span(self) -> int:
        return self.corners[-1][0] - self.corners[0][0]

    def to_json_dict(self) -> dict:
        return {
            "prime": self.prime,
            "corners": [[x, y] for x, y in self.corners],
            "edges": [
                {
                    "width": e.width,
                    "height": e.height,
                    "slope": [e.slope.numerator, e.slope.denominator],
                    "multiplicity": e.multiplicity,
                }
                for e in self.edges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def to_text(self) -> str:
        lines = [f"p {self.prime}"]
        lines.append("corners " + " ".join(f"({x},{y})" for x, y in self.corners))
        for e in self.edges:
            lines.append(
                f"edge width={e.width} height={e.height} "
                f"slope={e.slope.numerator}/{e.slope.denominator} mult={e.multiplicity}"
            )
        return "\n".join(lines)


def _edges_from_corners(corners):
    edges = []
    for (x0, y0), (x1, y1) in zip(corners, corners[1:]):
        w = x1 - x0
        h = y1 - y0
        d = math.gcd(abs(h), w)
        edges.append(Edge(width=w, height=h, slope=Fraction(h, w), multiplicity=d))
    return tuple(edges)


def newton_polygon(points, p: int) -> NewtonPolygon:
    """Lower convex hull of (index, valuation) points at prime p.

    Points with infinite valuation are dropped (they never constrain a lower
    hull); the point at the highest index must be finite.  Collinear interior
    points are absorbed, so corners are exactly the slope-change points.
    """
    _check_prime(p)
    pts = sorted((int(x), y) for x, y in points)
    if not pts:
        raise ValueError("no points given")
    if pts[-1][1] == INFINITY:
        raise ValueError("the highest index must have finite valuation")
    finite = [(x, int(y)) for x, y in pts if y != INFINITY]
    if not finite:
        raise ValueError("at least one finite valuation is required")
    hull: list[tuple[int, int]] = []
    for q in finite:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # pop while the middle point is on or above the chord: slopes
            # must strictly increase left to right
            if (x2 - x1) * (q[1] - y1) - (y2 - y1) * (q[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(q)
    corners = tuple(hull)
    return NewtonPolygon(prime=p, corners=corners, edges=_edges_from_corners(corners))


def polygon_of_intpoly(f: IntPoly, p: int) -> NewtonPolygon:
    if f.is_zero():
        raise ValueError("zero polynomial has no Newton polygon")
    pts = [(j, ord_p(c, p)) for j, c in enumerate(f.coeffs) if c != 0]
    return newton_polygon(pts, p)


def polygon_of_ratpoly(f: RatPoly, p: int) -> NewtonPolygon:
    if f.is_zero():
        raise ValueError("zero polynomial has no Newton polygon")
    pts = [(j, ord_p(c, p)) for j, c in enumerate(f.coeffs) if c != 0]
    return newton_polygon(pts, p)


def polygon_of_hurwitz(f: HurwitzPoly, p: int) -> NewtonPolygon:
    """Polygon of f = sum a_j x**j / j!: point j sits at ord_p(a_j) - ord_p(j!).

    Slopes agree with the polygon of the monic integral n!*f; corners differ
    by the uniform vertical shift ord_p(n!).
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no Newton polygon")
    pts = []
    for j, a in enumerate(f.hcoeffs):
        if a:
            pts.append((j, ord_p(a, p) - ord_p_factorial(j, p)))
    return newton_polygon(pts, p)


def en_polygon(n: int, p: int) -> NewtonPolygon:
    """Polygon of the truncated exponential of degree n (points (j, -ord_p(j!)))."""
    pts = [(j, -ord_p_factorial(j, p)) for j in range(n + 1)]
    return newton_polygon(pts, p)


def is_coleman_integral(f: HurwitzPoly, p: int) -> bool:
    """All divided-power coefficients p-integral and the pivotal ones p-units.

    HurwitzPoly stores integers, so p-integrality is structural; the test
    reduces to the pivotal coefficients being nonzero mod p.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    _check_prime(p)
    n = f.degree
    if n == 0:
        return f.hcoeffs[0] % p != 0
    for k in pivotal_indices(n, p):
        if f.hcoeffs[k] % p == 0:
            return False
    return True


def polygon_equals_en(f: HurwitzPoly, p: int) -> bool:
    """True iff the polygon of f has exactly the corners of the degree-n
    truncated exponential's polygon at p."""
    n = f.degree
    return polygon_of_hurwitz(f, p).corners == en_polygon(n, p).corners


def dumas_degree_set(np_: NewtonPolygon) -> set[int]:
    """All degrees permitted for rational factors by the segment decomposition:
    sums of k_i * w_i with 0 <= k_i <= d_i over the edges.

    Valid as a factor-degree constraint when the polygon starts at index 0
    (nonzero constant term).
    """
    sums = {0}
    for e in np_.edges:
        w = e.segment_width
        sums = {s + k * w for s in sums for k in range(e.multiplicity + 1)}
    return sums


def slope_denominator_power(np_: NewtonPolygon, p: int) -> int:
    """Largest power p**k dividing the lowest-terms denominator of every slope
    of the polygon; returns 1 when some slope has denominator coprime to p
    (in particular whenever a slope-0 edge is present)."""
    if not np_.edges:
        return 1
    k = None
    for e in np_.edges:
        v = 0
        den = e.slope.denominator
        while den % p == 0:
            den //= p
            v += 1
        k = v if k is None else min(k, v)
        if k == 0:
            return 1
    return p**k


def _factorize_small(m: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def newton_index(f: IntPoly) -> int:
    """Least common multiple of all slope denominators over all primes.

    For a monic integral polynomial with nonzero constant term it suffices to
    scan the prime divisors of the constant coefficient: at every other prime
    the polygon is a single slope-0 edge.  The result divides lcm(1..n).
    """
    if f.is_zero() or not f.is_monic:
        raise ValueError("monic integral polynomial required")
    c0 = f.coeffs[0]
    if c0 == 0:
        raise ValueError("zero constant term: factor out x first")
    idx = 1
    for p, _ in _factorize_small(abs(c0)):
        for slope in polygon_of_intpoly(f, p).slopes:
            d = slope.denominator
            idx = idx * d // math.gcd(idx, d)
    return idx
