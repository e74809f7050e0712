"""Dense exact-arithmetic polynomials and the generalized Laguerre family.

Three coefficient representations are used throughout the package:

* :class:`IntPoly` -- plain integer coefficients, index = exponent.
* :class:`RatPoly` -- exact rational coefficients (``fractions.Fraction``).
* :class:`HurwitzPoly` -- divided-power coefficients ``a_j`` of
  ``f(x) = sum_j a_j x**j / j!``.

On top of these live the family constructors (monic integral form,
divided-power form, and the general rational-parameter form), the two
closed-form discriminants with a fraction-free resultant oracle, and
coefficient-wise admissible modifications.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "IntPoly",
    "RatPoly",
    "HurwitzPoly",
    "glp_monic",
    "glp_hurwitz",
    "glp_alpha",
    "en_hurwitz",
    "bessel_monic",
    "binom_rational",
    "factor_identity_check",
    "derivative_hurwitz",
    "discriminant_formula",
    "discriminant_alpha",
    "discriminant_resultant",
    "resultant",
    "admissible_modification",
]


def _trim(vals):
    end = len(vals)
    while end and vals[end - 1] == 0:
        end -= 1
    return tuple(vals[:end])


def _format_terms(coeffs) -> str:
    if not coeffs:
        return "0"
    parts = []
    for j in range(len(coeffs) - 1, -1, -1):
        c = coeffs[j]
        if c == 0:
            continue
        sign = " + " if (c > 0 and parts) else (" - " if parts else ("-" if c < 0 else ""))
        mag = abs(c)
        if j == 0:
            body = str(mag)
        else:
            var = "x" if j == 1 else f"x^{j}"
            body = var if mag == 1 else f"{mag}*{var}"
        parts.append(sign + body)
    return "".join(parts)


@dataclass(init=False, frozen=True)
class IntPoly:
    """Dense univariate polynomial with arbitrary-precision integer coefficients.

    ``coeffs[j]`` is the coefficient of ``x**j``.  The zero polynomial is the
    empty tuple and reports degree ``-1``.  No normalisation beyond stripping
    trailing zeros is ever applied.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        vals = []
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
            vals.append(c)
        object.__setattr__(self, "coeffs", _trim(vals))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([a[j] + (b[j] if j < len(b) else 0) for j in range(len(a))])

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if isinstance(other, IntPoly):
            if self.is_zero() or other.is_zero():
                return IntPoly()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return IntPoly(out)
        return NotImplemented

    __rmul__ = __mul__

    def shifted(self, k: int) -> "IntPoly":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly([j * self.coeffs[j] for j in range(1, len(self.coeffs))])

    def to_ratpoly(self) -> "RatPoly":
        return RatPoly([Fraction(c) for c in self.coeffs])

    def __str__(self) -> str:
        return _format_terms(self.coeffs)


@dataclass(init=False, frozen=True)
class RatPoly:
    """Dense univariate polynomial with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs=()):
        vals = []
        for c in coeffs:
            if isinstance(c, float):
                raise TypeError("rational coefficient expected, not float")
            vals.append(Fraction(c))
        object.__setattr__(self, "coeffs", _trim(vals))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RatPoly([a[j] + (b[j] if j < len(b) else 0) for j in range(len(a))])

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly([c * other for c in self.coeffs])
        if isinstance(other, RatPoly):
            if self.is_zero() or other.is_zero():
                return RatPoly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return RatPoly(out)
        return NotImplemented

    __rmul__ = __mul__

    def shifted(self, k: int) -> "RatPoly":
        if self.is_zero():
            return self
        return RatPoly((Fraction(0),) * k + self.coeffs)

    def derivative(self) -> "RatPoly":
        return RatPoly([j * self.coeffs[j] for j in range(1, len(self.coeffs))])

    def to_intpoly(self) -> IntPoly:
        """Exact conversion; raises if any coefficient is not an integer."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"coefficient {c} is not an integer")
            out.append(c.numerator)
        return IntPoly(out)

    def primitive_intpoly(self) -> IntPoly:
        """Clear denominators: the smallest positive integer multiple with
        integer coefficients (content is not removed)."""
        if self.is_zero():
            return IntPoly()
        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        return IntPoly([int(c * lcm) for c in self.coeffs])

    def __str__(self) -> str:
        return _format_terms(self.coeffs)


@dataclass(init=False, frozen=True)
class HurwitzPoly:
    """Polynomial in divided-power form: f(x) = sum_j hcoeffs[j] x**j / j!.

    The stored coefficients are exact integers, so every instance is
    Hurwitz integral by construction; round-tripping through
    :class:`RatPoly` is the identity.
    """

    hcoeffs: tuple[int, ...]

    def __init__(self, hcoeffs=()):
        vals = []
        for a in hcoeffs:
            if not isinstance(a, int):
                raise TypeError(f"integer Hurwitz coefficient expected, got {type(a).__name__}")
            vals.append(a)
        object.__setattr__(self, "hcoeffs", _trim(vals))

    @property
    def degree(self) -> int:
        return len(self.hcoeffs) - 1

    def is_zero(self) -> bool:
        return not self.hcoeffs

    def to_ratpoly(self) -> RatPoly:
        return RatPoly([Fraction(a, math.factorial(j)) for j, a in enumerate(self.hcoeffs)])

    @classmethod
    def from_ratpoly(cls, p: RatPoly) -> "HurwitzPoly":
        """Inverse of :meth:`to_ratpoly`; raises if f is not Hurwitz integral."""
        out = []
        for j, c in enumerate(p.coeffs):
            a = c * math.factorial(j)
            if a.denominator != 1:
                raise ValueError(f"x^{j} coefficient {c} is not of the form a/{j}!")
            out.append(a.numerator)
        return cls(out)

    @classmethod
    def from_intpoly(cls, p: IntPoly) -> "HurwitzPoly":
        return cls([c * math.factorial(j) for j, c in enumerate(p.coeffs)])

    def integral_form(self) -> IntPoly:
        """n! * f as an integer polynomial (monic when hcoeffs[-1] == 1)."""
        n = self.degree
        if n < 0:
            return IntPoly()
        nf = math.factorial(n)
        return IntPoly([a * (nf // math.factorial(j)) for j, a in enumerate(self.hcoeffs)])

    def derivative(self) -> "HurwitzPoly":
        """Differentiation shifts divided-power coefficients down one index."""
        return HurwitzPoly(self.hcoeffs[1:])


def glp_monic(n: int, r: int) -> IntPoly:
    """Monic integral family member of degree n at integer shift r.

    Coefficient of x**j is C(n, j) * (r+1)(r+2)...(r+n-j).  Negative r is
    accepted (used for cross-checks against the rational-parameter form);
    for r >= 0 all coefficients are positive.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    rising = 1
    for j in range(n - 1, -1, -1):
        rising *= r + (n - j)
        coeffs[j] = math.comb(n, j) * rising
    return IntPoly(coeffs)


def glp_hurwitz(n: int, r: int) -> HurwitzPoly:
    """Divided-power form: a_j = C(n-j+r, r), so a_n = 1 and a_0 = C(n+r, r)."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    return HurwitzPoly([math.comb(n - j + r, r) for j in range(n + 1)])


def en_hurwitz(n: int) -> HurwitzPoly:
    """Truncated exponential series: all divided-power coefficients equal 1."""
    return HurwitzPoly([1] * (n + 1))


def bessel_monic(n: int) -> IntPoly:
    """Monic Bessel polynomial: coefficient of x**j is (2n-j)! / (j! (n-j)!)."""
    return IntPoly([
        math.factorial(2 * n - j) // (math.factorial(j) * math.factorial(n - j))
        for j in range(n + 1)
    ])


def binom_rational(t, k: int) -> Fraction:
    """Falling-factorial binomial t(t-1)...(t-k+1)/k!, valid for rational t."""
    if k < 0:
        raise ValueError("k must be non-negative")
    t = Fraction(t)
    num = Fraction(1)
    for i in range(k):
        num *= t - i
    return num / math.factorial(k)


def glp_alpha(n: int, alpha) -> RatPoly:
    """Degree-n family member at rational parameter alpha.

    Coefficient of x**j is (-1)**(n-j) * C(n+alpha, n-j) / j!, following the
    sign convention that makes the polynomial monic up to the 1/n! factor.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    alpha = Fraction(alpha)
    coeffs = []
    for j in range(n + 1):
        sign = -1 if (n - j) % 2 else 1
        coeffs.append(sign * binom_rational(n + alpha, n - j) / math.factorial(j))
    return RatPoly(coeffs)


def factor_identity_check(n: int, a: int) -> bool:
    """Check the exact splitting of the degree-n member at parameter -a into
    x**a times the degree-(n-a) member at parameter +a, with a nonzero
    cofactor constant term."""
    if not 1 <= a <= n:
        raise ValueError("a must lie in [1, n]")
    m = n - a
    lhs = math.factorial(n) * glp_alpha(n, -a)
    cofactor = math.factorial(m) * glp_alpha(m, a)
    if m >= 0 and cofactor.coeffs and cofactor.coeffs[0] == 0:
        return False
    if m == 0 and cofactor.is_zero():
        return False
    return lhs == cofactor.shifted(a)


def derivative_hurwitz(f: HurwitzPoly) -> HurwitzPoly:
    """Module-level alias for HurwitzPoly.derivative (index shift)."""
    return f.derivative()


def discriminant_formula(n: int, r: int) -> int:
    """Closed-form discriminant of the monic integral degree-n member:
    (-1)**(n(n-1)/2) * prod_{j=1}^{n-1} (j+1)**(j+1) * (r+j)**(n-j)."""
    if n < 1:
        raise ValueError("n must be positive")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    prod = 1
    for j in range(1, n):
        prod *= (j + 1) ** (j + 1) * (r + j) ** (n - j)
    return sign * prod


def discriminant_alpha(n: int, alpha) -> Fraction:
    """Closed-form discriminant at rational parameter alpha:
    prod_{j=2}^{n} j**j * (alpha+j)**(j-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    alpha = Fraction(alpha)
    prod = Fraction(1)
    for j in range(2, n + 1):
        prod *= Fraction(j) ** j * (alpha + j) ** (j - 1)
    return prod


def _sylvester(f: IntPoly, g: IntPoly):
    m, n = f.degree, g.degree
    size = m + n
    fs = list(reversed(f.coeffs))
    gs = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fs + [0] * (size - i - len(fs)))
    for i in range(m):
        rows.append([0] * i + gs + [0] * (size - i - len(gs)))
    return rows


def _bareiss_det(mat) -> int:
    """Fraction-free determinant of a square integer matrix."""
    m = [row[:] for row in mat]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[-1][-1]


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Exact resultant via fraction-free elimination of the Sylvester matrix."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    return _bareiss_det(_sylvester(f, g))


def discriminant_resultant(p: IntPoly) -> int:
    """Independent discriminant oracle:
    (-1)**(n(n-1)/2) * Res(p, p') / lc(p), all arithmetic exact."""
    n = p.degree
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n == 1:
        return 1
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    res = resultant(p, p.derivative())
    lead = p.coeffs[-1]
    q, rem = divmod(sign * res, lead)
    if rem:
        raise ArithmeticError("resultant not divisible by leading coefficient")
    return q


def admissible_modification(p: RatPoly, b) -> RatPoly:
    """Coefficient-wise product with an integer vector b satisfying
    b[0] in {+1, -1} and b[degree] == 1 (interior entries unrestricted,
    zeros allowed)."""
    b = list(b)
    if len(b) != p.degree + 1:
        raise ValueError("modification vector length must be degree + 1")
    if any(not isinstance(x, int) for x in b):
        raise ValueError("modification entries must be integers")
    if b[0] not in (1, -1):
        raise ValueError("constant-term modifier must be +1 or -1")
    if b[-1] != 1:
        raise ValueError("leading modifier must be 1")
    return RatPoly([c * k for c, k in zip(p.coeffs, b)])
