"""Irreducibility machinery and the per-(n, r) decision pipeline.

Divisibility of binomial coefficients is always read off from base-p carry
counts, never from expanded binomials, so the same code paths work at survey
scale.  A successful decision is packaged as a certificate that can be
re-verified from its witnesses alone, without repeating any search.
"""

import itertools
import math
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction

from . import arith
from .newton import (
    pivotal_indices,
    polygon_of_hurwitz,
    slope_denominator_power,
)
from .polynomials import HurwitzPoly, IntPoly, glp_hurwitz, glp_monic

__all__ = [
    "METHOD_COLEMAN",
    "METHOD_COPRIME",
    "METHOD_PRIME_INTERVAL",
    "METHOD_SLOPE_FILASETA",
    "METHOD_FINITE_FIELD",
    "METHOD_SMALL_DEGREE",
    "METHOD_UNRESOLVED",
    "Decomposition",
    "IrredCertificate",
    "carries",
    "has_carry",
    "decompose",
    "digit_bound",
    "coprime_criterion",
    "coprime_by_r_divisibility",
    "coleman_criterion",
    "coleman_full_certificate",
    "slope_divisor",
    "filaseta_excludes",
    "renormalize",
    "eisenstein_dumas",
    "prime_interval_criterion",
    "BoundValue",
    "guaranteed_irreducible_bound",
    "small_degree_factor",
    "decide_irreducible",
    "verify_certificate",
]

METHOD_COLEMAN = "coleman"
METHOD_COPRIME = "coprime"
METHOD_PRIME_INTERVAL = "prime-interval"
METHOD_SLOPE_FILASETA = "slope-divisor-filaseta"
METHOD_FINITE_FIELD = "finite-field"
METHOD_SMALL_DEGREE = "small-degree"
METHOD_UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class Decomposition:
    """n = n0*n1 = n2*n3 with n1 collecting the prime powers of n sharing a
    base-p carry with r, and n3 the prime powers with ord_p(n) <= ord_p(r!)."""

    n0: int
    n1: int
    n2: int
    n3: int


@dataclass
class IrredCertificate:
    """One-sided irreducibility proof object: method tag plus the witnesses
    needed to re-verify it without re-running any search."""

    n: int
    r: int
    method: str
    witness: dict = field(default_factory=dict)

    @property
    def resolved(self) -> bool:
        return self.method != METHOD_UNRESOLVED

    def to_json_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "method": self.method, "witness": self.witness}


def carries(n: int, r: int, p: int) -> int:
    """Number of carries when adding n and r in base p; equals
    ord_p(C(n+r, r)) by Kummer's identity."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")
    count = 0
    carry = 0
    while n or r or carry:
        s = n % p + r % p + carry
        carry = 1 if s >= p else 0
        count += carry
        n //= p
        r //= p
    return count


def has_carry(n: int, r: int, p: int) -> bool:
    """At least one base-p carry in n + r (single-digit shortcut for r < p)."""
    if r == 0:
        return False
    if r < p:
        # a carry happens iff the lowest digit overflows; propagation cannot
        # start without it when r is a single digit
        return n % p + r >= p
    carry = 0
    while n or r:
        s = n % p + r % p + carry
        if s >= p:
            return True
        carry = 0
        n //= p
        r //= p
    return False


def decompose(n: int, r: int) -> Decomposition:
    """Split n by carry behaviour; n0 is the largest divisor of n coprime to
    C(n+r, r), computed without expanding the binomial."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    n1 = 1
    n3 = 1
    ord_r_fact = {}
    for p, e in arith.factorize(n):
        if has_carry(n, r, p):
            n1 *= p**e
        v = 0
        q = p
        while q <= r:
            v += r // q
            q *= p
        ord_r_fact[p] = v
        if e <= v:
            n3 *= p**e
    return Decomposition(n0=n // n1, n1=n1, n2=n // n3, n3=n3)


def digit_bound(r: int) -> int:
    """Upper bound prod_{p <= r} p**floor(log_p r) for n1, uniform in n."""
    if r < 2:
        return 1
    out = 1
    for p in arith.primes_upto(r):
        q = p
        e = 1
        while q * p <= r:
            q *= p
            e += 1
        out *= p**e
    return out


def coprime_criterion(n: int, r: int) -> IrredCertificate | None:
    """Certificate when gcd(n, C(n+r, r)) = 1, i.e. no prime divisor of n
    carries in n + r; the gcd(n, r!) = 1 special case is flagged as well."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    carry_free = []
    for p, _ in arith.factorize(n):
        if has_carry(n, r, p):
            return None
        carry_free.append(p)
    return IrredCertificate(
        n=n,
        r=r,
        method=METHOD_COPRIME,
        witness={
            "carry_free_primes": carry_free,
            "factorial_coprime": math.gcd(n, math.factorial(r)) == 1,
        },
    )


def coprime_by_r_divisibility(n: int, r: int) -> bool:
    """True iff r is divisible by prod_{p | n} p**(ord_p(n)+1).

    Caution: this divisibility does NOT always prevent base-p carries when n
    has digits above p**ord_p(n) -- (n, r) = (6, 36) carries at p = 2.  The
    carry-free guarantee needs the stronger modulus of
    :func:`coprime_by_digit_span`, which clears every digit position of n.
    """
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    mod = 1
    for p, e in arith.factorize(n):
        mod *= p ** (e + 1)
    return r % mod == 0


def coprime_by_digit_span(n: int, r: int) -> bool:
    """True iff r is divisible by prod_{p | n} p**(floor(log_p n) + 1); the
    base-p digits of r below each prime power exceeding n are then zero, no
    addition digit overlaps one of n, and the coprime criterion fires."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    mod = 1
    for p, _ in arith.factorize(n):
        q = p
        while q <= n:
            q *= p
        mod *= q
    return r % mod == 0


def coleman_criterion(f: HurwitzPoly, p: int) -> int | None:
    """If f is p-Coleman integral (pivotal divided-power coefficients are
    p-units), p**ord_p(n) divides the degree of every rational factor;
    returns that divisor, else None."""
    n = f.degree
    if n < 1:
        raise ValueError("positive degree required")
    for k in pivotal_indices(n, p):
        if f.hcoeffs[k] % p == 0:
            return None
    e = 0
    m = n
    while m % p == 0:
        m //= p
        e += 1
    return p**e


def coleman_full_certificate(n: int, r: int) -> IrredCertificate | None:
    """Polygon-level form of the coprime criterion: p-Coleman integrality for
    every prime divisor p of n forces irreducibility."""
    f = glp_hurwitz(n, r)
    total = 1
    primes = []
    for p, _ in arith.factorize(n):
        d = coleman_criterion(f, p)
        if d is None:
            return None
        total *= d
        primes.append(p)
    if total != n:
        return None
    return IrredCertificate(n=n, r=r, method=METHOD_COLEMAN, witness={"primes": primes})


def slope_divisor(f: HurwitzPoly, p: int) -> int | None:
    """Largest power p**k > 1 dividing the lowest-terms denominator of every
    slope of the p-polygon of f, or None when k = 0.

    Strictly more general than the Coleman route: it can apply when some
    pivotal coefficient is divisible by p.
    """
    d = slope_denominator_power(polygon_of_hurwitz(f, p), p)
    return d if d > 1 else None


class FilasetaPreconditionError(ValueError):
    """Raised when the factor-exclusion hypotheses are not even well-posed."""


def filaseta_excludes(f: HurwitzPoly, k: int, p: int) -> bool:
    """Degree-k factor exclusion for Hurwitz-integral f with |b_0| = 1.

    Requires 1 <= k <= n/2 and p >= k + 1; returns True iff
    p | n(n-1)...(n-k+1) and p does not divide b_n, in which case f has no
    rational factor of degree k.
    """
    n = f.degree
    if n < 1:
        raise FilasetaPreconditionError("positive degree required")
    if abs(f.hcoeffs[0]) != 1:
        raise FilasetaPreconditionError("constant divided-power coefficient must be a unit")
    if not 1 <= k <= n / 2:
        raise FilasetaPreconditionError(f"k = {k} outside [1, n/2]")
    if not arith.is_prime(p):
        raise FilasetaPreconditionError(f"{p} is not prime")
    if p < k + 1:
        raise FilasetaPreconditionError(f"prime {p} smaller than k + 1 = {k + 1}")
    falling = 1
    for i in range(k):
        falling = falling * ((n - i) % p) % p
    return falling == 0 and f.hcoeffs[-1] % p != 0


def renormalize(f: HurwitzPoly) -> HurwitzPoly:
    """Substitute x -> a_0 x and divide by a_0: divided-power coefficients
    become b_j = a_0**(j-1) a_j with b_0 = 1, preserving the rational
    factorisation structure."""
    if f.is_zero() or f.hcoeffs[0] == 0:
        raise ValueError("nonzero constant term required")
    a0 = f.hcoeffs[0]
    out = [1]
    power = 1
    for a in f.hcoeffs[1:]:
        out.append(power * a)
        power *= a0
    return HurwitzPoly(out)


def eisenstein_dumas(f: IntPoly, p: int) -> bool:
    """Pure-slope criterion for a monic integer polynomial: with
    m = ord_p(constant term), gcd(m, n) = 1 and ord_p(a_j) >= m(1 - j/n) for
    all j < n force irreducibility.  False means "criterion not applicable"."""
    n = f.degree
    if n < 1 or not f.is_monic:
        raise ValueError("monic polynomial of positive degree required")
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")
    c0 = f.coeffs[0]
    if c0 == 0:
        return False
    m = 0
    v = abs(c0)
    while v % p == 0:
        v //= p
        m += 1
    if m == 0 or math.gcd(m, n) != 1:
        return False
    for j in range(1, n):
        c = f.coeffs[j]
        if c == 0:
            continue
        vj = 0
        w = abs(c)
        while w % p == 0:
            w //= p
            vj += 1
        if vj * n < m * (n - j):
            return False
    return True


def prime_interval_criterion(n: int, r: int, prime_table: list[int] | None = None) -> IrredCertificate | None:
    """Certificate from a prime p with max((n+r)/2, n - n0) < p <= n.

    Factor degrees are then multiples of n0 by the Coleman route, and the
    single prime p excludes every candidate degree <= n/2 by the
    degree-k exclusion, so the polynomial is irreducible.  Endpoints are
    compared exactly; no polygons are computed here.
    """
    dec = decompose(n, r)
    # p > (n+r)/2 and p > n - n0, exactly: p >= max((n+r)//2, n-n0) + 1
    lo = max((n + r) // 2, n - dec.n0) + 1
    p = None
    if prime_table is not None:
        i = bisect_left(prime_table, lo)
        if i < len(prime_table) and prime_table[i] <= n:
            p = prime_table[i]
    else:
        w = arith.prime_in_interval(lo - 1, n)
        if w is not None and w.p >= lo:
            p = w.p
    if p is None:
        return None
    return IrredCertificate(
        n=n,
        r=r,
        method=METHOD_PRIME_INTERVAL,
        witness={"prime": p, "n0": dec.n0, "n1": dec.n1},
    )


@dataclass(frozen=True)
class BoundValue:
    """A certified upper bound: exact rational value rounded up from the
    closed form, plus a float rendering (inf when it overflows)."""

    exact: Fraction
    approx: float
    h: int

    def exceeds(self, m: int) -> bool:
        return self.exact > m


def guaranteed_irreducible_bound(r: int) -> BoundValue:
    """Degree threshold beyond which the prime-interval criterion always
    applies: e**(h + 1/2) (1 - 1/h)**(-h) with h = r!, rounded upward so the
    guarantee "n >= bound" is never weakened; r in {0, 1} gives 1."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if r < 2:
        return BoundValue(exact=Fraction(1), approx=1.0, h=1)
    h = math.factorial(r)
    _, hi = arith.interval_constant_bounds(h)
    try:
        approx = float(hi)
    except OverflowError:
        approx = math.inf
    return BoundValue(exact=hi, approx=approx, h=h)


def _monic_from_values(xs: list[int], ys: list[int], k: int) -> IntPoly | None:
    """The unique monic degree-k integer polynomial g with g(x_i) = y_i, or
    None when the interpolant is not integral (k points pin down the k lower
    coefficients once the leading one is fixed)."""
    lows = [Fraction(y - x**k) for x, y in zip(xs, ys)]
    coeffs = [Fraction(0)] * k
    for i, xi in enumerate(xs):
        num = [Fraction(1)]
        den = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            den *= xi - xj
            num = [Fraction(0)] + num
            for t in range(len(num) - 1):
                num[t] -= xj * num[t + 1]
        scale = lows[i] / den
        for t, c in enumerate(num):
            coeffs[t] += scale * c
    out = []
    for c in coeffs:
        if c.denominator != 1:
            return None
        out.append(c.numerator)
    return IntPoly(out + [1])


def _divides(f: IntPoly, g: IntPoly) -> bool:
    """Exact trial division: does monic g divide f in Z[x]?"""
    rem = list(f.coeffs)
    gd = g.degree
    gc = g.coeffs
    while len(rem) - 1 >= gd:
        lead = rem[-1]
        if lead == 0:
            rem.pop()
            continue
        shift = len(rem) - 1 - gd
        for i in range(gd + 1):
            rem[shift + i] -= lead * gc[i]
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return not rem


def small_degree_factor(f: IntPoly, max_degree: int | None = None) -> IntPoly | None:
    """Exhaustive search for a monic integer factor of degree <= max_degree
    (default n // 2).

    Degree 1 is a rational-root test over the signed divisors of f(0).  For
    degree k >= 2, a factor satisfies g(t) | f(t) at every integer t, so g is
    interpolated from every signed-divisor tuple at the points 1, -1, 2, -2,
    ... (k of them), pruned by the congruences g(s) = g(t) mod (s - t) and
    g(0) | f(0), and confirmed by exact division.
    """
    n = f.degree
    if n < 1 or not f.is_monic:
        raise ValueError("monic polynomial of positive degree required")
    kmax = n // 2 if max_degree is None else min(max_degree, n // 2)
    f0 = f(0)
    if f0 == 0:
        return IntPoly([0, 1])
    if kmax >= 1:
        for d in arith.divisors(abs(f0)):
            for root in (d, -d):
                if f(root) == 0:
                    return IntPoly([-root, 1])
    points: list[int] = []
    t = 1
    while len(points) < max(kmax, 0):
        points.append(t)
        t = -t if t > 0 else -t + 1
    values = [f(t) for t in points]
    for t, v in zip(points, values):
        if v == 0:
            return IntPoly([-t, 1])
    signed: list[list[int]] = []
    for v in values:
        ds = arith.divisors(abs(v))
        signed.append([x for d in ds for x in (d, -d)])
    for k in range(2, kmax + 1):
        xs = points[:k]
        for ys in itertools.product(*signed[:k]):
            ok = True
            for i in range(k):
                for j in range(i + 1, k):
                    if (ys[i] - ys[j]) % (xs[i] - xs[j]):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            g = _monic_from_values(xs, list(ys), k)
            if g is None or g.degree != k:
                continue
            g0 = g(0)
            if g0 == 0 or f0 % g0 != 0:
                continue
            if _divides(f, g):
                return g
    return None


def decide_irreducible(n: int, r: int, ff_max: int = 10_000,
                       prime_table: list[int] | None = None) -> IrredCertificate:
    """Full decision pipeline, cheapest criterion first.

    Order: coprime carries -> prime-interval -> combined slope divisors with
    degree-k exclusion -> finite-field witness search -> exhaustive
    small-degree factor search (n <= 8) -> unresolved.
    """
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    cert = coprime_criterion(n, r)
    if cert:
        return cert
    cert = prime_interval_criterion(n, r, prime_table)
    if cert:
        return cert

    f = glp_hurwitz(n, r)
    divisor = 1
    per_prime = {}
    for p, _ in arith.factorize(n):
        d = slope_divisor(f, p)
        if d:
            divisor *= d
            per_prime[p] = d
    if divisor == n:
        return IrredCertificate(
            n=n, r=r, method=METHOD_SLOPE_FILASETA,
            witness={"divisor": divisor, "per_prime": per_prime, "prime": None, "excluded": []},
        )
    if divisor > 1:
        lo = max(Fraction(n + r, 2), n - divisor)
        w = arith.prime_in_interval(lo, n)
        if w is not None:
            b = renormalize(f)
            ks = list(range(divisor, n // 2 + 1, divisor))
            if all(filaseta_excludes(b, k, w.p) for k in ks):
                return IrredCertificate(
                    n=n, r=r, method=METHOD_SLOPE_FILASETA,
                    witness={"divisor": divisor, "per_prime": per_prime,
                             "prime": w.p, "excluded": ks},
                )

    ell = arith.find_ff_witness(glp_monic(n, r), ell_max=ff_max)
    if ell is not None:
        return IrredCertificate(n=n, r=r, method=METHOD_FINITE_FIELD,
                                witness={"ell": ell})

    if n <= 8:
        factor = small_degree_factor(glp_monic(n, r))
        if factor is None:
            return IrredCertificate(
                n=n, r=r, method=METHOD_SMALL_DEGREE,
                witness={"max_factor_degree": n // 2},
            )
        return IrredCertificate(
            n=n, r=r, method=METHOD_UNRESOLVED,
            witness={"note": "factor found", "factor": list(factor.coeffs)},
        )
    return IrredCertificate(n=n, r=r, method=METHOD_UNRESOLVED, witness={})


def verify_certificate(cert: IrredCertificate) -> bool:
    """Re-check a certificate from its witnesses without re-running searches."""
    n, r = cert.n, cert.r
    if cert.method == METHOD_COPRIME:
        return all(not has_carry(n, r, p) for p, _ in arith.factorize(n))
    if cert.method == METHOD_COLEMAN:
        f = glp_hurwitz(n, r)
        total = 1
        for p, _ in arith.factorize(n):
            d = coleman_criterion(f, p)
            if d is None:
                return False
            total *= d
        return total == n
    if cert.method == METHOD_PRIME_INTERVAL:
        p = cert.witness["prime"]
        dec = decompose(n, r)
        if dec.n0 != cert.witness["n0"]:
            return False
        lo = max(Fraction(n + r, 2), n - dec.n0)
        return arith.is_prime(p) and lo < p <= n
    if cert.method == METHOD_SLOPE_FILASETA:
        f = glp_hurwitz(n, r)
        divisor = 1
        for p, d in cert.witness["per_prime"].items():
            got = slope_divisor(f, int(p))
            if got != d:
                return False
            divisor *= d
        if divisor != cert.witness["divisor"]:
            return False
        if divisor == n:
            return True
        p = cert.witness["prime"]
        if p is None or not arith.is_prime(p):
            return False
        if not max(Fraction(n + r, 2), n - divisor) < p <= n:
            return False
        b = renormalize(f)
        ks = list(range(divisor, n // 2 + 1, divisor))
        if ks != list(cert.witness["excluded"]):
            return False
        return all(filaseta_excludes(b, k, p) for k in ks)
    if cert.method == METHOD_FINITE_FIELD:
        ell = cert.witness["ell"]
        if not arith.is_prime(ell):
            return False
        return arith.ff_irreducible(arith.FFPoly(ell, glp_monic(n, r).coeffs))
    if cert.method == METHOD_SMALL_DEGREE:
        return small_degree_factor(glp_monic(n, r)) is None
    return False
