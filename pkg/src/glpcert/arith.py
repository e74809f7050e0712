"""Primality, prime searches in short intervals, and F_ell[x] irreducibility.

Primality is decided by Miller-Rabin with a fixed witness set that is exact
for every input below 2**64 (in fact below 3.3e24), so no answer anywhere in
the package is probabilistic.  Interval checks stream primes from a segmented
sieve.  Irreducibility over a prime field uses the Frobenius-power test
(x**(ell**n) == x mod f together with coprimality at the maximal proper
Frobenius steps), with an int64 vector fast path for the modular products.
"""

import math
from dataclasses import dataclass
from decimal import Decimal, ROUND_CEILING, ROUND_FLOOR, localcontext
from fractions import Fraction

import numpy as np

__all__ = [
    "is_prime",
    "next_prime",
    "primes_upto",
    "iter_primes",
    "factorize",
    "divisors",
    "PrimeWitness",
    "prime_in_interval",
    "interval_constant_bounds",
    "check_scaled_interval_primes",
    "check_harborth_kemnitz",
    "galois_interval_prime",
    "FFPoly",
    "ff_irreducible",
    "find_ff_witness",
]

# Deterministic Miller-Rabin witnesses: exact for all moduli < 3.3e24,
# which covers the full unsigned 64-bit range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic primality test, exact for all m < 2**64."""
    if m < 2:
        return False
    for p in _MR_WITNESSES:
        if m % p == 0:
            return m == p
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def next_prime(m: int) -> int:
    """Smallest prime strictly greater than m."""
    if m < 2:
        return 2
    k = m + 1
    if k % 2 == 0:
        if k == 2:
            return 2
        k += 1
    while not is_prime(k):
        k += 2
    return k


def primes_upto(n: int) -> list[int]:
    """All primes <= n by a plain byte sieve (meant for small n)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start:: p] = b"\x00" * len(range(start, n + 1, p))
    return [i for i in range(n + 1) if sieve[i]]


def iter_primes(lo: int, hi: int, segment: int = 1 << 18):
    """Yield the primes in [lo, hi] in order via a segmented sieve.

    Only O(sqrt(hi) + segment) memory is used; the full prime list is never
    materialised.
    """
    lo = max(lo, 2)
    if hi < lo:
        return
    base = primes_upto(math.isqrt(hi))
    start = lo
    while start <= hi:
        end = min(start + segment - 1, hi)
        size = end - start + 1
        seg = bytearray([1]) * size
        for p in base:
            if p * p > end:
                break
            first = max(p * p, ((start + p - 1) // p) * p)
            if first <= end:
                seg[first - start:: p] = b"\x00" * len(range(first, end + 1, p))
        # composites have a factor <= sqrt(hi), so unmarked entries are prime
        for i in range(size):
            if seg[i]:
                yield start + i
        start = end + 1


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorisation of m >= 1 by trial division, with a deterministic
    primality shortcut once the remaining cofactor is prime."""
    if m < 1:
        raise ValueError("factorize expects a positive integer")
    out = []
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    d = 5
    while d * d <= m:
        if m > 1 and is_prime(m):
            break
        for p in (d, d + 2):
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                out.append((p, e))
        d += 6
    if m > 1:
        out.append((m, 1))
    return out


def divisors(m: int) -> list[int]:
    """Sorted positive divisors of m >= 1."""
    divs = [1]
    for p, e in factorize(m):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


@dataclass(frozen=True)
class PrimeWitness:
    """A prime certified by a deterministic procedure valid below 2**64."""

    p: int
    method: str = "deterministic-mr"


def prime_in_interval(lo_exclusive, hi_inclusive: int) -> PrimeWitness | None:
    """Smallest prime p with lo < p <= hi, or None.

    The lower endpoint may be a Fraction and is compared exactly.
    """
    lo = Fraction(lo_exclusive)
    start = lo.numerator // lo.denominator + 1  # smallest integer > lo
    if lo.denominator == 1:
        start = lo.numerator + 1
    k = max(start, 2)
    while k <= hi_inclusive:
        if is_prime(k):
            return PrimeWitness(k)
        k += 1
    return None


def interval_constant_bounds(h: int) -> tuple[Fraction, Fraction]:
    """Certified rational enclosure of e**(h + 1/2) * (1 - 1/h)**(-h).

    Both bounds are produced by directed rounding so the true constant lies
    in [lo, hi]; callers relying on "N greater than the constant" must use hi,
    callers needing "not to skip any N" must use lo.
    """
    if h < 2:
        raise ValueError("h must be at least 2")

    def _eval(round_up: bool) -> Fraction:
        # C = exp(h + 1/2 - h*ln((h-1)/h)).  For an upper bound, ln((h-1)/h)
        # (which is negative) must be rounded down and everything downstream
        # up; the lower bound reverses every direction.
        down = ROUND_FLOOR
        up = ROUND_CEILING
        ln_dir = down if round_up else up
        out_dir = up if round_up else down
        with localcontext() as ctx:
            ctx.prec = 60
            ctx.rounding = ln_dir
            u = Decimal(h - 1) / Decimal(h)
            ln_u = u.ln()
            ctx.rounding = down if round_up else up
            t = Decimal(h) * ln_u  # negative; rounded opposite to out_dir
            ctx.rounding = out_dir
            expo = Decimal(h) + Decimal(1) / Decimal(2) - t
            val = expo.exp()
        return Fraction(val)

    lo = _eval(False)
    hi = _eval(True)
    if lo > hi:
        raise ArithmeticError("directed rounding produced a crossed enclosure")
    return lo, hi


def check_scaled_interval_primes(h: int, n_max: int) -> bool:
    """Verify that [N(1 - 1/h), N] contains a prime for every integer N with
    C(h) < N <= n_max, where C(h) = e**(h+1/2) (1-1/h)**(-h); for h = 2 the
    hand-checked base range N in [48, 67] is verified as well.
    """
    lo_c, hi_c = interval_constant_bounds(h)
    if math.floor(lo_c) != math.floor(hi_c):
        raise ArithmeticError("constant enclosure too loose to fix the first N")
    n_start = math.floor(lo_c) + 1
    if h == 2:
        n_start = min(n_start, 48)
    if n_max < n_start:
        return True
    # For N with largest prime a <= N the condition is a >= N(1 - 1/h),
    # i.e. h*a >= N(h-1).  With a fixed the hardest N is the largest one
    # before the next prime, so one check per prime gap suffices.
    prev = None
    for p in iter_primes(2, n_max + 2000):
        if prev is not None:
            n_lo = max(n_start, prev)
            n_hi = min(n_max, p - 1)
            if n_lo <= n_hi and h * prev < n_hi * (h - 1):
                return False
        prev = p
        if prev > n_max:
            break
    return prev is not None and prev > n_max


def check_harborth_kemnitz(n_max: int, n_min: int = 48683) -> bool:
    """Verify that (n, 1.001n] contains a prime for every n in [n_min, n_max].

    The comparison is exact: next_prime(n) <= 1.001 n iff 1000 p <= 1001 n.
    """
    if n_max < n_min:
        return True
    prev = None
    hi = 1001 * n_max // 1000 + 2000
    for p in iter_primes(2, hi):
        if prev is not None:
            # for n in [prev, p-1] the next prime is p; hardest n is the
            # smallest one in the clipped range
            n_lo = max(n_min, prev)
            if n_lo <= min(n_max, p - 1) and 1000 * p > 1001 * n_lo:
                return False
        prev = p
        if prev > n_max:
            return True
    return False


def galois_interval_prime(n: int, r: int) -> PrimeWitness | None:
    """Smallest prime in the open interval ((n+r)/2, n-2).

    When n + r >= 48 and 3n >= 24 + 5r the interval is guaranteed nonempty;
    outside those hypotheses this is a plain search with no guarantee.
    """
    lo = Fraction(n + r, 2)
    start = lo.numerator // lo.denominator + 1
    for k in range(max(start, 2), n - 2):
        if is_prime(k):
            return PrimeWitness(k)
    return None


# ---------------------------------------------------------------------------
# Polynomials over a prime field


@dataclass(frozen=True)
class FFPoly:
    """Polynomial over F_ell: residues in [0, ell), leading residue nonzero."""

    modulus: int
    coeffs: tuple[int, ...]

    def __init__(self, modulus: int, coeffs):
        if not is_prime(modulus):
            raise ValueError(f"{modulus} is not prime")
        vals = [c % modulus for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", tuple(vals))

    @classmethod
    def from_coeffs(cls, coeffs, modulus: int) -> "FFPoly":
        return cls(modulus, coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _ff_gcd_is_one(a: list[int], b: list[int], ell: int) -> bool:
    """gcd(a, b) in F_ell[x] has degree 0 (inputs as coefficient lists)."""

    def strip(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a = strip([c % ell for c in a])
    b = strip([c % ell for c in b])
    while b:
        inv = pow(b[-1], ell - 2, ell)
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            shift = len(a) - 1 - db
            factor = a[-1] * inv % ell
            for i in range(len(b)):
                a[i + shift] = (a[i + shift] - factor * b[i]) % ell
            strip(a)
        a, b = b, a
    return len(a) == 1


class _FFContext:
    """Repeated multiplication in F_ell[x]/(f) for a fixed monic modulus.

    The fast path keeps residues in int64 vectors; products are exact because
    (2n+1)(ell-1)**2 < 2**63 is checked up front, otherwise a plain Python
    path is used.
    """

    def __init__(self, f_coeffs: list[int], ell: int):
        n = len(f_coeffs) - 1
        if n < 1 or f_coeffs[-1] % ell != 1:
            raise ValueError("monic modulus of positive degree required")
        self.ell = ell
        self.n = n
        self.fast = (2 * n + 1) * (ell - 1) ** 2 < 2**63
        if self.fast:
            self.f = np.array([c % ell for c in f_coeffs], dtype=np.int64)
            red = np.zeros((max(n - 1, 1), n), dtype=np.int64)
            cur = (-self.f[:n]) % ell  # x**n mod f
            red[0] = cur
            for i in range(1, n - 1):
                top = cur[n - 1]
                nxt = np.zeros(n, dtype=np.int64)
                nxt[1:] = cur[: n - 1]
                nxt = (nxt + top * red[0]) % ell
                red[i] = nxt
                cur = nxt
            self.red = red
        else:
            self.f = [c % ell for c in f_coeffs]

    def x(self):
        if self.n == 1:
            if self.fast:
                return (-self.f[:1]) % self.ell
            return [(-self.f[0]) % self.ell]
        if self.fast:
            v = np.zeros(self.n, dtype=np.int64)
            v[1] = 1
            return v
        v = [0] * self.n
        v[1] = 1
        return v

    def mul(self, a, b):
        ell, n = self.ell, self.n
        if self.fast:
            full = np.convolve(a, b) % ell
            low = np.zeros(n, dtype=np.int64)
            low[: min(n, full.shape[0])] = full[:n]
            high = full[n:]
            if high.shape[0]:
                low = (low + high @ self.red[: high.shape[0]]) % ell
            return low
        out = [0] * (2 * n - 1)
        for i, av in enumerate(a):
            if av:
                for j, bv in enumerate(b):
                    out[i + j] = (out[i + j] + av * bv) % ell
        for i in range(2 * n - 2, n - 1, -1):
            c = out[i]
            if c:
                out[i] = 0
                for j in range(n):
                    out[i - n + j] = (out[i - n + j] - c * self.f[j]) % ell
        return out[:n]

    def pow_ell(self, a):
        """a**ell mod f by square-and-multiply."""
        result = None
        base = a
        e = self.ell
        while e:
            if e & 1:
                result = base if result is None else self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def equal(self, a, b) -> bool:
        if self.fast:
            return bool(np.array_equal(a, b))
        return list(a) == list(b)

    def aslist(self, a) -> list[int]:
        if self.fast:
            return [int(v) for v in a]
        return list(a)


def _frobenius_ladder_irreducible(coeffs: list[int], ell: int, prefilter: int = 0) -> bool:
    """Core of the irreducibility test over F_ell.

    Computes x**(ell**k) mod f for k = 1..n and applies the Frobenius-power
    criterion: gcd(x**(ell**(n/q)) - x, f) = 1 for every prime q | n and
    x**(ell**n) == x mod f.  With prefilter = m > 0, coprimality is also
    checked at k <= m; that only short-circuits provably reducible inputs.
    """
    n = len(coeffs) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    lead = coeffs[-1] % ell
    if lead == 0:
        raise ValueError("degree drops mod ell; leading coefficient vanishes")
    if lead != 1:
        inv = pow(lead, ell - 2, ell)
        coeffs = [c * inv % ell for c in coeffs]
    ctx = _FFContext(coeffs, ell)
    targets = {n // q for q, _ in factorize(n)}
    x = ctx.x()
    h = x
    f_list = [c % ell for c in coeffs]
    for k in range(1, n + 1):
        h = ctx.pow_ell(h)
        if k == n:
            return ctx.equal(h, x)
        if k in targets or k <= prefilter:
            diff = [(hv - xv) % ell for hv, xv in zip(ctx.aslist(h), ctx.aslist(x))]
            if any(diff) and not _ff_gcd_is_one(f_list, diff, ell):
                return False
            if not any(diff):
                # x**(ell**k) == x with k < n: every factor degree divides k
                return False
    return False


def ff_irreducible(f: FFPoly) -> bool:
    """Irreducibility of f over the field of `f.modulus` elements.

    Equivalent to: x**(ell**n) == x mod f and gcd(x**(ell**(n/q)) - x, f) = 1
    for every prime q dividing n, evaluated by repeated-squaring modular
    exponentiation.
    """
    if f.degree <= 0:
        return False
    return _frobenius_ladder_irreducible(list(f.coeffs), f.modulus)


def find_ff_witness(coeffs, ell_max: int = 10_000) -> int | None:
    """Smallest prime ell <= ell_max such that the reduction of the given
    monic integer polynomial is irreducible over F_ell, or None.

    None is the expected outcome for polynomials with square discriminant.
    """
    coeffs = list(getattr(coeffs, "coeffs", coeffs))
    if not coeffs or coeffs[-1] != 1:
        raise ValueError("monic integral polynomial required")
    n = len(coeffs) - 1
    for ell in iter_primes(2, ell_max):
        if coeffs[0] % ell == 0:
            continue  # x divides the reduction
        if _frobenius_ladder_irreducible([c % ell for c in coeffs], ell, prefilter=3):
            return ell
    return None
