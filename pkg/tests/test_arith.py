import random
from fractions import Fraction

import pytest
import sympy

from glpcert.arith import (
    FFPoly,
    check_harborth_kemnitz,
    check_scaled_interval_primes,
    divisors,
    factorize,
    ff_irreducible,
    find_ff_witness,
    galois_interval_prime,
    interval_constant_bounds,
    is_prime,
    iter_primes,
    next_prime,
    prime_in_interval,
    primes_upto,
)
from glpcert.polynomials import glp_monic
from glpcert.tables import WITNESS_TABLE


def test_is_prime_examples():
    assert is_prime(2)
    assert not is_prime(1)
    assert not is_prime(0)
    assert not is_prime(-7)
    # 48683 = 89 * 547 despite looking prime-ish
    assert not is_prime(48683)
    assert is_prime(48731)
    assert is_prime(65537)


def test_is_prime_matches_sieve_oracle():
    sieve = set(primes_upto(1_000_000))
    for m in range(1_000_000 + 1):
        assert is_prime(m) == (m in sieve), m


def test_is_prime_matches_sympy_on_random_64bit():
    rng = random.Random(20240811)
    for _ in range(10_000):
        m = rng.getrandbits(64)
        assert is_prime(m) == sympy.isprime(m), m


def test_next_prime():
    assert next_prime(0) == 2
    assert next_prime(2) == 3
    assert next_prime(89) == 97
    assert next_prime(10**6) == 1000003


def test_iter_primes_matches_dense_sieve():
    assert list(iter_primes(2, 10_000)) == primes_upto(10_000)
    assert list(iter_primes(9_973, 10_007)) == [9973, 10007]
    assert list(iter_primes(15, 13)) == []
    # segment boundaries
    assert list(iter_primes(2, 600, segment=100)) == primes_upto(600)


def test_factorize_and_divisors():
    assert factorize(1) == []
    assert factorize(48683) == [(89, 1), (547, 1)]
    assert factorize(2**5 * 3**2 * 97) == [(2, 5), (3, 2), (97, 1)]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    for m in range(1, 500):
        prod = 1
        for p, e in factorize(m):
            assert is_prime(p)
            prod *= p**e
        assert prod == m


def test_prime_in_interval():
    assert prime_in_interval(Fraction(13, 2), 10).p == 7
    assert prime_in_interval(5, 6) is None
    assert prime_in_interval(105, 120).p == 107
    assert prime_in_interval(Fraction(5, 1), 7).p == 7


def test_interval_constant_values():
    lo, hi = interval_constant_bounds(2)
    assert lo <= hi
    assert 48 < lo and hi < 49  # 4 e^{5/2}
    assert hi - lo < Fraction(1, 10**20)
    lo3, hi3 = interval_constant_bounds(3)
    assert 111 < lo3 and hi3 < 112
    lo5, hi5 = interval_constant_bounds(5)
    assert 746 < lo5 and hi5 < 747


def test_scaled_interval_primes():
    assert check_scaled_interval_primes(2, 10**6)
    assert check_scaled_interval_primes(3, 10**6)
    assert check_scaled_interval_primes(5, 10**6)


def test_scaled_interval_matches_direct_loop():
    # independent re-check of the gap-based sweep on a small range
    h, n_max = 2, 20_000
    primes = primes_upto(n_max)
    largest = 0
    idx = 0
    ok = True
    for n in range(48, n_max + 1):
        while idx < len(primes) and primes[idx] <= n:
            largest = primes[idx]
            idx += 1
        if h * largest < n * (h - 1):
            ok = False
    assert ok == check_scaled_interval_primes(h, n_max)


def test_harborth_kemnitz_range():
    assert check_harborth_kemnitz(10**5)
    # the first gap that would fail a much tighter ratio: sanity-check the
    # exact comparison by shrinking the window artificially is out of scope;
    # instead re-check a slice directly
    primes = primes_upto(110_000)
    import bisect

    for n in range(48683, 50_000):
        j = bisect.bisect_right(primes, n)
        nxt = primes[j]
        assert 1000 * nxt <= 1001 * n, n


def test_survey_tail_thresholds():
    # the survey tail needs a prime in (839n/840, n] for every n past the
    # threshold (largest prime a <= n must satisfy 840 a > 839 n)
    def interval_holds_from(n_min, n_max=100_000):
        primes = primes_upto(n_max + 200)
        prev = None
        for p in primes:
            if prev is not None:
                n_lo = max(n_min, prev)
                n_hi = min(n_max, p - 1)
                if n_lo <= n_hi and 840 * prev <= 839 * n_hi:
                    return False
            prev = p
        return True

    assert interval_holds_from(48742)
    # the sharpest valid threshold is 44351: the gap 44293 -> 44351 makes
    # n in [44346, 44350] fail, so the quoted 44350 is off by one
    assert interval_holds_from(44351)
    assert not interval_holds_from(44350)
    assert is_prime(44293) and next_prime(44293) == 44351


def test_galois_interval_prime():
    assert galois_interval_prime(48, 0).p == 29
    w = galois_interval_prime(100, 8)
    assert w is not None and Fraction(108, 2) < w.p < 98
    assert galois_interval_prime(10, 8) is None


def test_galois_interval_prime_hypotheses_small():
    # wherever the hypotheses hold (n + r >= 48, 3n >= 24 + 5r) the interval
    # is nonempty
    for n in range(9, 200):
        for r in range(0, (3 * (n - 8)) // 5 + 1):
            if n + r < 48:
                continue
            assert galois_interval_prime(n, r) is not None, (n, r)


def test_ffpoly_basics():
    f = FFPoly(5, [6, 11, 1])
    assert f.coeffs == (1, 1, 1)
    assert f.degree == 2
    with pytest.raises(ValueError):
        FFPoly(6, [1, 1])


def test_ff_irreducible_examples():
    assert ff_irreducible(FFPoly(2, [1, 1, 1]))
    assert not ff_irreducible(FFPoly(3, [-1, 0, 1]))
    assert ff_irreducible(FFPoly(13, glp_monic(6, 3).coeffs))
    assert ff_irreducible(FFPoly(7, [3, 1]))       # linear
    assert not ff_irreducible(FFPoly(7, [3]))      # constant


def _brute_force_irreducible(coeffs, ell):
    """Trial division by every monic polynomial of degree 1..n//2 mod ell."""
    import itertools

    def monic_divides(f, g):
        rem = [c % ell for c in f]
        while rem and rem[-1] == 0:
            rem.pop()
        while len(rem) >= len(g):
            lead = rem[-1]
            shift = len(rem) - len(g)
            for i, gc in enumerate(g):
                rem[shift + i] = (rem[shift + i] - lead * gc) % ell
            while rem and rem[-1] == 0:
                rem.pop()
        return not rem

    n = len(coeffs) - 1
    for k in range(1, n // 2 + 1):
        for lower in itertools.product(range(ell), repeat=k):
            if monic_divides(coeffs, list(lower) + [1]):
                return False
    return True


def test_ff_irreducible_matches_exhaustive_search():
    import itertools

    for ell in (2, 3, 5, 7):
        for degree in range(2, 5):
            for lower in itertools.product(range(ell), repeat=degree):
                coeffs = list(lower) + [1]
                expected = _brute_force_irreducible(coeffs, ell)
                assert ff_irreducible(FFPoly(ell, coeffs)) == expected, (ell, coeffs)


def test_ff_irreducible_python_fallback_path():
    # modulus large enough to trip the int64 overflow guard: 2^31 - 1 is
    # prime and is 3 mod 4, so x^2 + 1 is irreducible while x^2 - 1 splits
    ell = 2**31 - 1
    assert ff_irreducible(FFPoly(ell, [1, 0, 1]))
    assert not ff_irreducible(FFPoly(ell, [-1, 0, 1]))
    # x^3 + x - 2 has the root 1
    assert not ff_irreducible(FFPoly(ell, [-2, 1, 0, 1]))


def test_witness_table_rows_reduce_irreducibly():
    for r, n, ell in WITNESS_TABLE:
        if ell is None:
            continue
        assert is_prime(ell)
        assert ff_irreducible(FFPoly(ell, glp_monic(n, r).coeffs)), (r, n, ell)


def test_find_ff_witness():
    assert find_ff_witness(glp_monic(4, 4)) == 17
    assert find_ff_witness(glp_monic(6, 3), ell_max=100) == 13
    assert find_ff_witness(glp_monic(120, 8)) <= 613


def test_stickelberger_negative_control():
    # square discriminant: no prime field sees an irreducible reduction
    assert find_ff_witness(glp_monic(4, 5), ell_max=10_000) is None
