import math
from fractions import Fraction

import pytest

from glpcert.polynomials import (
    HurwitzPoly,
    IntPoly,
    RatPoly,
    admissible_modification,
    bessel_monic,
    binom_rational,
    discriminant_alpha,
    discriminant_formula,
    discriminant_resultant,
    en_hurwitz,
    factor_identity_check,
    glp_alpha,
    glp_hurwitz,
    glp_monic,
    resultant,
)


def test_intpoly_basics():
    p = IntPoly([2, 2, 1])
    assert p.degree == 2
    assert p(0) == 2 and p(-1) == 1
    assert IntPoly([0, 0]).is_zero()
    assert IntPoly().degree == -1
    with pytest.raises(TypeError):
        IntPoly([1.5])


def test_intpoly_arithmetic():
    f = IntPoly([1, 1])
    g = IntPoly([-1, 1])
    assert (f * g).coeffs == (-1, 0, 1)
    assert (f + g).coeffs == (0, 2)
    assert (3 * f).coeffs == (3, 3)
    assert f.shifted(2).coeffs == (0, 0, 1, 1)
    assert IntPoly([2, 3, 0, 1]).derivative().coeffs == (3, 0, 3)


def test_glp_monic_examples():
    assert glp_monic(1, 5).coeffs == (6, 1)
    assert glp_monic(2, 0).coeffs == (2, 2, 1)
    assert glp_monic(2, 2).coeffs == (12, 6, 1)
    assert glp_monic(2, 2) == bessel_monic(2)


def test_bessel_matches_family_at_r_equals_n():
    for n in range(0, 12):
        assert bessel_monic(n) == glp_monic(n, n)


def test_glp_monic_positive_coefficients():
    for n in range(0, 15):
        for r in range(0, 10):
            poly = glp_monic(n, r)
            assert poly.is_monic
            assert all(c > 0 for c in poly.coeffs)


def test_glp_hurwitz_examples():
    assert glp_hurwitz(5, 0).hcoeffs == (1, 1, 1, 1, 1, 1)
    assert glp_hurwitz(5, 0) == en_hurwitz(5)
    assert glp_hurwitz(4, 2).hcoeffs[0] == math.comb(6, 2) == 15
    assert glp_hurwitz(6, 3).hcoeffs[0] == math.comb(9, 3) == 84
    for n in range(0, 10):
        for r in range(0, 6):
            f = glp_hurwitz(n, r)
            assert f.hcoeffs[-1] == 1
            assert f.hcoeffs[0] == math.comb(n + r, r)


def test_monic_is_factorial_times_hurwitz():
    for n in range(0, 51):
        for r in range(0, 21):
            assert glp_hurwitz(n, r).integral_form() == glp_monic(n, r)


def test_hurwitz_ratpoly_roundtrip():
    f = glp_hurwitz(7, 4)
    assert HurwitzPoly.from_ratpoly(f.to_ratpoly()) == f


def test_glp_alpha_examples():
    # reparametrisation: alpha = -1 - n - r
    assert glp_alpha(2, -5) == glp_hurwitz(2, 2).to_ratpoly()
    scaled = 24 * glp_alpha(4, 5)
    assert scaled.to_intpoly().coeffs == (3024, -2016, 432, -36, 1)
    assert (6 * glp_alpha(3, -3)).to_intpoly().coeffs == (0, 0, 0, 1)


def test_glp_alpha_matches_negative_r_monic():
    # the monic constructor accepts negative r and must agree with the
    # rational-parameter form under alpha = -1 - n - r
    for n, alpha in ((4, 5), (4, 23), (3, 2), (5, 0)):
        r = -1 - n - alpha
        assert glp_monic(n, r).to_ratpoly() == math.factorial(n) * glp_alpha(n, alpha)


def test_exceptional_roots():
    assert (24 * glp_alpha(4, 5))(Fraction(6)) == 0
    assert (24 * glp_alpha(4, 23))(Fraction(30)) == 0


def test_binom_rational_falling_factorial():
    assert binom_rational(Fraction(1, 5), 3) == Fraction(6, 125)
    assert binom_rational(-1, 4) == 1
    assert binom_rational(7, 2) == 21


def test_factor_identity():
    assert factor_identity_check(3, 3)
    assert factor_identity_check(5, 2)
    assert factor_identity_check(30, 17)
    for n in range(1, 31):
        for a in range(1, n + 1):
            assert factor_identity_check(n, a), (n, a)


def test_derivative_coherence():
    assert glp_hurwitz(5, 3).derivative() == glp_hurwitz(4, 3)
    assert en_hurwitz(1).derivative() == en_hurwitz(0)
    assert glp_hurwitz(10, 8).derivative() == glp_hurwitz(9, 8)
    for n in range(1, 51):
        for r in range(0, 21):
            assert glp_hurwitz(n, r).derivative() == glp_hurwitz(n - 1, r)


def test_difference_equation():
    for alpha in (-7, Fraction(-1, 2), 0, 3):
        for n in range(1, 21):
            lhs = glp_alpha(n, alpha - 1) - glp_alpha(n, alpha)
            assert lhs == glp_alpha(n - 1, alpha), (n, alpha)


def test_hypergeometric_identity():
    # x y'' + (alpha + 1 - x) y' + n y = 0 as a finite polynomial identity
    for n, alpha in ((5, 0), (6, 3), (4, Fraction(-1, 2)), (7, -9)):
        y = glp_alpha(n, alpha)
        lhs = (y.derivative().derivative().shifted(1)
               + (Fraction(alpha) + 1) * y.derivative()
               - y.derivative().shifted(1)
               + n * y)
        assert lhs.is_zero(), (n, alpha)


def test_discriminant_formula_examples():
    assert discriminant_formula(2, 0) == -4
    for r in range(0, 20):
        assert discriminant_formula(2, r) == -4 * (r + 1)
    d = discriminant_formula(4, 5)
    assert math.isqrt(d) ** 2 == d


def test_discriminant_alpha_examples():
    assert discriminant_alpha(2, -2) == 0
    assert discriminant_alpha(3, 0) == 4 * 2 * 27 * 9


def test_discriminant_alpha_consistent_with_formula():
    for n in range(1, 11):
        for r in range(0, 11):
            assert discriminant_alpha(n, -1 - n - r) == discriminant_formula(n, r)


def test_discriminant_resultant_examples():
    assert discriminant_resultant(IntPoly([2, 2, 1])) == -4
    assert discriminant_resultant(IntPoly([2, 3, 0, 1])) == -216
    assert discriminant_resultant(glp_monic(6, 3)) == discriminant_formula(6, 3)


def test_discriminant_resultant_root_product_oracle():
    # disc of prod (x - a_i) equals prod_{i<j} (a_i - a_j)^2
    for roots in ((1, 2, 3), (-2, 0, 5, 7), (1, -1, 4, 9, -6)):
        poly = IntPoly([1])
        for a in roots:
            poly = poly * IntPoly([-a, 1])
        expected = 1
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                expected *= (roots[i] - roots[j]) ** 2
        assert discriminant_resultant(poly) == expected


def test_discriminant_resultant_scaling():
    # disc(c f) = c^(2n-2) disc(f) for degree n
    f = IntPoly([2, 3, 0, 1])
    cf = 5 * f
    assert discriminant_resultant(cf) == 5 ** (2 * 3 - 2) * discriminant_resultant(f)


def test_resultant_multiplicativity():
    f = IntPoly([1, 1])
    g = IntPoly([-3, 1])
    h = IntPoly([2, 0, 1])
    assert resultant(f * g, h) == resultant(f, h) * resultant(g, h)


def test_admissible_modification_validation():
    base = glp_monic(3, 1).to_ratpoly()
    same = admissible_modification(base, [1, 1, 1, 1])
    assert same == base
    zeroed = admissible_modification(base, [1, 0, 0, 1])
    assert zeroed.coeffs[1] == 0 and zeroed.coeffs[2] == 0
    with pytest.raises(ValueError):
        admissible_modification(base, [2, 1, 1, 1])
    with pytest.raises(ValueError):
        admissible_modification(base, [1, 1, 1, -1])
    with pytest.raises(ValueError):
        admissible_modification(base, [1, 1, 1])


def test_admissible_modification_counterexample_family():
    for m in (1, 2, 5):
        r = 4 * m * m - 1
        doubled = 2 * glp_alpha(2, -1 - 2 - r)
        modified = admissible_modification(doubled, [-1, m, 1])
        expected = RatPoly([-4 * m * m * (4 * m * m + 1), 8 * m**3, 1])
        assert modified == expected
        split = RatPoly([-2 * m, 1]) * RatPoly([2 * m + 8 * m**3, 1])
        assert modified == split
