"""Exact-arithmetic certification toolkit for the generalized Laguerre
family at negative integer parameters: polynomial construction, p-adic
Newton polygons, irreducibility and Galois-group certificates, and the
reproducible survey pipeline behind the bundled reference tables."""

from .polynomials import (
    HurwitzPoly,
    IntPoly,
    RatPoly,
    admissible_modification,
    bessel_monic,
    discriminant_alpha,
    discriminant_formula,
    discriminant_resultant,
    en_hurwitz,
    factor_identity_check,
    glp_alpha,
    glp_hurwitz,
    glp_monic,
)
from .newton import (
    NewtonPolygon,
    dumas_degree_set,
    en_polygon,
    is_coleman_integral,
    newton_index,
    newton_polygon,
    ord_p,
    pivotal_indices,
    polygon_equals_en,
    polygon_of_hurwitz,
    polygon_of_intpoly,
)
from .criteria import (
    IrredCertificate,
    carries,
    coleman_criterion,
    coprime_criterion,
    decide_irreducible,
    decompose,
    eisenstein_dumas,
    filaseta_excludes,
    guaranteed_irreducible_bound,
    prime_interval_criterion,
    renormalize,
    slope_divisor,
    verify_certificate,
)
from .galois import (
    GaloisCertificate,
    alternating_certificate,
    decide_small_n,
    disc_is_square,
    disc_square_pattern,
    jordan_criterion,
    jordan_slope_witness,
    quartic_resolvent,
    transitive_order_filter,
    verify_curve_points,
    verify_reciprocal_slope,
)
from .arith import (
    FFPoly,
    check_harborth_kemnitz,
    check_scaled_interval_primes,
    ff_irreducible,
    find_ff_witness,
    galois_interval_prime,
    is_prime,
    prime_in_interval,
)
from .survey import (
    ScanRecord,
    ScanReport,
    galois_sweep,
    modification_experiment,
    scan_box,
    verify_jordan_table,
    verify_witness_table,
)

__version__ = "0.1.0"
