"""Exact evaluators, moment counters, and verification sweeps for character
sums over small multiplicative subgroups of prime fields."""

from .curves import (
    CurveBoundReport,
    CurveSpec,
    check_curve_bound,
    count_points,
    delta_eval,
    discriminant,
    discriminant_f0y,
    resultant,
)
from .exponents import (
    AdmissibleRange,
    EtaTable,
    InductionLevel,
    admissible_range,
    as_fraction,
    binomial_bound,
    curve_bound,
    eta,
    eta_lower_shape,
    eta_table,
    induction_trace,
    kappa,
    kloosterman_bound,
    monomial_bound,
    q3_bound,
    theorem_bound,
)
from .field import (
    ExtensionField,
    GuardExceeded,
    PrimeModulus,
    SubgroupSpec,
    additive_character,
    divisors,
    factorize,
    is_prime,
    least_primitive_root,
    multiplicative_order,
    prime_modulus,
    roots_of_unity,
    subgroup,
    unit_root,
)
from .moments import (
    MomentInequalityReport,
    PowerVectorHistogram,
    j_histogram,
    q_bruteforce,
    q_convolution,
    t3_count,
    t3_gcd_reduction,
    verify_moment_inequality,
    xi_exponent,
)
from .prng import (
    EquidistributionReport,
    GeneratorSequence,
    equidistribution_report,
    inversive_generator,
    power_generator,
    write_csv,
    write_u64le,
)
from .sums import (
    SparsePolynomial,
    SumValue,
    complete_sum,
    incomplete_subgroup_sum,
    interval_sum,
    inversive_subgroup_sum,
    kloosterman_subgroup_sum,
    subgroup_sum,
    twisted_sum,
)

__version__ = "0.1.0"
