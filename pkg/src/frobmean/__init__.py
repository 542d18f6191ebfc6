"""Exact Frobenius numbers for triples and mean-value experiments."""

from .contfrac import RodsethTables, ncf_expand, ncf_value, rcf_expand, rcf_value, rodseth_tables, s1
from .counting import (
    eq4_check,
    is_generic,
    lambda_direct,
    lambda_mean_check,
    lambda_star,
    quadruple_bijection_check,
    region_partition_scan,
    rho_star,
    sigma_weighted_check,
)
from .frobenius import (
    FrobeniusResult,
    GeneratorSet,
    InfiniteGapsError,
    f_three,
    find_multiplier,
    oracle_f,
    oracle_g,
    rho_eval,
)
from .meanvalue import (
    BoxSpec,
    DecayFit,
    MeanValueReport,
    ScaleError,
    box_sums,
    decay_fit,
    fixed_a_error,
)
from .numtheory import NumTheoryTables, build_tables, divisors, heilbronn_lhs, mobius, sigma_minus1, totient

__version__ = "0.1.0"
