"""Exact rational powers and integral closures of powers of monomial ideals."""
from .closure import (
    IntegralityCertificate,
    RationalPowerIdeal,
    integral_closure,
    integral_closure_power,
    is_integrally_closed,
    is_nu_star_always_integral,
    jumping_denominator,
    monomial_in_rational_power,
    rational_power,
)
from .expansion import (
    ExpansionReport,
    check_corollary_hypotheses,
    expansion_integer,
    expansion_rational,
    minimal_primes_squarefree,
    symbolic_power_squarefree,
    verify_integer_expansion,
    verify_rational_expansion,
)
from .homology import (
    BettiTable,
    betti_table,
    check_tor_vanishing_certificates,
    depth_and_reg,
    is_betti_splitting,
    partial_sum_ideal,
    verify_depth_reg_theorem,
    verify_filtration_identities,
)
from .lp import LPSolution, dual_vertices, fm_membership_oracle, nu_star
from .monomial import (
    ExponentMatrix,
    MonomialIdeal,
    VariableContext,
    contains,
    delta_star,
    external_sum,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    maximal_ideal_power_times,
    minimalize,
    monomial_in,
)
from .textio import parse_ideal, parse_ideal_file, serialize_ideal

__version__ = "0.1.0"
