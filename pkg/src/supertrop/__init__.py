"""Supertropical valuation theory: bipotent semirings, semirings with ghosts,
m-valuations and supervaluations, MFCE quotients, and tropicalization checks.

The heavy lifting lives in the submodules; this package re-exports the names
needed for the common workflows (building fixtures, validating axioms,
running valuation and supervaluation checks, querying corner loci).
"""

from .core_order import (
    BOTTOM,
    BipotentSemiring,
    FiniteSemiringTable,
    OrderedMonoid,
    ThetaValue,
    check_bipotent,
    check_ordered_monoid,
    check_semiring_axioms,
    induced_order,
    monoid_of,
    tg_from_monoid,
    theta,
    theta_monoid,
    theta_semiring,
)
from .supertropical import (
    FiniteSupertropical,
    STRStructure,
    check_supertropical_axioms,
    d_of,
    finite_from_json,
    finite_from_table,
    ghost,
    ghost_map,
    materialize,
    readdition_check,
    st_add,
    str_construct,
    tangible,
    tangible_closed_check,
)
from .valuation import (
    MValuationInstance,
    check_mvaluation,
    dominates_mval,
    gamma_of,
    is_insensitive,
    is_strict,
    is_strong,
    nu_valuation,
    support,
)
from .superval import (
    Supervaluation,
    check_dominance,
    check_supervaluation,
    check_transmission,
    compose,
    cover_of,
    derive_transmission,
    initial_cover,
    is_tangibly_additive,
    is_very_strong,
)
from .equiv_lattice import (
    MFCERelation,
    check_mfce,
    check_unit_equivalence,
    cov_lattice,
    diagonal,
    e_L,
    e_nu,
    e_t,
    enumerate_mfce,
    hat_v,
    join,
    meet,
    mfc_lattice,
    orbital,
    quotient,
    quotient_superval,
    saturate,
    sup_cover,
    sv_relation,
)
from .trop_poly import (
    Polynomial,
    check_iq_valuation,
    check_ub_semiring,
    corner_query,
    eval_strong_check,
    eval_superval_check,
    evaluate,
    gs,
    kapranov_corner_check,
    kapranov_gs_check,
    manufactured_root_trial,
    phi_tilde,
    polynomial_ring,
    root_query,
    semifield_lattice_check,
    tangible_section_cover,
    v_tilde,
)
from .instances import (
    PuiseuxFraction,
    PuiseuxSeries,
    convex_subgroup_valuation,
    degree_valuation,
    field_ring,
    leading_power_superval,
    leading_term_superval,
    padic_valuation,
    puiseux_fraction_valuation,
    puiseux_ring,
    puiseux_valuation,
    reciprocal_valuation,
    series,
)
from .parsing import ParseError, parse_point, parse_polynomial, parse_series
from .fixtures import (
    BUILDERS,
    TABLE_BUILDERS,
    all_ghost_fixture,
    fixture_names,
    load_supertropical,
    load_table,
    truncation_fixture,
    z2_fixture,
    z4_fixture,
)
from .reporting import Checker, Report, WitnessError
