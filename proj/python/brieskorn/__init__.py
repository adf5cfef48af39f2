"""Exact invariants of Brieskorn homology spheres.

Thin wrapper over the compiled core: delta/tau sequences, graded roots,
Casson and d-invariants, torus-knot concordance values and group-action
obstruction verdicts.
"""

from ._core import (
    BrieskornError,
    bound_n,
    classify_maxima,
    delta_at,
    delta_via_semigroup,
    lattice_count_tau1,
    min_tau,
    unique_representation,
    branched_bound,
    branched_rational_ball_verdict,
    casson,
    connected_sum_verdict,
    d_invariant_minus,
    delta_inf,
    delta_inf_minus_delta,
    free_rational_ball_verdict,
    graded_root,
    graded_root_dot,
    hf_red_rank,
    invariant_report,
    kappa,
    positive_definite_verdict,
    reference_table,
    scan,
    seifert_data,
    sigma_equivariant,
    tau_profile,
    torus_knot,
)

__all__ = [
    "BrieskornError",
    "bound_n",
    "classify_maxima",
    "delta_at",
    "delta_via_semigroup",
    "lattice_count_tau1",
    "min_tau",
    "unique_representation",
    "branched_bound",
    "branched_rational_ball_verdict",
    "casson",
    "connected_sum_verdict",
    "d_invariant_minus",
    "delta_inf",
    "delta_inf_minus_delta",
    "free_rational_ball_verdict",
    "graded_root",
    "graded_root_dot",
    "hf_red_rank",
    "invariant_report",
    "kappa",
    "positive_definite_verdict",
    "reference_table",
    "scan",
    "seifert_data",
    "sigma_equivariant",
    "tau_profile",
    "torus_knot",
]
