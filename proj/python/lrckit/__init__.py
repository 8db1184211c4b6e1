"""Locally repairable codes with length beyond the field size.

Exact construction over GF(q), optimality certification, local/global
erasure repair, code reductions, and the associated length/distance bounds.
"""

from ._core import (
    Code,
    Field,
    affine_plane_lines,
    certify,
    check_ecf,
    check_locality,
    check_mds_partition,
    check_mu_condition,
    check_packing,
    check_uibf,
    combined_bound,
    construct_from_design,
    construct_identical,
    delta_reduce,
    encode,
    global_decode,
    is_optimal,
    johnson_bound,
    length_bound_delta2,
    length_bound_delta_gt2,
    local_repair,
    m2_reduce,
    min_distance,
    next_prime_power,
    overlap,
    prune_to_ecf,
    puncture_reduce,
    reduction_distance_floor,
    replicated_rs_fixture,
    singleton_bound,
    steiner_triple_bose,
    sunflower,
)

__all__ = [
    "Code",
    "Field",
    "affine_plane_lines",
    "certify",
    "check_ecf",
    "check_locality",
    "check_mds_partition",
    "check_mu_condition",
    "check_packing",
    "check_uibf",
    "combined_bound",
    "construct_from_design",
    "construct_identical",
    "delta_reduce",
    "encode",
    "global_decode",
    "is_optimal",
    "johnson_bound",
    "length_bound_delta2",
    "length_bound_delta_gt2",
    "local_repair",
    "m2_reduce",
    "min_distance",
    "next_prime_power",
    "overlap",
    "prune_to_ecf",
    "puncture_reduce",
    "reduction_distance_floor",
    "replicated_rs_fixture",
    "singleton_bound",
    "steiner_triple_bose",
    "sunflower",
]

__version__ = "0.1.0"
