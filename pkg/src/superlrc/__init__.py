"""Optimal locally repairable codes: finite-field algebra, evaluation-set
constructions driven by block designs, length bounds and exact certification."""

from .algebra import GF, field
from .bounds import (
    BoundInputs,
    BoundNotApplicable,
    combined_bound,
    is_optimal,
    length_bound_delta2,
    length_bound_delta_gt2,
    singleton_bound,
)
from .designs import BlockFamily, affine_plane_lines, steiner_triple_bose, sunflower
from .io import code_from_json, code_to_json
from .lrc import (
    LrcCode,
    LrcParams,
    construct,
    construct_from_family,
    delta_reduce,
    encode,
    global_decode,
    local_repair,
    puncture_reduce,
    recover,
)
from .verify import certify_optimal, check_locality, check_mds_partition, min_distance

__version__ = "0.1.0"

__all__ = [
    "BlockFamily",
    "BoundInputs",
    "BoundNotApplicable",
    "GF",
    "LrcCode",
    "LrcParams",
    "affine_plane_lines",
    "certify_optimal",
    "check_locality",
    "check_mds_partition",
    "code_from_json",
    "code_to_json",
    "combined_bound",
    "construct",
    "construct_from_family",
    "delta_reduce",
    "encode",
    "field",
    "global_decode",
    "is_optimal",
    "length_bound_delta2",
    "length_bound_delta_gt2",
    "local_repair",
    "min_distance",
    "puncture_reduce",
    "recover",
    "singleton_bound",
    "steiner_triple_bose",
    "sunflower",
]
