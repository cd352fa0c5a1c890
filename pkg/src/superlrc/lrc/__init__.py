from .code import (
    EvaluationPlan,
    LrcCode,
    LrcError,
    LrcParams,
    PlanError,
    plan_from_family,
)
from .construction import (
    SingularPlanError,
    auxiliary_values,
    construct,
    construct_from_family,
    construction_encode,
    encode,
    global_check_sums,
    identical_plan,
    sunflower_plan,
)
from .decoding import DecodingError, LocalRepairError, global_decode, local_repair, recover
from .reduction import ReductionError, delta_reduce, m2_reduce, puncture_reduce, replicated_rs_fixture

__all__ = [
    "DecodingError",
    "EvaluationPlan",
    "LocalRepairError",
    "LrcCode",
    "LrcError",
    "LrcParams",
    "PlanError",
    "ReductionError",
    "SingularPlanError",
    "auxiliary_values",
    "construct",
    "construct_from_family",
    "construction_encode",
    "delta_reduce",
    "encode",
    "global_check_sums",
    "global_decode",
    "identical_plan",
    "local_repair",
    "m2_reduce",
    "plan_from_family",
    "puncture_reduce",
    "recover",
    "replicated_rs_fixture",
    "sunflower_plan",
]
