from .base_p import base_p_digits, base_p_family
from .boosting import BoostStep, DoublingTrace, concat_boost, double_boost_family, scale_boost
from .lifting import bit_lift, lifted_length
from .pipeline import BASES, PipelineStats, build_upperbound_family
from .scaling import (
    ScalingSet,
    find_scaling_set,
    is_scaling_set,
    products,
    scale_cover_boost,
    scaling_set_bound,
)

__all__ = [
    "BASES",
    "BoostStep",
    "DoublingTrace",
    "PipelineStats",
    "ScalingSet",
    "base_p_digits",
    "base_p_family",
    "bit_lift",
    "build_upperbound_family",
    "concat_boost",
    "double_boost_family",
    "find_scaling_set",
    "is_scaling_set",
    "lifted_length",
    "products",
    "scale_boost",
    "scale_cover_boost",
    "scaling_set_bound",
]
