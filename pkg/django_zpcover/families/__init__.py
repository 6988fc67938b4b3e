from .base import CoverSet, CoveringFamily
from .operations import append_zeros, concat_families
from .verifier import (
    CoverageReport,
    DeficitEntry,
    cover_deficit,
    covered_set,
    is_covering,
    pair_cover_set,
    verify_or_raise,
)
from .zpcf import format_family, parse_family, read_family, write_family

__all__ = [
    "CoverSet",
    "CoveringFamily",
    "CoverageReport",
    "DeficitEntry",
    "append_zeros",
    "concat_families",
    "cover_deficit",
    "covered_set",
    "format_family",
    "is_covering",
    "pair_cover_set",
    "parse_family",
    "read_family",
    "verify_or_raise",
    "write_family",
]
