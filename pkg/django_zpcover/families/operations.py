"""
Structural operations on families: zero padding and Cartesian concatenation.
"""

from __future__ import annotations

import logging

import numpy as np

from django_zpcover.exceptions import DomainError
from django_zpcover.utils import check_budget
from django_zpcover.validators import validate_positive

from .base import CoverSet, CoveringFamily

logger = logging.getLogger(__name__)


def append_zeros(family: CoveringFamily, extra: int) -> CoveringFamily:
    """
    Append ``extra`` zero coordinates to every vector.

    Every pair gains the difference 0, so a (Z_p ∖ {0})-covering family becomes
    Z_p-covering. The claimed cover, if any, gains 0.

    Raises:
        DomainError: If extra < 1
    """
    extra = validate_positive(extra, "extra")
    check_budget(family.size * (family.ell + extra), "zero padding")
    padded = np.hstack([family.vectors, np.zeros((family.size, extra), dtype=np.int64)])
    claim = family.claimed_cover
    if claim is not None:
        claim = claim | CoverSet.from_elements(family.p, [0])
    return CoveringFamily(family.p, padded, claimed_cover=claim)


def concat_families(first: CoveringFamily, second: CoveringFamily) -> CoveringFamily:
    """
    All |first|·|second| concatenations (a, b), ordered by a then b.

    Pairs that differ in both halves cover the union of what each half covers,
    pairs sharing one half cover what the other half covers; so the result is
    covering for the intersection of the two claims.

    Raises:
        DomainError: If the moduli differ
        BudgetExceeded: If the result would not fit the memory budget
    """
    if first.p != second.p:
        raise DomainError(f"cannot concatenate families over Z_{first.p} and Z_{second.p}")
    size = first.size * second.size
    check_budget(size * (first.ell + second.ell), "concatenation")
    left = np.repeat(first.vectors, second.size, axis=0)
    right = np.tile(second.vectors, (first.size, 1))
    claim = None
    if first.claimed_cover is not None and second.claimed_cover is not None:
        claim = first.claimed_cover & second.claimed_cover
    logger.debug(f"Concatenating {first} with {second}")
    return CoveringFamily(first.p, np.hstack([left, right]), claimed_cover=claim)
