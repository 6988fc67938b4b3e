"""
The base-p family: index i written in base p, the digit string repeated p
times with block b scaled by b mod p.
"""

from __future__ import annotations

import logging

import numpy as np

from django_zpcover.arithmetic import ceil_log
from django_zpcover.families import CoverSet, CoveringFamily
from django_zpcover.utils import check_budget
from django_zpcover.validators import validate_positive, validate_prime

logger = logging.getLogger(__name__)


def base_p_digits(size: int, p: int, digits: int) -> np.ndarray:
    """(size, digits) matrix of base-p digits, most significant first."""
    places = p ** np.arange(digits - 1, -1, -1, dtype=np.int64)
    return (np.arange(size, dtype=np.int64)[:, None] // places[None, :]) % p


def base_p_family(p: int, size: int) -> CoveringFamily:
    """
    Z_p-covering family of ``size`` vectors and length p·ceil(log_p size).

    For two indices whose digit strings differ by Δ ≠ 0 in some place, block b
    contributes b·Δ, so the p blocks realise every element of Z_p (block p is
    identically zero).

    Args:
        p: Prime modulus (2 is allowed)
        size: Number of vectors N ≥ 1; N = 1 gives the all-zero vector of length p

    Returns:
        CoveringFamily: Claimed cover Z_p

    Examples:
        ```python
        base_p_family(3, 9).ell   # 6
        base_p_family(5, 1)[0]    # (0, 0, 0, 0, 0)
        ```
    """
    p = validate_prime(p)
    size = validate_positive(size, "N")
    digits = ceil_log(size, p)
    check_budget(size * p * digits, "base-p family")

    digit_matrix = base_p_digits(size, p, digits)
    blocks = [(digit_matrix * b) % p for b in range(1, p + 1)]
    logger.debug(f"Built base-{p} family of size {size} with {digits} digits")
    return CoveringFamily(p, np.hstack(blocks), claimed_cover=CoverSet.full(p))
