"""
Bit lift: turn a Z_k-covering family into a [0, k−1]-covering family over Z_p.

For an ordered pair (u, u′) and a target k′ ∈ [0, k−1], a coordinate with
u_i − u′_i ≡ k′ (mod k) exists. If u_i ≥ u′_i the unchanged copy realises k′
directly. Otherwise the highest differing bit j has u_i's bit clear and
u′_i's set, and the copy that adds k where bit j is clear realises
(u_i + k) − u′_i = k′.
"""

from __future__ import annotations

import logging

import numpy as np

from django_zpcover.arithmetic import ceil_log2
from django_zpcover.exceptions import DomainError
from django_zpcover.families import CoverSet, CoveringFamily, verify_or_raise
from django_zpcover.utils import check_budget
from django_zpcover.validators import validate_prime

logger = logging.getLogger(__name__)


def lifted_length(ell1: int, k: int, minimal: bool = False) -> int:
    bits = ceil_log2(k)
    return ell1 * (bits + (1 if minimal else bits))


def bit_lift(family: CoveringFamily, p: int, minimal: bool = False) -> CoveringFamily:
    """
    Lift a Z_k-covering family (k = ``family.p``) into Z_p.

    Args:
        family: Z_k-covering family over the small prime k
        p: Target odd prime with 2k − 1 ≤ p − 1
        minimal: Emit a single unchanged copy instead of ceil(log2 k)

    Returns:
        CoveringFamily: Same size, length 2·ℓ₁·ceil(log2 k) (or
        ℓ₁·(ceil(log2 k) + 1) when minimal), claimed cover [0, k−1]

    Raises:
        DomainError: If 2k − 1 > p − 1
        CoverageError: If ``family`` is not Z_k-covering

    Examples:
        ```python
        bit_lift(base_p_family(3, 3), 7).ell   # 12
        ```
    """
    p = validate_prime(p, odd=True)
    k = family.p
    if 2 * k - 1 > p - 1:
        raise DomainError(f"k={k} is too large for p={p}: lifted entries reach {2 * k - 1}")
    verify_or_raise(family, CoverSet.full(k), stage="bit_lift source")

    bits = ceil_log2(k)
    copies = bits + (1 if minimal else bits)
    check_budget(family.size * family.ell * copies, "bit lift")

    source = family.vectors
    modified = [np.where((source >> j) & 1, source, source + k) for j in range(bits)]
    unchanged = [source] * (copies - bits)
    logger.debug(f"Lifting {family} into Z_{p} with {bits} bit copies")
    return CoveringFamily(p, np.hstack(modified + unchanged), claimed_cover=CoverSet.interval(p, k))
