"""
The three-stage upper-bound pipeline.

    F₁  Z_k-covering family over a small prime k (base-p, or the balanced-word iteration)
    F₂  bit_lift(F₁, p): [0, k−1]-covering over Z_p
    F₃  scale_cover_boost(F₂, S): Z_p-covering, S a scaling set for (p, k)

Each stage's output is verified against its claimed cover before the next
stage runs, and ``stage_verified`` is sent for it.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Optional

from django_zpcover.arithmetic import ceil_log2, is_prime, largest_prime_at_most, select_parameters
from django_zpcover.balanced import aa_iterate
from django_zpcover.bounds import aam_lower_bound
from django_zpcover.conf import settings
from django_zpcover.exceptions import DomainError, ZpCoverError
from django_zpcover.families import CoverSet, CoveringFamily, append_zeros, verify_or_raise
from django_zpcover.signals import stage_verified
from django_zpcover.utils import resolve_seed
from django_zpcover.validators import validate_positive, validate_prime

from .base_p import base_p_family
from .boosting import concat_boost
from .lifting import bit_lift
from .scaling import find_scaling_set, scale_cover_boost, scaling_set_bound

logger = logging.getLogger(__name__)

BASES = ("base_p", "alon_alweiss")


@dataclass
class PipelineStats:
    """
    Record of one pipeline run.

    Attributes:
        k: Inner prime actually used
        ell1, ell2, ell3: Lengths of F₁, F₂, F₃
        ell_star: p·log2 p·log2 N/√k
        stage_reports: One ``CoverageReport.to_dict()`` per stage, with its label
        scaling_set: Multipliers used by the last stage
        greedy: Whether the scaling set came from the greedy fallback
        k_capped: k was reduced to the largest prime ≤ (p−1)/2
        desk_substitution: F₁ is the base-p family rather than the iteration's
        selection: Parameter selection for 2^log2N (None when N < 16)
        ell3_check: ℓ₃ ≤ ceil(p·ln p/(k−1))·ℓ₂
        lower_bound: aam_lower_bound(p, log2 N) (None when N = 1)
        walk_length: m of the balanced-word base (None for base_p)
    """

    p: int
    N: int
    k: int
    base: str
    seed: int
    ell1: int = 0
    ell2: int = 0
    ell3: int = 0
    ell_star: float = 0.0
    stage_reports: list = field(default_factory=list)
    scaling_set: list = field(default_factory=list)
    greedy: bool = False
    k_capped: bool = False
    desk_substitution: bool = False
    selection: Optional[dict] = None
    ell3_check: bool = False
    lower_bound: Optional[float] = None
    walk_length: Optional[int] = None

    def to_dict(self) -> dict:
        return asdict(self)


def _record(stats: PipelineStats, stage: str, family: CoveringFamily, cover: CoverSet) -> None:
    report = verify_or_raise(family, cover, stage=stage)
    stats.stage_reports.append({"stage": stage, "size": family.size, "length": family.ell, **report.to_dict()})
    stage_verified.send(sender="pipeline", stage=stage, family=family, report=report)
    logger.info(f"Pipeline stage {stage} verified: {family}")


def _choose_k(p: int, N: int, k: Optional[int], selection) -> tuple[int, bool]:
    if k is not None:
        if not is_prime(k):
            raise DomainError(f"k={k} is not prime")
        return int(k), False
    if p < 5:
        raise DomainError(f"the pipeline needs p ≥ 5 so that a prime k ≥ 2 has 2k − 1 ≤ p − 1, got p={p}")
    cap = largest_prime_at_most((p - 1) // 2)
    if selection is None:
        return cap, False
    if selection.k > cap:
        logger.warning(f"Selected k={selection.k} does not fit p={p}; capping k at {cap}")
        return cap, True
    return selection.k, False


def _alon_alweiss_base(k: int, N: int, seed: int) -> tuple[CoveringFamily, int]:
    """
    Z_k-covering family of size ≥ N from the balanced-word iteration over Z_k,
    padded with one zero coordinate and concatenated up to size.

    The walk length starts at 2 and grows up to ``AA_MAX_WALK`` while the
    iteration collapses to a single vector.

    Returns:
        tuple: (family, walk length used)
    """
    if k == 2:
        raise DomainError("the balanced-word base needs an odd inner prime, got k=2")
    for m in range(2, settings.AA_MAX_WALK + 1):
        family, _ = aa_iterate(k, k - 1, m=m, z_max=ceil_log2(k - 1), mode="auto", seed=seed)
        if family.size > 1 or N == 1:
            break
        logger.info(f"Balanced-word iteration over Z_{k} collapsed with m={m}")
    else:
        raise DomainError(
            f"the balanced-word iteration over Z_{k} collapsed to a single vector for every m ≤ {settings.AA_MAX_WALK}"
        )
    family = append_zeros(family, 1)
    z = 1
    while family.size**z < N:
        z += 1
    return concat_boost(family, z), m


def build_upperbound_family(
    p: int,
    N: int,
    base: str = "base_p",
    seed: Optional[int] = None,
    k: Optional[int] = None,
    minimal: bool = False,
) -> tuple[CoveringFamily, PipelineStats]:
    """
    Build a Z_p-covering family of at least N vectors through F₁ → F₂ → F₃.

    When ``k`` is not given it comes from :func:`select_parameters` for
    N ≥ 16, capped at the largest prime ≤ (p−1)/2 so the bit lift fits, and
    is that cap for smaller N.

    Args:
        p: Odd prime ≥ 5
        N: Target size
        base: ``base_p`` or ``alon_alweiss``
        seed: Seed for the scaling set (and the iteration's sampled partitions)
        k: Override for the inner prime
        minimal: Use the short bit lift

    Returns:
        tuple: (F₃, PipelineStats)

    Raises:
        DomainError: On unusable parameters
        CoverageError: If a stage fails verification; ``stage`` is F1, F2 or F3

    Examples:
        ```python
        family, stats = build_upperbound_family(7, 9)
        stats.k, stats.ell3 == len(stats.scaling_set) * stats.ell2   # (3, True)
        ```
    """
    p = validate_prime(p, odd=True)
    N = validate_positive(N, "N")
    if base not in BASES:
        raise DomainError(f"base must be one of {BASES}, got {base!r}")
    seed = resolve_seed(seed)
    log2N = math.log2(N)

    selection = select_parameters(p, log2N) if log2N >= 4 else None
    k, capped = _choose_k(p, N, k, selection)
    stats = PipelineStats(
        p=p,
        N=N,
        k=k,
        base=base,
        seed=seed,
        k_capped=capped,
        desk_substitution=base == "base_p",
        selection=selection.to_dict() if selection is not None else None,
    )

    if base == "base_p":
        first = base_p_family(k, N)
    else:
        first, stats.walk_length = _alon_alweiss_base(k, N, seed)
    _record(stats, "F1", first, CoverSet.full(k))

    second = bit_lift(first, p, minimal=minimal)
    _record(stats, "F2", second, CoverSet.interval(p, k))

    scaling = find_scaling_set(p, k, seed=seed)
    third = scale_cover_boost(second, scaling)
    _record(stats, "F3", third, CoverSet.full(p))

    stats.ell1, stats.ell2, stats.ell3 = first.ell, second.ell, third.ell
    stats.ell_star = p * math.log2(p) * log2N / math.sqrt(k)
    stats.scaling_set = list(scaling.elements)
    stats.greedy = scaling.greedy
    stats.ell3_check = stats.ell3 <= scaling_set_bound(p, k) * stats.ell2
    if stats.ell3 != len(scaling) * stats.ell2:
        raise ZpCoverError(f"ℓ₃={stats.ell3} differs from |S|·ℓ₂={len(scaling) * stats.ell2}")

    if N >= 2:
        stats.lower_bound = aam_lower_bound(p, log2N)
        if stats.lower_bound > stats.ell3:
            raise ZpCoverError(f"length {stats.ell3} is below the lower bound {stats.lower_bound:.3f}")

    logger.info(f"Pipeline for p={p}, N={N} finished with k={k}, ℓ₃={stats.ell3}")
    return third, stats
