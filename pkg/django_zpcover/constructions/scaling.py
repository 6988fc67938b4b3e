"""
Scaling sets: S ⊆ Z_p with [0, k−1]·S = Z_p, and the boost that uses them to
turn a [0, k−1]-covering family into a Z_p-covering one.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from django_zpcover.conf import settings
from django_zpcover.exceptions import DomainError
from django_zpcover.families import CoverSet, CoveringFamily, verify_or_raise
from django_zpcover.utils import check_budget, make_rng, resolve_seed
from django_zpcover.validators import validate_prime

logger = logging.getLogger(__name__)


def scaling_set_bound(p: int, k: int) -> int:
    """ceil(p·ln p/(k−1)), the number of random draws."""
    return math.ceil(p * math.log(p) / (k - 1))


def products(p: int, k: int, elements: Iterable[int]) -> np.ndarray:
    """Sorted distinct residues i·j mod p for i ∈ [0, k−1], j ∈ elements."""
    elements = np.fromiter((int(x) for x in elements), dtype=np.int64)
    return np.unique((np.arange(k, dtype=np.int64)[:, None] * elements[None, :]) % p)


def is_scaling_set(p: int, k: int, elements: Iterable[int]) -> bool:
    """Brute-force check of [0, k−1]·elements = Z_p."""
    return products(p, k, elements).size == p


@dataclass(frozen=True)
class ScalingSet:
    """
    Multipliers s₁ … s_|S| with [0, k−1]·S = Z_p.

    Attributes:
        p: Modulus
        k: Width of the interval the source family covers
        elements: The multipliers, increasing
        greedy: True when produced by the greedy fallback (size not bounded
            by ceil(p·ln p/(k−1)))
        attempts: Random draws tried before returning
    """

    p: int
    k: int
    elements: tuple
    greedy: bool = False
    attempts: int = 0

    def __post_init__(self):
        if not is_scaling_set(self.p, self.k, self.elements):
            raise DomainError(f"{list(self.elements)} does not scale [0, {self.k - 1}] onto Z_{self.p}")

    def __len__(self) -> int:
        return len(self.elements)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "elements": list(self.elements),
            "greedy": self.greedy,
            "attempts": self.attempts,
            "bound": scaling_set_bound(self.p, self.k),
        }


def _greedy_scaling_set(p: int, k: int) -> list[int]:
    covered = np.zeros(p, dtype=bool)
    covered[0] = True
    multiples = (np.arange(k, dtype=np.int64)[None, :] * np.arange(p, dtype=np.int64)[:, None]) % p
    chosen = []
    while not covered.all():
        gains = np.array([np.count_nonzero(~covered[np.unique(row)]) for row in multiples])
        j = int(np.argmax(gains))
        chosen.append(j)
        covered[multiples[j]] = True
    return sorted(chosen)


def find_scaling_set(p: int, k: int, seed: Optional[int] = None) -> ScalingSet:
    """
    Random scaling set with greedy fallback.

    Draws ceil(p·ln p/(k−1)) elements of Z_p uniformly with replacement,
    deduplicates them and drops 0, and keeps the draw if it passes the
    brute-force product check. After ``SCALING_SET_ATTEMPTS`` failed draws a
    greedy set cover is used (largest number of new residues, smallest j on
    ties), which always succeeds since [0, k−1]·j contains j.

    Args:
        p: Prime modulus
        k: 2 ≤ k ≤ p
        seed: RNG seed; defaults to the current RunConfig's

    Examples:
        ```python
        s = find_scaling_set(7, 4, seed=0)
        len(s) <= 5   # True
        ```
    """
    p = validate_prime(p)
    if not 2 <= k <= p:
        raise DomainError(f"k must satisfy 2 ≤ k ≤ p, got k={k}, p={p}")
    rng = make_rng(seed)
    draws = scaling_set_bound(p, k)
    attempts = settings.SCALING_SET_ATTEMPTS

    for attempt in range(1, attempts + 1):
        sample = sorted(set(int(x) for x in rng.integers(0, p, size=draws)) - {0})
        if is_scaling_set(p, k, sample):
            logger.debug(f"Scaling set for p={p}, k={k} found on attempt {attempt}")
            return ScalingSet(p=p, k=k, elements=tuple(sample), attempts=attempt)

    logger.warning(f"No random scaling set for p={p}, k={k} in {attempts} attempts (seed {resolve_seed(seed)}); using greedy")
    return ScalingSet(p=p, k=k, elements=tuple(_greedy_scaling_set(p, k)), greedy=True, attempts=attempts)


def scale_cover_boost(family: CoveringFamily, scaling: ScalingSet) -> CoveringFamily:
    """
    Replace every v by (s₁·v, …, s_|S|·v).

    For g ∈ Z_p pick i ∈ [0, k−1] and s_j with i·s_j ≡ g; the coordinate of
    copy j where the pair realises i realises g. Length |S|·ℓ, same size.

    Raises:
        DomainError: If the moduli differ
        CoverageError: If ``family`` is not [0, k−1]-covering
    """
    if scaling.p != family.p:
        raise DomainError(f"scaling set is over Z_{scaling.p}, family is over Z_{family.p}")
    verify_or_raise(family, CoverSet.interval(family.p, scaling.k), stage="scaling source")
    check_budget(family.size * family.ell * len(scaling), "scaling-set boost")
    copies = [(family.vectors * s) % family.p for s in scaling.elements]
    return CoveringFamily(family.p, np.hstack(copies), claimed_cover=CoverSet.full(family.p))
