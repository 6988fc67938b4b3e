"""
Star partitions of the balanced words.

A permutation π of the coordinates acts on words by π(b)_i = b_{π(i)}. For a
source family A ⊆ B_ℓ, the star of π is the set of words b with π(b) ∈ A.
Since π only moves coordinates, a star inherits every covering property of A.

The partition is built greedily from a stream of permutations: each
permutation takes the still unassigned words of its star as a new part.
Exhaustive mode streams all ℓ! permutations in lexicographic order; sampled
mode draws random ones.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from django_zpcover.conf import settings
from django_zpcover.exceptions import BudgetExceeded, DomainError
from django_zpcover.families import CoverSet, CoveringFamily, verify_or_raise
from django_zpcover.utils import make_rng, ordered_map

from .words import BalancedFamily

logger = logging.getLogger(__name__)

MODES = ("exhaustive", "sampled", "auto")


@dataclass
class StarPartition:
    """
    A partition of B_ℓ into S-covering parts with permutation centers.

    Attributes:
        base: The balanced family being partitioned
        source: The family A every part maps into
        cover: S, the set each part covers
        parts: Sorted index tuples into ``base``, in creation order
        centers: The permutation of each part
        draws: Permutations examined
        targeted_draws: Sampled-mode permutations built for a specific word
        d_left: Star size |A|
        d_right: Permutations per balanced word, ℓ!·|A|/|B|
        existence_bound: |A|/(10·ℓ·log2 p), reported only
        hall_bound: d_left/(4·log2(2|B|)), reported only
    """

    base: BalancedFamily
    source: CoveringFamily
    cover: CoverSet
    mode: str
    parts: list = field(default_factory=list)
    centers: list = field(default_factory=list)
    draws: int = 0
    targeted_draws: int = 0

    @property
    def K(self) -> int:
        return len(self.parts)

    @property
    def min_part_size(self) -> int:
        return min(len(part) for part in self.parts) if self.parts else 0

    @property
    def d_left(self) -> int:
        return self.source.size

    @property
    def d_right(self) -> float:
        return math.factorial(self.base.ell) * self.source.size / self.base.size

    @property
    def existence_bound(self) -> float:
        return self.source.size / (10 * self.base.ell * math.log2(self.base.p))

    @property
    def hall_bound(self) -> float:
        return self.d_left / (4 * math.log2(2 * self.base.size))

    def part_of(self) -> np.ndarray:
        """Part index of every word of ``base``."""
        labels = np.full(self.base.size, -1, dtype=np.int64)
        for index, part in enumerate(self.parts):
            labels[list(part)] = index
        return labels

    def part_family(self, index: int) -> CoveringFamily:
        return CoveringFamily(self.base.p, self.base.vectors[list(self.parts[index])], claimed_cover=self.cover)

    def to_dict(self) -> dict:
        return {
            "p": self.base.p,
            "ell": self.base.ell,
            "mode": self.mode,
            "K": self.K,
            "min_part_size": self.min_part_size,
            "part_sizes": [len(part) for part in self.parts],
            "centers": [list(center) for center in self.centers],
            "draws": self.draws,
            "targeted_draws": self.targeted_draws,
            "d_left": self.d_left,
            "d_right": self.d_right,
            "existence_bound": self.existence_bound,
            "hall_bound": self.hall_bound,
        }


def preimages(source: np.ndarray, permutation) -> np.ndarray:
    """Rows b with π(b) = a for every row a of ``source``: b[π[i]] = a[i]."""
    result = np.empty_like(source)
    result[:, list(permutation)] = source
    return result


def targeted_permutation(word, target) -> tuple:
    """A permutation π with π(word) = target; both words share one multiset."""
    positions: dict[int, list] = {}
    for position, value in enumerate(word):
        positions.setdefault(int(value), []).append(position)
    try:
        return tuple(positions[int(value)].pop(0) for value in target)
    except (KeyError, IndexError):
        raise DomainError("words with different letter counts are not related by a permutation") from None


def _sampled_stream(ell: int, rng: np.random.Generator) -> Iterator[tuple]:
    while True:
        yield tuple(int(x) for x in rng.permutation(ell))


def resolve_mode(mode: str, ell: int) -> str:
    if mode not in MODES:
        raise DomainError(f"mode must be one of {MODES}, got {mode!r}")
    if mode == "auto":
        return "exhaustive" if ell <= settings.PERMUTATION_LIMIT else "sampled"
    return mode


def star_partition(
    base: BalancedFamily,
    source: CoveringFamily,
    cover: CoverSet,
    mode: str = "exhaustive",
    seed: Optional[int] = None,
) -> StarPartition:
    """
    Partition ``base`` into stars of ``source``.

    Args:
        base: B_ℓ
        source: A ⊆ B_ℓ, S-covering
        cover: S
        mode: ``exhaustive`` (ℓ ≤ PERMUTATION_LIMIT), ``sampled`` or ``auto``
        seed: Seed for sampled mode

    Raises:
        DomainError: If A is not a subset of B_ℓ
        CoverageError: If A is not S-covering
        BudgetExceeded: Exhaustive mode beyond PERMUTATION_LIMIT, or sampled
            mode beyond SAMPLED_DRAW_LIMIT draws

    Examples:
        ```python
        words = enumerate_balanced(3, 4)
        partition = star_partition(words, base_family_A0(3, 4), CoverSet.from_elements(3, [1]))
        sum(len(part) for part in partition.parts)   # 6
        ```
    """
    if source.p != base.p or source.ell != base.ell:
        raise DomainError(f"{source} does not consist of balanced words of length {base.ell} over Z_{base.p}")
    base.index_of(source.vectors)
    verify_or_raise(source, cover, stage="star partition source")

    mode = resolve_mode(mode, base.ell)
    if mode == "exhaustive" and base.ell > settings.PERMUTATION_LIMIT:
        raise BudgetExceeded(
            f"exhaustive star partition visits {base.ell}! permutations; "
            f"ℓ={base.ell} exceeds PERMUTATION_LIMIT={settings.PERMUTATION_LIMIT}"
        )

    rng = make_rng(seed)
    stream = itertools.permutations(range(base.ell)) if mode == "exhaustive" else _sampled_stream(base.ell, rng)
    partition = StarPartition(base=base, source=source, cover=cover, mode=mode)
    assigned = np.zeros(base.size, dtype=bool)

    for permutation in stream:
        if assigned.all():
            break
        partition.draws += 1
        if mode == "sampled" and partition.draws > settings.SAMPLED_DRAW_LIMIT:
            raise BudgetExceeded(f"sampled star partition exceeded {settings.SAMPLED_DRAW_LIMIT} draws")
        star = np.unique(base.index_of(preimages(source.vectors, permutation)))
        fresh = star[~assigned[star]]
        if not fresh.size and mode == "sampled":
            # aim at the first unassigned word
            word = base.vectors[int(np.flatnonzero(~assigned)[0])]
            target = source.vectors[int(rng.integers(source.size))]
            permutation = targeted_permutation(word, target)
            partition.targeted_draws += 1
            star = np.unique(base.index_of(preimages(source.vectors, permutation)))
            fresh = star[~assigned[star]]
        if fresh.size:
            assigned[fresh] = True
            partition.parts.append(tuple(int(x) for x in fresh))
            partition.centers.append(tuple(permutation))

    if partition.targeted_draws:
        logger.warning(f"Sampled star partition needed {partition.targeted_draws} targeted draws")

    ordered_map(
        lambda index: verify_or_raise(partition.part_family(index), cover, stage=f"part {index}"),
        range(partition.K),
    )
    logger.debug(f"Star partition of B_{base.ell} over Z_{base.p}: K={partition.K}, min part {partition.min_part_size}")
    return partition
