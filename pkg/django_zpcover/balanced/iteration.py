"""
The step boost and the S_z iteration over balanced words.

A walk is a sequence (w₀, w₁, …, w_m) of balanced words where w_i lies in the
same part as a⁻¹·w_{i−1}. For two walks that agree up to w_{i−1} and differ at
w_i, both w_i lie in one S-covering part (realising S), and the following
words lie in parts that differ by a factor a (realising aS). Keeping the
walks that share their last word v* and dropping w₀ and v* gives an
(S ∪ aS)-covering family of length (m−1)·ℓ.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from django_zpcover.arithmetic import ceil_log2, mod_inverse, primitive_root
from django_zpcover.exceptions import BudgetExceeded, CoverageError, DomainError
from django_zpcover.families import CoverSet, CoveringFamily, verify_or_raise
from django_zpcover.signals import iteration_step_completed
from django_zpcover.utils import check_budget, resolve_seed
from django_zpcover.validators import validate_positive, validate_prime

from .partition import StarPartition, resolve_mode, star_partition
from .words import base_family_A0, enumerate_balanced

logger = logging.getLogger(__name__)

_COUNT_LIMIT = 1 << 62


def _walk_counts(partition: StarPartition, m: int, a: int) -> tuple[np.ndarray, np.ndarray, list]:
    """
    Part labels, successor-part keys and per-level walk counts.

    ``counts[t][w]`` is the number of walks (w₁, …, w_{t+1}) from w₀ ending at w.
    """
    base = partition.base
    part_of = partition.part_of()
    key = part_of[base.scaled_indices(mod_inverse(a, base.p))]
    parts = partition.K

    counts = [(part_of == key[0]).astype(np.int64)]
    for _ in range(m - 1):
        if float(counts[-1].sum(dtype=np.float64)) >= _COUNT_LIMIT:
            raise BudgetExceeded("walk counts overflow 64-bit integers")
        mass = np.zeros(parts, dtype=np.int64)
        np.add.at(mass, key, counts[-1])
        counts.append(mass[part_of])
    return part_of, key, counts


def step_boost(partition: StarPartition, m: int, a: int) -> CoveringFamily:
    """
    Boost an S-covering star partition into an (S ∪ aS)-covering family.

    Walk counts per final word come from a dynamic program over parts; only the
    walks ending at the most popular final word v* (smallest index on ties) are
    materialised, by backward expansion.

    Args:
        partition: Star partition of B_ℓ into S-covering parts
        m: Walk length, at least 2
        a: Nonzero multiplier

    Returns:
        CoveringFamily: Length (m−1)·ℓ, rows in lexicographic order, claimed
        and verified cover S ∪ aS

    Raises:
        DomainError: If m < 2, a ≡ 0 or the partition is empty
        BudgetExceeded: If the selected walks do not fit the memory budget
        CoverageError: If the output fails verification

    Examples:
        ```python
        words = enumerate_balanced(3, 2)
        partition = star_partition(words, base_family_A0(3, 2), CoverSet.from_elements(3, [1]))
        step_boost(partition, 2, 2).rows()   # [(1, 2), (2, 1)]
        ```
    """
    m = validate_positive(m, "m", minimum=2)
    base = partition.base
    a = int(a) % base.p
    if a == 0:
        raise DomainError("the step multiplier must be nonzero")
    if not partition.K:
        raise DomainError("the star partition has no parts")

    part_of, key, counts = _walk_counts(partition, m, a)
    final = counts[-1]
    target = int(np.argmax(final))
    size = int(final[target])
    check_budget(size * (m - 1) * base.ell, "step boost")

    # backward: w_{t} must have key[w_t] equal to the part of w_{t+1}
    walks = [[w] for w in np.flatnonzero((counts[-2] > 0) & (key == part_of[target]))]
    for level in range(m - 3, -1, -1):
        extended = []
        for walk in walks:
            predecessors = np.flatnonzero((counts[level] > 0) & (key == part_of[walk[0]]))
            extended.extend([int(w)] + walk for w in predecessors)
        walks = extended
    walks.sort()

    rows = base.vectors[np.array(walks, dtype=np.int64)].reshape(len(walks), -1)
    cover = partition.cover | partition.cover.scaled(a)
    family = CoveringFamily(base.p, rows, claimed_cover=cover)
    verify_or_raise(family, stage="step boost")
    logger.debug(f"Step boost with a={a}, m={m}: {size} walks end at word {target}")
    return family


@dataclass(frozen=True)
class IterationStep:
    z: int
    a: int
    K: int
    min_part_size: int
    existence_bound: float
    size: int
    length: int
    verified: bool
    cover: str


@dataclass
class IterationTrace:
    p: int
    alpha: int
    ell0: int
    m: int
    steps: list = field(default_factory=list)
    padded: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def target_cover(p: int, alpha: int, z: int) -> CoverSet:
    """S_z = {α⁰, α¹, …, α^{2^z−1}}."""
    return CoverSet.from_elements(p, (pow(alpha, e, p) for e in range(2**z)))


def aa_iterate(
    p: int,
    ell0: int,
    m: int = 2,
    z_max: int = 1,
    mode: str = "exhaustive",
    seed: Optional[int] = None,
) -> tuple[CoveringFamily, IterationTrace]:
    """
    Grow {1}-covering A₀ into an S_{z_max}-covering family.

    Step z partitions the balanced words of the current length into stars of
    A_{z−1} and applies the step boost with a = α^{2^{z−1}}, α the smallest
    primitive root. Each step is verified against S_z.

    Args:
        p: Odd prime
        ell0: Base length, a multiple of p − 1
        m: Walk length, at least 2
        z_max: Number of steps, at most ceil(log2(p−1))
        mode: Star partition mode
        seed: Seed for sampled partitions

    Returns:
        tuple: (A_{z_max}, IterationTrace); the family is not zero padded

    Raises:
        CoverageError: ``stage`` is the failing step index

    Examples:
        ```python
        family, trace = aa_iterate(3, 2, m=2, z_max=1)
        family.claimed_cover   # CoverSet(p=3, {1, 2})
        ```
    """
    p = validate_prime(p, odd=True)
    m = validate_positive(m, "m", minimum=2)
    z_max = validate_positive(z_max, "z_max", minimum=0)
    if z_max > ceil_log2(p - 1):
        raise DomainError(f"z_max={z_max} exceeds ceil(log2(p−1))={ceil_log2(p - 1)}")
    seed = resolve_seed(seed)

    alpha = primitive_root(p)
    family = base_family_A0(p, ell0)
    verify_or_raise(family, stage=0)
    trace = IterationTrace(p=p, alpha=alpha, ell0=ell0, m=m)

    for z in range(1, z_max + 1):
        words = enumerate_balanced(p, family.ell)
        a = pow(alpha, 2 ** (z - 1), p)
        try:
            partition = star_partition(words, family, family.claimed_cover, mode=resolve_mode(mode, family.ell), seed=seed + z)
            family = step_boost(partition, m, a)
        except CoverageError as exc:
            raise CoverageError(f"step {z}: {exc}", report=exc.report, stage=z) from exc
        expected = target_cover(p, alpha, z)
        if family.claimed_cover != expected:
            raise DomainError(f"step {z} produced cover {family.claimed_cover.to_spec()}, expected {expected.to_spec()}")

        step = IterationStep(
            z=z,
            a=a,
            K=partition.K,
            min_part_size=partition.min_part_size,
            existence_bound=partition.existence_bound,
            size=family.size,
            length=family.ell,
            verified=True,
            cover=expected.to_spec(),
        )
        trace.steps.append(step)
        iteration_step_completed.send(sender="aa_iterate", step=step)
        logger.info(f"Iteration step {z} over Z_{p}: size {family.size}, length {family.ell}, cover {step.cover}")

    return family, trace
