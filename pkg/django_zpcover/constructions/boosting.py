"""
Length-trading boosts: concatenation (size for length) and scaling
(cover for length), plus the doubling construction that alternates them.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from django_zpcover.families import (
    CoverSet,
    CoveringFamily,
    concat_families,
    covered_set,
    verify_or_raise,
)
from django_zpcover.exceptions import DomainError
from django_zpcover.utils import check_budget, make_rng, resolve_seed
from django_zpcover.validators import validate_positive, validate_prime

logger = logging.getLogger(__name__)


def concat_boost(family: CoveringFamily, z: int) -> CoveringFamily:
    """
    All z-fold concatenations of vectors of ``family``: size N^z, length z·ℓ.

    Preserves S-covering for every S the family covers.

    Raises:
        DomainError: If z < 1
        BudgetExceeded: If N^z·z·ℓ entries exceed the memory budget
    """
    z = validate_positive(z, "z")
    if z == 1:
        return family
    check_budget(family.size**z * z * family.ell, "concatenation boost")
    result = family
    for _ in range(z - 1):
        result = concat_families(result, family)
    return result


def scale_boost(family: CoveringFamily, s: int) -> CoveringFamily:
    """
    Replace every v by (v, s·v): same size, length 2ℓ.

    An S-covering family becomes (S ∪ sS)-covering.

    Raises:
        DomainError: If s ≡ 0 (mod p)
    """
    s = int(s) % family.p
    if s == 0:
        raise DomainError("the scaling multiplier must be nonzero")
    check_budget(family.size * 2 * family.ell, "scaling boost")
    scaled = (family.vectors * s) % family.p
    claim = family.claimed_cover
    if claim is not None:
        claim = claim | claim.scaled(s)
    return CoveringFamily(family.p, np.hstack([family.vectors, scaled]), claimed_cover=claim)


# Doubling construction
# =====================


@dataclass(frozen=True)
class BoostStep:
    op: str
    arg: int
    size: int
    length: int
    cover: str


@dataclass
class DoublingTrace:
    """Steps taken by :func:`double_boost_family`, in order."""

    p: int
    N: int
    seed: int
    steps: list = field(default_factory=list)

    def record(self, op: str, arg: int, family: CoveringFamily) -> None:
        self.steps.append(BoostStep(op, arg, family.size, family.ell, family.claimed_cover.to_spec()))

    def to_dict(self) -> dict:
        return asdict(self)


def _best_multipliers(cover: CoverSet) -> list[int]:
    gains = {s: len(cover | cover.scaled(s)) for s in range(1, cover.p)}
    best = max(gains.values())
    return [s for s, gain in gains.items() if gain == best]


def double_boost_family(p: int, size: int, seed: Optional[int] = None) -> tuple[CoveringFamily, DoublingTrace]:
    """
    Build a Z_p-covering family of at least ``size`` vectors with the two boosts only.

    Starts from {(0,0,0), (0,1,p−1)}, which covers {0, 1, p−1} in both
    orientations. Scaling boosts with a seeded choice among the multipliers
    that grow the covered set the most run until it is Z_p; then squaring
    concatenations run until the size reaches ``size``. Every step is verified.

    Returns:
        tuple: (family, trace)
    """
    p = validate_prime(p, odd=True)
    size = validate_positive(size, "N")
    seed = resolve_seed(seed)
    rng = make_rng(seed)
    trace = DoublingTrace(p=p, N=size, seed=seed)

    start = CoveringFamily(p, [(0, 0, 0), (0, 1, p - 1)])
    family = start.with_claim(covered_set(start))
    verify_or_raise(family, stage="start")
    trace.record("start", 0, family)

    while not family.claimed_cover.is_full():
        candidates = _best_multipliers(family.claimed_cover)
        s = int(candidates[rng.integers(len(candidates))])
        family = scale_boost(family, s)
        verify_or_raise(family, stage=f"scale {s}")
        trace.record("scale", s, family)

    while family.size < size:
        family = concat_boost(family, 2)
        verify_or_raise(family, stage="concat 2")
        trace.record("concat", 2, family)

    logger.info(f"Doubling construction reached {family}")
    return family, trace
