"""
Exhaustive S-covering verification.

For an ordered pair (v, w) the cover set is {v_i − w_i mod p}. A family is
S-covering when every ordered pair of distinct vectors has S inside its
cover set.

The check works on blocks of rows: for rows ``i`` of a block it builds the
difference tensor ``(v_i − w) mod p`` against all N vectors and scatters it
into a boolean presence tensor of shape (rows, N, p), one p-bit row per
ordered pair. When |S|·ℓ < p the differences are compared against each
element of S instead, so memory does not grow with p. Blocks are sized from
``VERIFY_CHUNK`` and the memory budget and may run on a thread
pool; the reported failure is always the row-order-first one.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import numpy as np

from django_zpcover.conf import settings
from django_zpcover.exceptions import CoverageError, DomainError
from django_zpcover.run_context import RunContext
from django_zpcover.signals import family_verified
from django_zpcover.utils import check_budget, ordered_map

from .base import CoverSet, CoveringFamily

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverageReport:
    """
    Outcome of one covering check.

    Attributes:
        is_covering: True iff no ordered pair misses an element of the cover
        checked_pairs: Pairs examined in row-major order, up to and including
            the first failure
        first_failure: ``(v_index, w_index, missing_element)`` of the first
            failing pair, or ``None``
        elapsed: Wall time in seconds
        cover: Specification of the checked set, e.g. ``Zp`` or ``1,2``
        ordered: Whether both orientations of every pair were checked
    """

    is_covering: bool
    checked_pairs: int
    first_failure: Optional[tuple] = None
    elapsed: float = 0.0
    cover: str = ""
    ordered: bool = True

    def __post_init__(self):
        if self.is_covering != (self.first_failure is None):
            raise ValueError("is_covering must be true exactly when there is no failure")

    def to_dict(self, include_timing: bool = False) -> dict:
        data = {
            "is_covering": self.is_covering,
            "checked_pairs": self.checked_pairs,
            "first_failure": list(self.first_failure) if self.first_failure else None,
            "cover": self.cover,
            "ordered": self.ordered,
        }
        if include_timing:
            data["elapsed"] = self.elapsed
        return data

    def describe(self) -> str:
        if self.is_covering:
            return f"covering ({self.cover}): {self.checked_pairs} ordered pairs checked in {self.elapsed:.3f}s"
        v, w, missing = self.first_failure
        return (
            f"NOT covering ({self.cover}): pair ({v}, {w}) misses {missing}; "
            f"{self.checked_pairs} pairs checked in {self.elapsed:.3f}s"
        )


@dataclass(frozen=True)
class DeficitEntry:
    """One failing ordered pair and the part of S it misses."""

    v_index: int
    w_index: int
    missing: CoverSet = field(compare=True)


def pair_cover_set(v: Sequence[int], w: Sequence[int], p: int) -> CoverSet:
    """
    Cover set of the ordered pair (v, w): {v_i − w_i mod p : i ∈ [ℓ]}.

    Raises:
        DomainError: If the vectors differ in length

    Examples:
        ```python
        pair_cover_set((0, 0), (0, 1), 3)  # CoverSet(p=3, {0, 2})
        pair_cover_set((1, 2), (2, 1), 3)  # CoverSet(p=3, {1, 2})
        ```
    """
    v = np.asarray(v, dtype=np.int64)
    w = np.asarray(w, dtype=np.int64)
    if v.shape != w.shape:
        raise DomainError(f"vectors of lengths {v.size} and {w.size} cannot be compared")
    return CoverSet.from_elements(p, np.unique((v - w) % p))


# Block machinery
# ===============


def _direct(family: CoveringFamily, targets: Optional[np.ndarray]) -> bool:
    """Compare differences against each target instead of scattering into p slots."""
    return targets is not None and targets.size * family.ell < family.p


def _row_bytes(family: CoveringFamily, targets: Optional[np.ndarray]) -> int:
    """Bytes one row of a block allocates: int64 differences plus the boolean tensors."""
    width = targets.size if targets is not None else 0
    flags = family.ell + width if _direct(family, targets) else family.p + width
    return family.size * (8 * family.ell + flags)


def _row_blocks(family: CoveringFamily, targets: Optional[np.ndarray] = None) -> list[range]:
    """
    Row ranges sized from ``VERIFY_CHUNK`` and the memory budget shared by
    the worker threads.

    Raises:
        BudgetExceeded: If a single row does not fit the budget
    """
    per_row = _row_bytes(family, targets)
    check_budget(per_row, "verifier block row", itemsize=1)
    config = RunContext.get_config()
    slots = targets.size if _direct(family, targets) else family.p
    by_chunk = settings.VERIFY_CHUNK // max(1, family.size * max(family.ell, slots))
    by_budget = config.memory_budget // (per_row * max(1, config.threads))
    rows_per_block = max(1, min(by_chunk, by_budget))
    return [range(start, min(start + rows_per_block, family.size)) for start in range(0, family.size, rows_per_block)]


def _differences(family: CoveringFamily, rows: range) -> np.ndarray:
    array = family.vectors
    diffs = array[rows.start : rows.stop, None, :] - array[None, :, :]
    np.remainder(diffs, family.p, out=diffs)
    return diffs


def _presence(family: CoveringFamily, rows: range) -> np.ndarray:
    """(len(rows), N, p) boolean tensor: entry [b, j, x] is set iff x ∈ cover(v_{rows[b]}, v_j)."""
    diffs = _differences(family, rows)
    presence = np.zeros(diffs.shape[:2] + (family.p,), dtype=bool)
    np.put_along_axis(presence, diffs, True, axis=2)
    return presence


def _hits(family: CoveringFamily, rows: range, targets: np.ndarray) -> np.ndarray:
    """(len(rows), N, |targets|) boolean tensor: entry [b, j, t] is set iff targets[t] ∈ cover(v_{rows[b]}, v_j)."""
    if not _direct(family, targets):
        return _presence(family, rows)[:, :, targets]
    diffs = _differences(family, rows)
    hits = np.empty(diffs.shape[:2] + (targets.size,), dtype=bool)
    for t, target in enumerate(targets):
        hits[:, :, t] = (diffs == target).any(axis=2)
    return hits


def _skip_mask(rows: range, size: int, ordered: bool) -> np.ndarray:
    """True for pairs that are not checked: the diagonal, and j ≤ i when unordered."""
    i = np.arange(rows.start, rows.stop)[:, None]
    j = np.arange(size)[None, :]
    return (j == i) if ordered else (j <= i)


def _block_failures(family: CoveringFamily, rows: range, targets: np.ndarray, ordered: bool):
    hits = _hits(family, rows, targets)
    covered = hits.all(axis=2) | _skip_mask(rows, family.size, ordered)
    return hits, covered


def _first_failure(family: CoveringFamily, rows: range, targets: np.ndarray, ordered: bool) -> Optional[tuple]:
    hits, covered = _block_failures(family, rows, targets, ordered)
    failing = np.logical_not(covered, out=covered)
    if not failing.any():
        return None
    b, j = divmod(int(np.argmax(failing)), family.size)
    missing = targets[~hits[b, j]]
    return rows.start + b, j, int(missing[0])


def _pairs_before(v_index: int, w_index: int, size: int, ordered: bool) -> int:
    if ordered:
        return v_index * (size - 1) + (w_index if w_index < v_index else w_index - 1)
    return v_index * (size - 1) - v_index * (v_index - 1) // 2 + (w_index - v_index - 1)


def _check_modulus(family: CoveringFamily, cover: CoverSet) -> None:
    if cover.p != family.p:
        raise DomainError(f"cover set is over Z_{cover.p}, family is over Z_{family.p}")


# Public operations
# =================


def is_covering(family: CoveringFamily, cover: CoverSet, ordered: bool = True) -> CoverageReport:
    """
    Check that every pair of distinct vectors realises every element of ``cover``.

    Args:
        family: The family to check
        cover: The set S each pair must realise as a coordinatewise difference
        ordered: Check both (v, w) and (w, v); ``False`` checks only the
            row-order orientation (v_i, v_j) with i < j

    Returns:
        CoverageReport: On failure ``first_failure`` is the first failing pair
        in row-major order with the smallest missing element, whatever the
        number of worker threads.

    Raises:
        DomainError: If ``cover`` is over a different modulus
        BudgetExceeded: If one row of pairs does not fit the memory budget

    Examples:
        ```python
        is_covering(base_p_family(3, 9), CoverSet.full(3)).is_covering   # True
        report = is_covering(CoveringFamily(3, [(0, 1), (0, 2)]), CoverSet.full(3))
        report.first_failure                                             # (0, 1, 1)
        ```
    """
    _check_modulus(family, cover)
    started = time.perf_counter()
    total = family.size * (family.size - 1)
    total = total if ordered else total // 2
    targets = cover.as_array()
    failure = None

    if family.size > 1 and targets.size:
        blocks = _row_blocks(family, targets)
        threads = RunContext.get_config().threads
        # Waves of one block per worker; stop after the first wave with a failure.
        for start in range(0, len(blocks), threads):
            wave = blocks[start : start + threads]
            results = ordered_map(lambda rows: _first_failure(family, rows, targets, ordered), wave, threads)
            failure = next((result for result in results if result is not None), None)
            logger.debug(f"Verified rows up to {wave[-1].stop} of {family.size}")
            if failure is not None:
                break

    if failure is None:
        checked = total
    else:
        checked = _pairs_before(failure[0], failure[1], family.size, ordered) + 1

    report = CoverageReport(
        is_covering=failure is None,
        checked_pairs=checked,
        first_failure=failure,
        elapsed=time.perf_counter() - started,
        cover=cover.to_spec(),
        ordered=ordered,
    )
    family_verified.send(sender=CoveringFamily, family=family, cover=cover, report=report)
    return report


def cover_deficit(family: CoveringFamily, cover: CoverSet, ordered: bool = True) -> list[DeficitEntry]:
    """
    Every failing pair with the elements of ``cover`` it misses.

    Returns:
        list[DeficitEntry]: Row-major order; empty iff the family is covering

    Examples:
        ```python
        cover_deficit(CoveringFamily(7, [(0,), (1,)]), CoverSet.from_elements(7, [1]))
        # [DeficitEntry(v_index=0, w_index=1, missing=CoverSet(p=7, {1}))]
        ```
    """
    _check_modulus(family, cover)
    targets = cover.as_array()
    entries: list[DeficitEntry] = []
    if family.size < 2 or not targets.size:
        return entries

    def block(rows: range) -> list[DeficitEntry]:
        hits, covered = _block_failures(family, rows, targets, ordered)
        found = []
        for b, j in np.argwhere(~covered):
            missing = targets[~hits[b, j]]
            found.append(DeficitEntry(rows.start + int(b), int(j), CoverSet.from_elements(family.p, missing)))
        return found

    for found in ordered_map(block, _row_blocks(family, targets)):
        entries.extend(found)
    return entries


def covered_set(family: CoveringFamily) -> CoverSet:
    """
    The largest S for which ``family`` is S-covering: the intersection of the
    cover sets of all ordered pairs. A single vector covers Z_p vacuously.
    """
    if family.size < 2:
        return CoverSet.full(family.p)

    def block(rows: range) -> np.ndarray:
        presence = _presence(family, rows)
        presence[_skip_mask(rows, family.size, True)] = True
        return presence.all(axis=(0, 1))

    common = np.logical_and.reduce(ordered_map(block, _row_blocks(family)))
    return CoverSet.from_indicator(common)


def verify_or_raise(family: CoveringFamily, cover: Optional[CoverSet] = None, stage: Any = None) -> CoverageReport:
    """
    Run :func:`is_covering` and raise on failure.

    Args:
        family: Family to check
        cover: Set to check; defaults to the family's claimed cover
        stage: Label stored on the raised CoverageError

    Raises:
        CoverageError: If the family is not ``cover``-covering
        DomainError: If no cover is given and the family claims none
    """
    cover = cover if cover is not None else family.claimed_cover
    if cover is None:
        raise DomainError("no cover set to verify against")
    report = is_covering(family, cover)
    if not report.is_covering:
        label = f"{stage}: " if stage is not None else ""
        raise CoverageError(f"{label}{report.describe()}", report=report, stage=stage)
    return report
