"""
Balanced words: vectors over Z_p with no zero entry and every nonzero element
appearing equally often.
"""

from __future__ import annotations

import itertools
import logging
import math
from typing import Iterator, Sequence

import numpy as np
from sympy.utilities import iterables

from django_zpcover.exceptions import DomainError
from django_zpcover.families import CoverSet, CoveringFamily
from django_zpcover.utils import check_budget
from django_zpcover.validators import validate_positive, validate_prime

logger = logging.getLogger(__name__)


def _multiplicity(p: int, ell: int) -> int:
    p = validate_prime(p, odd=True)
    ell = validate_positive(ell, "ell")
    if ell % (p - 1):
        raise DomainError(f"ell={ell} is not a multiple of p−1={p - 1}")
    return ell // (p - 1)


def balanced_size(p: int, ell: int) -> int:
    """ℓ! / ((ℓ/(p−1))!)^{p−1}."""
    count = _multiplicity(p, ell)
    return math.factorial(ell) // math.factorial(count) ** (p - 1)


def multiset_permutations(items: Sequence[int]) -> Iterator[tuple]:
    """Distinct permutations of ``items`` in lexicographic order."""
    return map(tuple, iterables.multiset_permutations(sorted(items)))


class BalancedFamily:
    """
    All balanced words B_ℓ over Z_p, in lexicographic order.

    Attributes:
        p (int): Odd prime
        ell (int): Word length, a multiple of p − 1
        family (CoveringFamily): The words, one row each
    """

    def __init__(self, p: int, ell: int, family: CoveringFamily):
        self.p = p
        self.ell = ell
        self.family = family
        self._index = {row.tobytes(): i for i, row in enumerate(family.vectors)}

    @property
    def size(self) -> int:
        return self.family.size

    @property
    def vectors(self) -> np.ndarray:
        return self.family.vectors

    def index_of(self, words: np.ndarray) -> np.ndarray:
        """
        Row indices of ``words`` (shape (n, ℓ)).

        Raises:
            DomainError: If a word is not balanced
        """
        words = np.ascontiguousarray(words, dtype=np.int64)
        try:
            return np.array([self._index[row.tobytes()] for row in words], dtype=np.int64)
        except KeyError:
            raise DomainError("word is not a balanced word of this family") from None

    def scaled_indices(self, a: int) -> np.ndarray:
        """Index of a·b for every member b; a permutation of the index set when a ≠ 0."""
        if a % self.p == 0:
            raise DomainError("balanced words are closed only under nonzero scaling")
        return self.index_of((self.vectors * a) % self.p)


def enumerate_balanced(p: int, ell: int) -> BalancedFamily:
    """
    Every balanced word of length ``ell`` over Z_p, lexicographically.

    Raises:
        DomainError: If ell is not a positive multiple of p − 1
        BudgetExceeded: If the family would not fit the memory budget

    Examples:
        ```python
        enumerate_balanced(3, 2).family.rows()   # [(1, 2), (2, 1)]
        enumerate_balanced(3, 4).size            # 6
        ```
    """
    count = _multiplicity(p, ell)
    check_budget(balanced_size(p, ell) * ell, "balanced words")
    letters = [value for value in range(1, p) for _ in range(count)]
    words = np.array(list(multiset_permutations(letters)), dtype=np.int64)
    logger.debug(f"Enumerated {len(words)} balanced words of length {ell} over Z_{p}")
    return BalancedFamily(p, ell, CoveringFamily(p, words))


def base_family_A0(p: int, ell0: int) -> CoveringFamily:
    """
    The starting family A₀ ⊆ B_ℓ₀.

    Positions split into (p−1)/2 blocks of length 2ℓ₀/(p−1); block t holds
    the values 2t+1 and 2t+2, each ℓ₀/(p−1) times. Two distinct members
    differ inside some block, where one has 2t+2 against the other's 2t+1, so
    the family is {1}-covering in both orientations.

    Returns:
        CoveringFamily: Claimed cover {1}, rows in lexicographic order

    Examples:
        ```python
        base_family_A0(3, 2).rows()   # [(1, 2), (2, 1)]
        base_family_A0(5, 4).size     # 4
        ```
    """
    count = _multiplicity(p, ell0)
    block_length = 2 * count
    blocks = []
    for t in range((p - 1) // 2):
        low, high = 2 * t + 1, 2 * t + 2
        arrangements = []
        for positions in itertools.combinations(range(block_length), count):
            block = [high] * block_length
            for position in positions:
                block[position] = low
            arrangements.append(block)
        blocks.append(arrangements)

    size = math.comb(block_length, count) ** len(blocks)
    check_budget(size * ell0, "base family")
    rows = np.array([sum(choice, []) for choice in itertools.product(*blocks)], dtype=np.int64)
    rows = rows[np.lexsort(rows.T[::-1])]
    return CoveringFamily(p, rows, claimed_cover=CoverSet.from_elements(p, [1]))
