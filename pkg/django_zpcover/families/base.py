"""
Core data types: cover sets and covering families over Z_p.

A CoveringFamily is an immutable set of N distinct length-ℓ vectors over Z_p,
stored as a read-only ``numpy`` matrix with one row per vector. A CoverSet is
a subset of Z_p stored as a p-bit integer mask.

Usage:
    ```python
    from django_zpcover.families import CoverSet, CoveringFamily

    family = CoveringFamily(3, [(0, 0), (1, 2)], claimed_cover=CoverSet.nonzero(3))
    family.size, family.ell          # (2, 2)
    CoverSet.parse("1,2", 3)         # CoverSet(p=3, {1, 2})
    ```
"""

from __future__ import annotations

import collections.abc
import logging
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from django_zpcover.exceptions import DomainError
from django_zpcover.utils import check_budget
from django_zpcover.validators import validate_cover_spec, validate_prime

logger = logging.getLogger(__name__)


class CoverSet(collections.abc.Set):
    """
    Immutable subset of Z_p backed by a p-bit mask.

    Supports the usual set operators (``|``, ``&``, ``-``, ``<=``) between cover
    sets over the same modulus, plus scaling by a field element.

    Attributes:
        p (int): Modulus
        mask (int): Bit ``x`` is set iff ``x`` is a member
    """

    __slots__ = ("_p", "_mask")

    def __init__(self, p: int, mask: int = 0):
        if mask < 0 or mask >> p:
            raise DomainError(f"cover mask {mask:#x} has members outside [0, {p - 1}]")
        self._p = p
        self._mask = mask

    # Constructors
    # ============

    @classmethod
    def from_elements(cls, p: int, elements: Iterable[int]) -> "CoverSet":
        mask = 0
        for element in elements:
            element = int(element)
            if not 0 <= element < p:
                raise DomainError(f"cover element {element} is outside [0, {p - 1}]")
            mask |= 1 << element
        return cls(p, mask)

    @classmethod
    def full(cls, p: int) -> "CoverSet":
        """Z_p."""
        return cls(p, (1 << p) - 1)

    @classmethod
    def nonzero(cls, p: int) -> "CoverSet":
        """Z_p ∖ {0}."""
        return cls(p, (1 << p) - 2)

    @classmethod
    def interval(cls, p: int, k: int) -> "CoverSet":
        """[0, k−1], the target of the bit lift."""
        if not 1 <= k <= p:
            raise DomainError(f"interval [0, {k - 1}] does not fit in Z_{p}")
        return cls(p, (1 << k) - 1)

    @classmethod
    def from_indicator(cls, indicator: Sequence[bool]) -> "CoverSet":
        return cls.from_elements(len(indicator), np.flatnonzero(np.asarray(indicator, dtype=bool)))

    @classmethod
    def parse(cls, spec: str, p: int) -> Optional["CoverSet"]:
        """
        Parse ``Zp``, ``Zp*``, ``none`` or a comma-separated element list.

        Returns:
            CoverSet | None: ``None`` for ``none``

        Raises:
            DomainError: On malformed text or out-of-range elements
        """
        spec = validate_cover_spec(spec)
        if spec == "none":
            return None
        if spec == "Zp":
            return cls.full(p)
        if spec == "Zp*":
            return cls.nonzero(p)
        return cls.from_elements(p, (int(token) for token in spec.split(",")))

    # Set protocol
    # ============

    @property
    def p(self) -> int:
        return self._p

    @property
    def mask(self) -> int:
        return self._mask

    def __contains__(self, element) -> bool:
        try:
            element = int(element)
        except (TypeError, ValueError):
            return False
        return 0 <= element < self._p and bool(self._mask >> element & 1)

    def __iter__(self) -> Iterator[int]:
        return (x for x in range(self._p) if self._mask >> x & 1)

    def __len__(self) -> int:
        return bin(self._mask).count("1")

    def _from_iterable(self, iterable) -> "CoverSet":
        return CoverSet.from_elements(self._p, iterable)

    def _same_modulus(self, other: "CoverSet") -> None:
        if isinstance(other, CoverSet) and other.p != self._p:
            raise DomainError(f"cover sets over Z_{self._p} and Z_{other.p} cannot be combined")

    def __or__(self, other):
        if not isinstance(other, CoverSet):
            return super().__or__(other)
        self._same_modulus(other)
        return CoverSet(self._p, self._mask | other.mask)

    def __and__(self, other):
        if not isinstance(other, CoverSet):
            return super().__and__(other)
        self._same_modulus(other)
        return CoverSet(self._p, self._mask & other.mask)

    def __sub__(self, other):
        if not isinstance(other, CoverSet):
            return super().__sub__(other)
        self._same_modulus(other)
        return CoverSet(self._p, self._mask & ~other.mask)

    def __le__(self, other):
        if not isinstance(other, CoverSet):
            return super().__le__(other)
        self._same_modulus(other)
        return self._mask & ~other.mask == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, CoverSet):
            return self._p == other.p and self._mask == other.mask
        return super().__eq__(other)

    def __hash__(self) -> int:
        return hash((self._p, self._mask))

    def __repr__(self) -> str:
        return f"CoverSet(p={self._p}, {{{', '.join(str(x) for x in self)}}})"

    # Field operations
    # ================

    @property
    def elements(self) -> tuple:
        return tuple(self)

    def as_array(self) -> np.ndarray:
        return np.fromiter(self, dtype=np.int64)

    def indicator(self) -> np.ndarray:
        """Boolean vector of length p."""
        indicator = np.zeros(self._p, dtype=bool)
        indicator[self.as_array()] = True
        return indicator

    def scaled(self, s: int) -> "CoverSet":
        """sS = {s·x mod p : x ∈ S}."""
        return CoverSet.from_elements(self._p, ((s * x) % self._p for x in self))

    def negated(self) -> "CoverSet":
        return self.scaled(-1)

    def is_full(self) -> bool:
        return self._mask == (1 << self._p) - 1

    def to_spec(self) -> str:
        """Inverse of :meth:`parse`; the empty set renders as ``none``."""
        if self.is_full():
            return "Zp"
        if self._mask == (1 << self._p) - 2:
            return "Zp*"
        if not self._mask:
            return "none"
        return ",".join(str(x) for x in self)


class CoveringFamily:
    """
    An (ℓ, p)-family: N ≥ 1 pairwise distinct vectors of length ℓ over Z_p.

    The vectors live in a read-only ``int64`` matrix of shape (N, ℓ), so a
    family can be shared freely between threads.

    Attributes:
        p (int): Modulus (any prime; constructions over Z_2 are allowed)
        ell (int): Vector length
        size (int): Number of vectors N
        vectors (np.ndarray): The read-only (N, ℓ) matrix
        claimed_cover (CoverSet | None): The set the producing construction promises

    Raises:
        DomainError: On an empty family, entries outside [0, p−1], a claimed
            cover over another modulus or duplicate vectors
    """

    __slots__ = ("_p", "_vectors", "_claimed_cover")

    def __init__(self, p: int, vectors, claimed_cover: Optional[CoverSet] = None):
        p = validate_prime(p)
        array = np.array(vectors, dtype=np.int64)
        if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
            raise DomainError(f"a family needs at least one vector of length ≥ 1, got shape {array.shape}")
        check_budget(array.size, "family")

        bad = np.argwhere((array < 0) | (array >= p))
        if bad.size:
            row, col = bad[0]
            raise DomainError(f"vector {row} has entry {array[row, col]} outside [0, {p - 1}]")
        if claimed_cover is not None and claimed_cover.p != p:
            raise DomainError(f"claimed cover is over Z_{claimed_cover.p}, family is over Z_{p}")
        if np.unique(array, axis=0).shape[0] != array.shape[0]:
            raise DomainError(_describe_duplicate(array))

        array.setflags(write=False)
        self._p = p
        self._vectors = array
        self._claimed_cover = claimed_cover

    @property
    def p(self) -> int:
        return self._p

    @property
    def ell(self) -> int:
        return self._vectors.shape[1]

    @property
    def size(self) -> int:
        return self._vectors.shape[0]

    @property
    def vectors(self) -> np.ndarray:
        return self._vectors

    @property
    def claimed_cover(self) -> Optional[CoverSet]:
        return self._claimed_cover

    def with_claim(self, cover: Optional[CoverSet]) -> "CoveringFamily":
        return CoveringFamily(self._p, self._vectors, claimed_cover=cover)

    def rows(self) -> list[tuple]:
        return [tuple(int(x) for x in row) for row in self._vectors]

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.rows())

    def __getitem__(self, index: int) -> tuple:
        return tuple(int(x) for x in self._vectors[index])

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoveringFamily):
            return NotImplemented
        return (
            self._p == other.p
            and self._vectors.shape == other.vectors.shape
            and bool(np.array_equal(self._vectors, other.vectors))
            and self._claimed_cover == other.claimed_cover
        )

    def __hash__(self) -> int:
        return hash((self._p, self._vectors.shape, self._vectors.tobytes(), self._claimed_cover))

    def __repr__(self) -> str:
        claim = self._claimed_cover.to_spec() if self._claimed_cover is not None else "none"
        return f"CoveringFamily(p={self._p}, ell={self.ell}, size={self.size}, claim={claim})"


def _describe_duplicate(array: np.ndarray) -> str:
    seen: dict[bytes, int] = {}
    for index, row in enumerate(array):
        key = row.tobytes()
        if key in seen:
            return f"vectors {seen[key]} and {index} are equal; a family is a set"
        seen[key] = index
    return "duplicate vectors"
