"""
Closed-form bounds on AAM(p, N), the shortest length of a Z_p-covering family
of size N, and the limitation check for agnostic concatenation procedures.

Bounds are returned as reals; compare with integral lengths through ceilings.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

import networkx as nx
import numpy as np

from .arithmetic import ceil_log, select_parameters
from .exceptions import DomainError
from .families import CoverSet, CoveringFamily, concat_families, pair_cover_set
from .utils import check_budget
from .validators import validate_entry_range, validate_positive, validate_prime

logger = logging.getLogger(__name__)


# AAM bounds
# ==========


def aam_lower_bound(p: int, log2N: float) -> float:
    """
    Lower bound on AAM(p, N).

    A Z_p-covering family of two or more vectors has at least p coordinates,
    and for p ≥ 7 its length is at least log base (2 + 12/(p−6)) of N.

    Examples:
        ```python
        aam_lower_bound(7, 10)       # 7.0
        aam_lower_bound(101, 1000)   # ≈ 918.8
        ```
    """
    p = validate_prime(p, odd=True)
    if p < 7:
        return float(p)
    return max(float(p), log2N / math.log2(2 + 12 / (p - 6)))


def aam_upper_trivial(p: int, N: int) -> int:
    """p·ceil(log_p N), the length of the base-p family; N = 1 gives p."""
    p = validate_prime(p)
    return p * ceil_log(validate_positive(N, "N"), p)


def aam_upper_prior(p: int, log2N: float) -> float:
    """
    The earlier explicit bound max{p^{1+5·log2 log2 p}, log_{2−1/log2 p} N}.

    Returns ``inf`` when the first term overflows a float.
    """
    p = validate_prime(p, odd=True)
    exponent = (1 + 5 * math.log2(math.log2(p))) * math.log2(p)
    first = math.inf if exponent > 1000 else 2.0**exponent
    second = log2N / math.log2(2 - 1 / math.log2(p))
    return max(first, second)


def _upper_trivial_from_log(p: int, log2N: float) -> int:
    digits = max(1, math.ceil(round(log2N / math.log2(p), 9)))
    return p * digits


@dataclass(frozen=True)
class BoundReport:
    """
    Lower and upper bounds on AAM(p, 2^log2N).

    Attributes:
        lower: :func:`aam_lower_bound`
        upper_trivial: Base-p family length
        upper_pipeline: ℓ₃ bound of the three-stage pipeline (None when log2N < 4)
        upper_prior: :func:`aam_upper_prior`
        consistent: lower ≤ every upper bound
    """

    p: int
    log2N: float
    lower: float
    upper_trivial: float
    upper_pipeline: Optional[float]
    upper_prior: float
    consistent: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def table(self) -> str:
        pipeline = "n/a" if self.upper_pipeline is None else f"{self.upper_pipeline:.0f}"
        return "\n".join(
            [
                f"lower           {self.lower:.3f}",
                f"trivial upper   {self.upper_trivial:.0f}",
                f"pipeline upper  {pipeline}",
            ]
        )


def bound_report(p: int, log2N: Optional[float] = None, N: Optional[int] = None) -> BoundReport:
    """
    Build a BoundReport from either ``log2N`` or an exact ``N``.

    Raises:
        DomainError: If neither or both of log2N and N are given
    """
    if (log2N is None) == (N is None):
        raise DomainError("pass exactly one of log2N and N")
    if N is not None:
        log2N = math.log2(validate_positive(N, "N"))
        trivial = aam_upper_trivial(p, N)
    else:
        if log2N < 0:
            raise DomainError(f"log2N must be non-negative, got {log2N}")
        trivial = _upper_trivial_from_log(p, log2N)

    lower = aam_lower_bound(p, log2N)
    pipeline = float(select_parameters(p, log2N).ell3_bound) if log2N >= 4 else None
    uppers = [trivial] + ([pipeline] if pipeline is not None else [])
    return BoundReport(
        p=p,
        log2N=float(log2N),
        lower=lower,
        upper_trivial=float(trivial),
        upper_pipeline=pipeline,
        upper_prior=aam_upper_prior(p, log2N),
        consistent=all(lower <= upper for upper in uppers),
    )


# Agnostic concatenation
# ======================


def agnostic_boost_bound(k: int, z: int, kprime: int) -> float:
    """
    Size exponent reachable by an agnostic concatenation procedure: 4kz/k′.

    Examples:
        ```python
        agnostic_boost_bound(3, 4, 6)   # 8.0
        ```
    """
    if min(k, z, kprime) <= 0:
        raise DomainError("k, z and k′ must be positive")
    return 4 * k * z / kprime


@dataclass(frozen=True)
class AgnosticWitness:
    """
    Certificate that an agnostic concatenation of a [0, 2k−1]-valued family
    grows the size by at most |V|^{|T_h|}.

    Attributes:
        slot_sets: S_j, the scaled difference set of slot j
        h: Element of S′ contained in the fewest slot sets (smallest on ties)
        T_h: Slots whose set contains h
        certified_exponent: |T_h|
        bound: 4kz/k′
        draft_bound: 4zk/(p−1), the weaker variant with k′ = p − 1
    """

    k: int
    z: int
    kprime: int
    alphas: tuple
    slot_sets: tuple
    h: int
    T_h: tuple
    certified_exponent: int
    bound: float
    draft_bound: float
    comment: str = field(default="draft variant uses k' = p - 1")

    def to_dict(self) -> dict:
        data = asdict(self)
        data["slot_sets"] = [list(slot) for slot in self.slot_sets]
        return data


def difference_set(family: CoveringFamily) -> CoverSet:
    """Every v_i − w_i mod p over ordered pairs of distinct vectors and all coordinates."""
    if family.size < 2:
        return CoverSet(family.p)
    check_budget(family.size * family.size * family.ell, "difference enumeration")
    array = family.vectors
    diffs = (array[:, None, :] - array[None, :, :]) % family.p
    distinct = ~np.eye(family.size, dtype=bool)
    return CoverSet.from_elements(family.p, np.unique(diffs[distinct]))


def agnostic_witness(family: CoveringFamily, k: int, alphas: Sequence[int], sprime: CoverSet) -> AgnosticWitness:
    """
    Locate the element of S′ that the fewest concatenation slots can realise.

    Slot j of the concatenation holds α_j·v for v ∈ V, so its pairs realise
    S_j = α_j·D where D is the difference set of V. Any S′-covering subset of
    the concatenation must realise h in a slot of T_h, so it projects
    injectively onto those slots and has at most |V|^{|T_h|} members.

    Args:
        family: V, entries in [0, 2k−1]
        k: Half-width of the entry range
        alphas: z nonzero multipliers
        sprime: Target set S′, 0 ∉ S′

    Raises:
        DomainError: On an entry outside [0, 2k−1], a zero multiplier, or 0 ∈ S′
    """
    p = family.p
    validate_entry_range(int(family.vectors.max()), 2 * k)
    alphas = tuple(int(a) % p for a in alphas)
    if not alphas or 0 in alphas:
        raise DomainError("multipliers must be nonzero and at least one is needed")
    if sprime.p != p or 0 in sprime or not len(sprime):
        raise DomainError("S′ must be a nonempty subset of Z_p ∖ {0} over the family's modulus")

    differences = difference_set(family)
    slots = tuple(differences.scaled(alpha) for alpha in alphas)
    membership = {h: sum(h in slot for slot in slots) for h in sprime}
    h = min(membership, key=lambda element: (membership[element], element))
    T_h = tuple(j for j, slot in enumerate(slots) if h in slot)
    logger.debug(f"Agnostic witness: h={h} appears in slots {T_h}")
    return AgnosticWitness(
        k=k,
        z=len(alphas),
        kprime=len(sprime),
        alphas=alphas,
        slot_sets=tuple(slot.elements for slot in slots),
        h=h,
        T_h=T_h,
        certified_exponent=len(T_h),
        bound=agnostic_boost_bound(k, len(alphas), len(sprime)),
        draft_bound=4 * len(alphas) * k / (p - 1),
    )


def concatenation_set(family: CoveringFamily, alphas: Sequence[int]) -> CoveringFamily:
    """W = {(α₁·v₁, …, α_z·v_z) : v_j ∈ V}, ordered lexicographically by slot."""
    p = family.p
    result = None
    for alpha in alphas:
        if int(alpha) % p == 0:
            raise DomainError("multipliers must be nonzero")
        slot = CoveringFamily(p, (family.vectors * int(alpha)) % p)
        result = slot if result is None else concat_families(result, slot)
    if result is None:
        raise DomainError("at least one multiplier is needed")
    return result


def max_covering_subfamily(family: CoveringFamily, cover: CoverSet) -> list[int]:
    """
    Indices of a largest S-covering subfamily, by exhaustive maximum-clique search.

    Two vectors are adjacent when both orientations of their pair cover S, so
    S-covering subfamilies are exactly the cliques. Meant for small families.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(family.size))
    rows = family.rows()
    for a in range(family.size):
        for b in range(a + 1, family.size):
            if cover <= pair_cover_set(rows[a], rows[b], family.p) and cover <= pair_cover_set(rows[b], rows[a], family.p):
                graph.add_edge(a, b)
    clique, _ = nx.max_weight_clique(graph, weight=None)
    return sorted(clique)
