"""
The clique instance of the prophet inequality.

r disjoint cliques of p elements, every element independently worth 1 with
probability 1/p and 0 otherwise. Feasible sets are subsets of a single
clique. Elements arrive clique by clique, positions 0 … p−1 within a clique.

The prophet takes the best clique: E[max of r Binomial(p, 1/p)]. The gambler
must commit online: accepting a 1 at position t of a clique locks it into
that clique, after which it collects every later 1 of the clique, worth
(p−1−t)/p in expectation, and nothing from later cliques.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np
from scipy.stats import binom

from django_zpcover.conf import settings
from django_zpcover.exceptions import BudgetExceeded
from django_zpcover.utils import check_budget, ordered_map, resolve_seed
from django_zpcover.validators import validate_positive

logger = logging.getLogger(__name__)

Z_95 = 1.96


@dataclass(frozen=True)
class ProphetInstance:
    """
    Attributes:
        p: Clique size, at least 2 (need not be prime)
        r: Number of cliques, at least 1
    """

    p: int
    r: int

    def __post_init__(self):
        validate_positive(self.p, "p", minimum=2)
        validate_positive(self.r, "r")

    @property
    def elements(self) -> int:
        return self.p * self.r

    def is_full_instance(self) -> bool:
        """True when r = p^p."""
        if self.p * math.log2(self.p) > self.r.bit_length() + 1:
            return False
        return self.r == self.p**self.p


def _check_exact_budget(instance: ProphetInstance) -> None:
    if instance.elements > settings.PROPHET_EXACT_BUDGET:
        raise BudgetExceeded(
            f"r·p={instance.elements} exceeds PROPHET_EXACT_BUDGET={settings.PROPHET_EXACT_BUDGET}; "
            "use Monte Carlo estimates only"
        )


def prophet_expected_reward(instance: ProphetInstance) -> float:
    """
    E[max of r i.i.d. Binomial(p, 1/p)] = Σ_{t=1..p} (1 − F(t−1)^r).

    Examples:
        ```python
        prophet_expected_reward(ProphetInstance(3, 1))    # 1.0
        prophet_expected_reward(ProphetInstance(3, 27))   # ≈ 2.639
        ```
    """
    t = np.arange(instance.p)
    tail = binom.sf(t, instance.p, 1 / instance.p)
    # 1 − (1 − tail)^r without cancellation
    return float(np.sum(-np.expm1(instance.r * np.log1p(-tail))))


def _gambler_table(instance: ProphetInstance) -> tuple[np.ndarray, np.ndarray]:
    """
    Values V(c, 0) for c = 0 … C and the accept decisions per (c, t).

    Rows stop once V(c, 0) stops changing; later cliques reuse the last decision row.
    """
    p = instance.p
    q = 1 / p
    lock = 1 + (p - 1 - np.arange(p)) / p
    starts = [0.0]
    decisions = [np.zeros(p, dtype=bool)]
    for _ in range(instance.r):
        value = starts[-1]
        accept = np.zeros(p, dtype=bool)
        for t in range(p - 1, -1, -1):
            accept[t] = lock[t] >= value
            value = q * max(lock[t], value) + (1 - q) * value
        decisions.append(accept)
        if value == starts[-1]:
            break
        starts.append(value)
    return np.array(starts), np.array(decisions)


def gambler_optimal_value(instance: ProphetInstance) -> float:
    """
    Value of the optimal online gambler under clique-by-clique arrival.

    V(c, t) = (1/p)·max(1 + (p−1−t)/p, V(c, t+1)) + (1 − 1/p)·V(c, t+1),
    V(c, p) = V(c−1, 0), V(0, ·) = 0.

    Raises:
        BudgetExceeded: If r·p exceeds PROPHET_EXACT_BUDGET

    Examples:
        ```python
        gambler_optimal_value(ProphetInstance(2, 1))   # 1.0
        ```
    """
    _check_exact_budget(instance)
    starts, _ = _gambler_table(instance)
    return float(starts[-1])


# Monte Carlo
# ===========


@dataclass(frozen=True)
class MCEstimate:
    """Sample mean with the half-width of its 95% normal-approximation interval."""

    mean: float
    half_width: float
    samples: int
    seed: int

    def contains(self, value: float) -> bool:
        return abs(self.mean - value) <= self.half_width

    def to_dict(self) -> dict:
        return asdict(self)


def _estimate(values: np.ndarray, seed: int) -> MCEstimate:
    n = values.size
    sd = float(values.std(ddof=1)) if n > 1 else 0.0
    return MCEstimate(mean=float(values.mean()), half_width=Z_95 * sd / math.sqrt(n), samples=n, seed=seed)


def _simulate_chunk(instance: ProphetInstance, decisions: np.ndarray, seed_seq: np.random.SeedSequence, size: int):
    p, r = instance.p, instance.r
    rng = np.random.default_rng(seed_seq)
    ones = rng.random((size, r, p)) < 1 / p

    prophet = ones.sum(axis=2).max(axis=1).astype(np.float64)

    gambler = np.zeros(size)
    locked = np.full(size, -1, dtype=np.int64)
    for j in range(r):
        row = decisions[min(r - j, len(decisions) - 1)]
        for t in range(p):
            x = ones[:, j, t]
            gambler += x & (locked == j)
            take = x & (locked < 0) & row[t]
            gambler += take
            locked[take] = j
    return prophet, gambler


def simulate_mc(instance: ProphetInstance, samples: Optional[int] = None, seed: Optional[int] = None):
    """
    Monte Carlo estimates of the prophet and gambler values.

    Samples are drawn in chunks of MC_CHUNK, chunk i seeded with the i-th
    child of ``SeedSequence(seed)``; chunks may run on worker threads and are
    merged by index, so results depend on the seed and chunk size only. The
    gambler replays the dynamic program's accept decisions.

    Returns:
        tuple: (prophet MCEstimate, gambler MCEstimate)
    """
    samples = validate_positive(samples if samples is not None else settings.MC_SAMPLES, "samples")
    seed = resolve_seed(seed)
    chunk = settings.MC_CHUNK
    # float64 draws plus their boolean mask
    check_budget(min(chunk, samples) * instance.elements, "Monte Carlo chunk", itemsize=9)
    _, decisions = _gambler_table(instance)

    sizes = [min(chunk, samples - start) for start in range(0, samples, chunk)]
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    results = ordered_map(lambda job: _simulate_chunk(instance, decisions, *job), list(zip(children, sizes)))
    prophet = np.concatenate([result[0] for result in results])
    gambler = np.concatenate([result[1] for result in results])
    logger.debug(f"Simulated {samples} realisations of p={instance.p}, r={instance.r} in {len(sizes)} chunks")
    return _estimate(prophet, seed), _estimate(gambler, seed)


# Reports
# =======


@dataclass(frozen=True)
class ValueReport:
    """
    Prophet and gambler values for one instance.

    Attributes:
        ratio: prophet_exact / gambler_exact
        bounds: ``gambler_ub`` = 2 always; ``prophet_lb`` = (1−1/e)·p
            and ``ratio_lb`` = (1−1/e)·p/2 when r = p^p, else None
        bound_holds: ratio ≥ ratio_lb when that bound applies, else None
    """

    p: int
    r: int
    prophet_exact: float
    gambler_exact: float
    ratio: float
    bounds: dict
    bound_holds: Optional[bool] = None
    prophet_mc: Optional[MCEstimate] = None
    gambler_mc: Optional[MCEstimate] = None

    def to_dict(self) -> dict:
        return asdict(self)

    @property
    def passed(self) -> bool:
        return (
            self.gambler_exact <= self.prophet_exact + 1e-12
            and self.gambler_exact <= self.bounds["gambler_ub"]
            and self.bound_holds is not False
        )

    def table(self) -> str:
        bound = self.bounds.get("ratio_lb")
        bound_text = "-" if bound is None else f"{bound:.6f}"
        header = f"{'p':>4} {'r':>10} {'prophet':>12} {'gambler':>12} {'ratio':>10} {'bound':>10}  result"
        row = (
            f"{self.p:>4} {self.r:>10} {self.prophet_exact:>12.6f} {self.gambler_exact:>12.6f} "
            f"{self.ratio:>10.6f} {bound_text:>10}  {'pass' if self.passed else 'FAIL'}"
        )
        return f"{header}\n{row}"


def gap_report(p: int, r: int, mc_samples: Optional[int] = None, seed: Optional[int] = None) -> ValueReport:
    """
    Exact prophet and gambler values, their ratio and the applicable bounds.

    Args:
        p: Clique size
        r: Number of cliques
        mc_samples: Also attach Monte Carlo estimates with this many samples

    Raises:
        BudgetExceeded: If r·p exceeds PROPHET_EXACT_BUDGET (use simulate_mc)

    Examples:
        ```python
        report = gap_report(3, 27)
        report.ratio >= (1 - 1 / math.e) * 3 / 2   # True
        ```
    """
    instance = ProphetInstance(p, r)
    _check_exact_budget(instance)
    prophet = prophet_expected_reward(instance)
    gambler = gambler_optimal_value(instance)
    ratio = prophet / gambler

    bounds = {"gambler_ub": 2.0, "prophet_lb": None, "ratio_lb": None}
    holds = None
    if instance.is_full_instance():
        bounds["prophet_lb"] = (1 - 1 / math.e) * p
        bounds["ratio_lb"] = (1 - 1 / math.e) * p / 2
        holds = ratio >= bounds["ratio_lb"] and prophet >= bounds["prophet_lb"]

    prophet_mc = gambler_mc = None
    if mc_samples:
        prophet_mc, gambler_mc = simulate_mc(instance, mc_samples, seed)

    report = ValueReport(
        p=p,
        r=r,
        prophet_exact=prophet,
        gambler_exact=gambler,
        ratio=ratio,
        bounds=bounds,
        bound_holds=holds,
        prophet_mc=prophet_mc,
        gambler_mc=gambler_mc,
    )
    log = logger.info if report.passed else logger.warning
    log(f"Gap report p={p}, r={r}: prophet {prophet:.6f}, gambler {gambler:.6f}, ratio {ratio:.6f}")
    return report
