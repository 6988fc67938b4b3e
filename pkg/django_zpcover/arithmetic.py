"""
Modular arithmetic over prime fields and the parameter arithmetic of the
upper-bound pipeline.

Everything here is a pure function of its inputs.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass

import sympy

from .exceptions import DomainError

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    """
    Deterministic primality test.

    Args:
        n: Positive integer

    Returns:
        bool: True iff n is prime

    Examples:
        ```python
        is_prime(2)    # True
        is_prime(1)    # False
        is_prime(101)  # True
        ```
    """
    return bool(sympy.isprime(int(n)))


def largest_prime_at_most(n: int) -> int:
    """
    Raises:
        DomainError: If n < 2
    """
    n = int(n)
    if n < 2:
        raise DomainError(f"there is no prime ≤ {n}")
    return int(sympy.prevprime(n + 1))


def _require_odd_prime(p: int) -> int:
    from .validators import validate_prime

    return validate_prime(p, odd=True)


def primitive_root(p: int) -> int:
    """
    Smallest generator of the multiplicative group Z_p^*.

    Args:
        p: Odd prime

    Returns:
        int: The smallest g ∈ [2, p−1] of multiplicative order p−1

    Raises:
        DomainError: If p is not an odd prime

    Examples:
        ```python
        primitive_root(3)  # 2
        primitive_root(5)  # 2
        primitive_root(7)  # 3
        ```
    """
    p = _require_odd_prime(p)
    return int(sympy.primitive_root(p))


def mod_inverse(a: int, p: int) -> int:
    """
    Multiplicative inverse modulo a prime.

    Raises:
        DomainError: If a ≡ 0 (mod p)
    """
    a = int(a) % p
    if a == 0:
        raise DomainError(f"0 has no inverse modulo {p}")
    return pow(a, -1, p)


def ceil_log(n: int, base: int) -> int:
    """
    Smallest d ≥ 1 with base^d ≥ n, computed on integers.

    ``ceil_log(1, p)`` is 1, matching the degenerate base-p family of length p.
    """
    d, power = 1, base
    while power < n:
        power *= base
        d += 1
    return d


def ceil_log2(k: int) -> int:
    """ceil(log2 k) for k ≥ 2, the number of bits of k − 1."""
    return max(1, (int(k) - 1).bit_length())


# Parameter selection
# ===================


@dataclass(frozen=True)
class ParameterSelection:
    """
    Parameters of the three-stage upper-bound pipeline for a target size 2^log2N.

    Attributes:
        p: Field size
        log2N: log2 of the target family size
        k: Largest prime ≤ p with k^{5·log2 log2 k} ≤ log2N
        ell1: ceil(2·log2N), length of the mod-k family
        ell2: 2·ell1·ceil(log2 k), length after the bit lift
        sizeS_bound: ceil(p·ln p/(k−1)), size of the random scaling set
        ell3_bound: sizeS_bound·ell2
        ell_star: p·log2 p·log2N/√k, the target length
    """

    p: int
    log2N: float
    k: int
    ell1: int
    ell2: int
    sizeS_bound: int
    ell3_bound: int
    ell_star: float

    def to_dict(self) -> dict:
        return asdict(self)


def _k_is_feasible(k: int, log2N: float) -> bool:
    if k == 2:
        return True
    # k^{5·log2 log2 k} ≤ log2N, compared through log2 of both sides
    exponent = 5.0 * math.log2(math.log2(k))
    return exponent * math.log2(k) <= math.log2(log2N)


def select_parameters(p: int, log2N: float) -> ParameterSelection:
    """
    Pick k and the stage lengths for building a Z_p-covering family of size 2^log2N.

    Args:
        p: Odd prime
        log2N: log2 of the target size, at least 4

    Returns:
        ParameterSelection: every field populated; ``k ≤ p``

    Raises:
        DomainError: If p is not an odd prime or log2N < 4

    Examples:
        ```python
        select_parameters(101, 1024).k     # 3
        select_parameters(101, 1024).ell2  # 8192
        select_parameters(7, 4).k          # 2
        ```
    """
    p = _require_odd_prime(p)
    if log2N < 4:
        raise DomainError(f"log2N must be at least 4, got {log2N}")

    k = 2
    for candidate in sympy.primerange(2, p + 1):
        if _k_is_feasible(candidate, log2N):
            k = int(candidate)
        else:
            # k^{5 log2 log2 k} is increasing in k
            break

    ell1 = math.ceil(2 * log2N)
    ell2 = 2 * ell1 * ceil_log2(k)
    size_bound = math.ceil(p * math.log(p) / (k - 1))
    selection = ParameterSelection(
        p=p,
        log2N=float(log2N),
        k=k,
        ell1=ell1,
        ell2=ell2,
        sizeS_bound=size_bound,
        ell3_bound=size_bound * ell2,
        ell_star=p * math.log2(p) * log2N / math.sqrt(k),
    )
    logger.debug(f"Selected pipeline parameters {selection}")
    return selection
