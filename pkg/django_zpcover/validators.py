"""
Validators for django-zpcover

Precondition checks shared by the arithmetic, family and construction
modules. Every validator raises DomainError with a message naming the
offending value.

Validators in this module:
    - validate_prime: Check that a modulus is prime (optionally odd)
    - validate_cover_spec: Check the textual form of a cover set
    - validate_entry_range: Check a vector entry against its modulus
    - validate_positive: Check a count parameter

Usage:
    ```python
    from django_zpcover.validators import validate_prime

    p = validate_prime(7, odd=True)
    ```
"""

import numbers
import re

from .arithmetic import is_prime
from .exceptions import DomainError

# Cover Set Specification Pattern
# ===============================

COVER_SPEC_PATTERN = re.compile(r"^(Zp\*?|none|\d+(,\d+)*)$")
"""
Regex pattern for the textual cover-set form used by zpcf headers and ``--s``.

Accepted forms:
    - "Zp"      every element of Z_p
    - "Zp*"     every nonzero element
    - "none"    no claim (header only)
    - "1,2,5"   explicit comma-separated elements, no spaces
"""


def validate_prime(p, odd: bool = False) -> int:
    """
    Validate a modulus.

    Args:
        p: Candidate modulus
        odd: Also require p ≥ 3

    Returns:
        int: p, unchanged

    Raises:
        DomainError: If p is not an integer prime (or is 2 while ``odd``)
    """
    if isinstance(p, bool) or not isinstance(p, numbers.Integral) or not is_prime(p):
        raise DomainError(f"{p!r} is not a prime modulus")
    if odd and p < 3:
        raise DomainError(f"an odd prime modulus is required, got {p}")
    return int(p)


def validate_cover_spec(spec: str) -> str:
    """
    Validate the textual form of a cover set.

    Raises:
        DomainError: If ``spec`` is not one of the forms of COVER_SPEC_PATTERN
    """
    if not COVER_SPEC_PATTERN.match(spec.strip()):
        raise DomainError(f"invalid cover set specification {spec!r} (use Zp, Zp*, none or a list like 1,2)")
    return spec.strip()


def validate_entry_range(value: int, p: int) -> int:
    if not 0 <= value < p:
        raise DomainError(f"entry {value} is outside [0, {p - 1}]")
    return int(value)


def validate_positive(value, name: str, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < minimum:
        raise DomainError(f"{name} must be an integer ≥ {minimum}, got {value!r}")
    return int(value)
