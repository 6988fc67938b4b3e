"""
Custom Exception Classes for django-zpcover

Exceptions in this module:
    - ZpCoverError: Base class of every error raised by the package
    - DomainError: A precondition on the inputs of an operation is violated
    - FamilyFormatError: A zpcf file could not be parsed
    - BudgetExceeded: A size or enumeration guard refused the request
    - CoverageError: A covering verification failed
    - CertificateError: A coloring certificate was refused

Usage:
    from django_zpcover.exceptions import CoverageError

    try:
        family, stats = build_upperbound_family(7, 9)
    except CoverageError as exc:
        logger.error(f"stage {exc.stage} failed: {exc.report.first_failure}")
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any, Optional

if TYPE_CHECKING:
    from django_zpcover.families.verifier import CoverageReport


class ZpCoverError(Exception):
    """
    Base exception for django-zpcover.

    Management commands catch this class to turn library failures into
    ``CommandError`` with the right exit status.
    """

    pass


class DomainError(ZpCoverError, ValueError):
    """
    Exception raised when an operation's precondition does not hold.

    This exception is raised when:
    - A modulus is not prime (or not odd where an odd prime is required)
    - Zero is inverted or used as a scaling multiplier
    - A length is not a multiple of p − 1 for balanced words
    - Two families with different moduli are combined
    - The lift modulus k is too large for p (2k − 1 > p − 1)

    Examples:
        ```python
        from django_zpcover.arithmetic import mod_inverse

        mod_inverse(0, 5)  # DomainError: 0 has no inverse modulo 5
        ```
    """

    pass


class FamilyFormatError(ZpCoverError, ValueError):
    """
    Exception raised when a zpcf file is malformed.

    Attributes:
        line (int | None): 1-based line number of the offending line, if known
        message (str): Description of the problem

    The string form is ``line <n>: <message>`` so command output points at
    the exact line of the input file.
    """

    def __init__(self, message: str, line: Optional[int] = None):
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class BudgetExceeded(ZpCoverError):
    """
    Exception raised when a size guard refuses an allocation or enumeration.

    Raised for families whose dense matrix exceeds the memory budget, for
    exhaustive enumerations beyond their configured limits and for exact
    prophet computations beyond ``PROPHET_EXACT_BUDGET``.
    """

    pass


class CoverageError(ZpCoverError):
    """
    Exception raised when a covering verification fails.

    Attributes:
        report (CoverageReport): The failing report, including the first
            failing ordered pair and the missing element
        stage (Any): Where the failure happened, e.g. ``"F2"`` in the
            pipeline or the step index of the Alon–Alweiss iteration
    """

    def __init__(self, message: str, report: "CoverageReport", stage: Any = None):
        self.report = report
        self.stage = stage
        super().__init__(message)


class CertificateError(ZpCoverError):
    """
    Exception raised when a coloring certificate is malformed or fails
    verification where a verified certificate is required.

    Attributes:
        verdict: The CertificateVerdict that caused the refusal, if any
    """

    def __init__(self, message: str, verdict: Any = None):
        self.verdict = verdict
        super().__init__(message)
