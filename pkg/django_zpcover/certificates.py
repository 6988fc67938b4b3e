"""
Product-dimension certificates for disjoint cliques, and partition matroids.

Q(p, r) is r disjoint cliques of p vertices; vertex (j, i) is position i of
clique j. A certificate is q proper colorings with p colors each such that
every two vertices of different cliques share a color in some coloring, so
it witnesses PD(p, r) ≤ q.

A Z_p-covering family of length ℓ gives one with q = ℓ: coloring k colors
(j, i) with (v^j_k + i) mod p. For vertices (j, i), (j′, i′) pick k with
v^j_k − v^{j′}_k ≡ i′ − i; both get the same color there.

Each coloring also defines a partition matroid on the r·p vertices (at most
one vertex per color class). The intersection of the q matroids is exactly
the family of vertex sets inside one clique.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .conf import settings
from .exceptions import BudgetExceeded, CertificateError, DomainError
from .families import CoverSet, CoveringFamily, verify_or_raise
from .signals import certificate_verified
from .utils import check_budget, make_rng, ordered_map
from .validators import validate_positive

logger = logging.getLogger(__name__)


class ColoringCertificate:
    """
    q colorings of Q(p, r), stored as a read-only (q, r, p) array of colors.

    Raises:
        CertificateError: On a malformed array or colors outside [0, p−1]
    """

    def __init__(self, p: int, r: int, colorings):
        array = np.array(colorings, dtype=np.int64)
        if array.ndim != 3 or array.shape[1:] != (r, p) or array.shape[0] < 1:
            raise CertificateError(f"colorings must have shape (q, {r}, {p}) with q ≥ 1, got {array.shape}")
        if ((array < 0) | (array >= p)).any():
            raise CertificateError(f"colors must lie in [0, {p - 1}]")
        array.setflags(write=False)
        self.p = p
        self.r = r
        self.colorings = array

    @property
    def q(self) -> int:
        return self.colorings.shape[0]

    def to_dict(self) -> dict:
        """Colors per vertex in row-major (j, i) order, one list per coloring."""
        return {
            "p": self.p,
            "r": self.r,
            "q": self.q,
            "colorings": self.colorings.reshape(self.q, self.r * self.p).tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ColoringCertificate":
        try:
            p, r, q = int(data["p"]), int(data["r"]), int(data["q"])
            colorings = np.array(data["colorings"], dtype=np.int64)
        except (KeyError, TypeError, ValueError) as exc:
            raise CertificateError(f"malformed certificate: {exc}") from exc
        if colorings.shape != (q, r * p):
            raise CertificateError(f"expected {q} colorings of {r * p} vertices, got shape {colorings.shape}")
        return cls(p, r, colorings.reshape(q, r, p))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoringCertificate):
            return NotImplemented
        return self.p == other.p and self.r == other.r and np.array_equal(self.colorings, other.colorings)

    def __repr__(self) -> str:
        return f"ColoringCertificate(p={self.p}, r={self.r}, q={self.q})"


@dataclass(frozen=True)
class CertificateVerdict:
    """
    Attributes:
        ok: Both certificate conditions hold
        reason: ``proper`` or ``shared-color`` for the failed condition
        witness: The first violating vertex pair ((j, i), (j′, i′))
        coloring: For properness failures, the coloring index
    """

    ok: bool
    reason: Optional[str] = None
    witness: Optional[tuple] = None
    coloring: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "certificate verified"
        (j, i), (jj, ii) = self.witness
        if self.reason == "proper":
            return f"coloring {self.coloring} is not proper: ({j}, {i}) and ({jj}, {ii}) share a color"
        return f"vertices ({j}, {i}) and ({jj}, {ii}) never share a color"


def family_to_colorings(family: CoveringFamily, r: int) -> ColoringCertificate:
    """
    Certificate for Q(p, r) from the first r vectors of a Z_p-covering family.

    Raises:
        DomainError: If r > |F|
        CoverageError: If the family is not Z_p-covering

    Examples:
        ```python
        certificate = family_to_colorings(base_p_family(3, 9), 9)
        certificate.q                    # 6
        verify_certificate(certificate)  # CertificateVerdict(ok=True, ...)
        ```
    """
    r = validate_positive(r, "r")
    if r > family.size:
        raise DomainError(f"r={r} exceeds the family size {family.size}")
    verify_or_raise(family, CoverSet.full(family.p), stage="certificate source")
    p = family.p
    check_budget(family.ell * r * p, "coloring certificate")
    vectors = family.vectors[:r]
    colorings = (vectors.T[:, :, None] + np.arange(p)[None, None, :]) % p
    return ColoringCertificate(p, r, colorings)


def _improper(certificate: ColoringCertificate) -> Optional[CertificateVerdict]:
    proper = (np.sort(certificate.colorings, axis=2) == np.arange(certificate.p)).all(axis=2)
    failing = np.argwhere(~proper)
    if not failing.size:
        return None
    k, j = (int(x) for x in failing[0])
    colors = certificate.colorings[k, j]
    for i, ii in itertools.combinations(range(certificate.p), 2):
        if colors[i] == colors[ii]:
            return CertificateVerdict(ok=False, reason="proper", witness=((j, i), (j, ii)), coloring=k)
    raise AssertionError("an improper clique has a repeated color")


def _first_unshared(certificate: ColoringCertificate, j: int) -> Optional[tuple]:
    colorings = certificate.colorings
    # shared[i, j′, i′]: some coloring gives (j, i) and (j′, i′) one color
    shared = (colorings[:, j, :, None, None] == colorings[:, None, :, :]).any(axis=0)
    shared[:, : j + 1, :] = True
    failing = np.argwhere(~shared)
    if not failing.size:
        return None
    i, jj, ii = (int(x) for x in failing[0])
    return (j, i), (jj, ii)


def verify_certificate(certificate: ColoringCertificate) -> CertificateVerdict:
    """
    Check properness of every coloring inside every clique, then that every
    cross-clique vertex pair shares a color in some coloring.

    Returns:
        CertificateVerdict: The first violation in (coloring, clique) order
        for properness, else in (j, i, j′, i′) order
    """
    verdict = _improper(certificate)
    if verdict is None:
        check_budget(certificate.q * certificate.p * certificate.r * certificate.p, "certificate pair check", itemsize=1)
        found = ordered_map(lambda j: _first_unshared(certificate, j), range(certificate.r - 1))
        witness = next((pair for pair in found if pair is not None), None)
        verdict = CertificateVerdict(ok=True) if witness is None else CertificateVerdict(ok=False, reason="shared-color", witness=witness)
    certificate_verified.send(sender=ColoringCertificate, certificate=certificate, verdict=verdict)
    logger.debug(f"{certificate}: {verdict.describe()}")
    return verdict


# Partition matroids
# ==================


class MatroidExport:
    """
    q partition matroids over the r·p vertices, vertex (j, i) numbered j·p + i.

    ``partitions[k, e]`` is the part (color) of element e in matroid k;
    ``hyperedges`` is its transpose, one q-coordinate hyperedge per element.
    """

    def __init__(self, p: int, r: int, partitions):
        self.p = p
        self.r = r
        self.partitions = np.array(partitions, dtype=np.int64)
        if self.partitions.ndim != 2 or self.partitions.shape[1] != p * r:
            raise CertificateError(f"partitions must have shape (q, {p * r}), got {self.partitions.shape}")
        self.partitions.setflags(write=False)

    @property
    def q(self) -> int:
        return self.partitions.shape[0]

    @property
    def elements(self) -> int:
        return self.p * self.r

    @property
    def hyperedges(self) -> np.ndarray:
        return self.partitions.T

    def parts(self, k: int) -> list[list[int]]:
        """Element lists of matroid k, one per color."""
        return [np.flatnonzero(self.partitions[k] == color).tolist() for color in range(self.p)]

    def to_colorings(self) -> ColoringCertificate:
        return ColoringCertificate(self.p, self.r, self.partitions.reshape(self.q, self.r, self.p))

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "q": self.q,
            "elements": self.elements,
            "partitions": self.partitions.tolist(),
            "hyperedges": self.hyperedges.tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MatroidExport":
        try:
            return cls(int(data["p"]), int(data["r"]), data["partitions"])
        except (KeyError, TypeError, ValueError) as exc:
            raise CertificateError(f"malformed matroid export: {exc}") from exc


def export_partition_matroids(certificate: ColoringCertificate) -> MatroidExport:
    """
    Raises:
        CertificateError: If the certificate does not verify
    """
    verdict = verify_certificate(certificate)
    if not verdict.ok:
        raise CertificateError(f"refusing to export an unverified certificate: {verdict.describe()}", verdict=verdict)
    return MatroidExport(certificate.p, certificate.r, certificate.colorings.reshape(certificate.q, -1))


@dataclass(frozen=True)
class MatroidCheck:
    ok: bool
    mode: str
    checked: int
    counterexample: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def _classify(export: MatroidExport, members: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Independent-in-every-matroid and within-one-clique flags for boolean member rows."""
    counts = members.astype(np.int64)
    independent = np.ones(len(members), dtype=bool)
    for k in range(export.q):
        onehot = np.eye(export.p, dtype=np.int64)[export.partitions[k]]
        independent &= (counts @ onehot <= 1).all(axis=1)
    cliques = np.eye(export.r, dtype=np.int64)[np.arange(export.elements) // export.p]
    within = ((counts @ cliques) > 0).sum(axis=1) <= 1
    return independent, within


def _subset_rows(export: MatroidExport, subsets: list) -> np.ndarray:
    members = np.zeros((len(subsets), export.elements), dtype=bool)
    for row, subset in enumerate(subsets):
        members[row, list(subset)] = True
    return members


def verify_matroid_intersection_equals_cliques(
    export: MatroidExport, mode: str = "auto", seed: Optional[int] = None
) -> MatroidCheck:
    """
    Check that a vertex set is independent in all q matroids iff it lies in one clique.

    Exhaustive mode checks all 2^{r·p} subsets (r·p ≤ MATROID_SUBSET_LIMIT).
    Sampled mode checks every subset of size at most 2 plus MATROID_SAMPLES
    random subsets of sizes 3 … p+1. ``auto`` is exhaustive when allowed.

    Raises:
        BudgetExceeded: Exhaustive mode above MATROID_SUBSET_LIMIT
    """
    n = export.elements
    limit = settings.MATROID_SUBSET_LIMIT
    if mode not in ("auto", "exhaustive", "sampled"):
        raise DomainError(f"mode must be auto, exhaustive or sampled, got {mode!r}")
    if mode == "auto":
        mode = "exhaustive" if n <= limit else "sampled"
    if mode == "exhaustive" and n > limit:
        raise BudgetExceeded(f"exhaustive matroid check over {n} elements exceeds MATROID_SUBSET_LIMIT={limit}")

    if mode == "exhaustive":
        masks = np.arange(1 << n, dtype=np.int64)
        members = ((masks[:, None] >> np.arange(n)) & 1).astype(bool)
    else:
        rng = make_rng(seed)
        subsets = [()] + [(e,) for e in range(n)] + list(itertools.combinations(range(n), 2))
        for _ in range(settings.MATROID_SAMPLES):
            size = int(rng.integers(3, export.p + 2))
            subsets.append(tuple(sorted(int(e) for e in rng.choice(n, size=min(size, n), replace=False))))
        members = _subset_rows(export, subsets)

    independent, within = _classify(export, members)
    mismatched = np.flatnonzero(independent != within)
    counterexample = None
    if mismatched.size:
        counterexample = tuple(int(e) for e in np.flatnonzero(members[mismatched[0]]))
    result = MatroidCheck(ok=counterexample is None, mode=mode, checked=len(members), counterexample=counterexample)
    logger.debug(f"Matroid intersection check ({mode}) over {len(members)} subsets: {result.ok}")
    return result
