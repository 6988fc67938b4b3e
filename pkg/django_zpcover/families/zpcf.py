"""
Reading and writing the zpcf text format.

    # zpcf v1
    p=<p> l=<ell> n=<N> s=<spec>
    # optional comment lines
    <ell space-separated entries>      (N rows)

``<spec>`` is ``Zp``, ``Zp*``, a comma-separated element list or ``none``.
Files are ASCII and end with a newline. Every parse error names its line.
"""

from __future__ import annotations

import logging
import re
from pathlib import Path
from typing import Iterable, Union

from django_zpcover.constants import constants
from django_zpcover.exceptions import DomainError, FamilyFormatError
from django_zpcover.validators import validate_prime

from .base import CoverSet, CoveringFamily

logger = logging.getLogger(__name__)

HEADER_PATTERN = re.compile(r"^p=(\d+) l=(\d+) n=(\d+) s=(\S+)$")


def format_family(family: CoveringFamily, comments: Iterable[str] = ()) -> str:
    claim = family.claimed_cover.to_spec() if family.claimed_cover is not None else "none"
    lines = [
        constants.ZPCF_HEADER,
        f"p={family.p} l={family.ell} n={family.size} s={claim}",
    ]
    lines.extend(f"# {comment}" for comment in comments)
    lines.extend(" ".join(str(int(x)) for x in row) for row in family.vectors)
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> CoveringFamily:
    """
    Parse zpcf text.

    Raises:
        FamilyFormatError: With the 1-based line number of the first problem
    """
    if not text.endswith("\n"):
        raise FamilyFormatError("missing trailing newline", line=text.count("\n") + 1)
    lines = text[:-1].split("\n")

    if lines[0] != constants.ZPCF_HEADER:
        raise FamilyFormatError(f"expected {constants.ZPCF_HEADER!r}", line=1)
    if len(lines) < 2:
        raise FamilyFormatError("missing parameter line", line=2)
    match = HEADER_PATTERN.match(lines[1])
    if not match:
        raise FamilyFormatError("expected 'p=<p> l=<ell> n=<N> s=<spec>'", line=2)
    p, ell, n = (int(group) for group in match.groups()[:3])
    if ell < 1 or n < 1:
        raise FamilyFormatError("l and n must be positive", line=2)
    try:
        validate_prime(p)
        claim = CoverSet.parse(match.group(4), p)
    except DomainError as exc:
        raise FamilyFormatError(str(exc), line=2) from exc

    rows: list[list[int]] = []
    seen: dict[tuple, int] = {}
    for number, line in enumerate(lines[2:], start=3):
        if line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != ell:
            raise FamilyFormatError(f"expected {ell} entries, found {len(tokens)}", line=number)
        try:
            row = [int(token) for token in tokens]
        except ValueError as exc:
            raise FamilyFormatError(f"non-integer entry ({exc})", line=number) from exc
        for entry in row:
            if not 0 <= entry < p:
                raise FamilyFormatError(f"entry {entry} is outside [0, {p - 1}]", line=number)
        key = tuple(row)
        if key in seen:
            raise FamilyFormatError(f"duplicate of the row on line {seen[key]}", line=number)
        seen[key] = number
        rows.append(row)

    if len(rows) != n:
        raise FamilyFormatError(f"header declares n={n} but {len(rows)} rows follow", line=len(lines))
    return CoveringFamily(p, rows, claimed_cover=claim)


def write_family(family: CoveringFamily, path: Union[str, Path], comments: Iterable[str] = ()) -> Path:
    path = Path(path)
    path.write_text(format_family(family, comments), encoding="ascii")
    logger.info(f"Wrote {family} to {path}")
    return path


def read_family(path: Union[str, Path]) -> CoveringFamily:
    """
    Raises:
        FamilyFormatError: On malformed content or non-ASCII bytes
        OSError: If the file cannot be read
    """
    data = Path(path).read_bytes()
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        line = data[: exc.start].count(b"\n") + 1
        raise FamilyFormatError("non-ASCII content", line=line) from exc
    return parse_family(text)
