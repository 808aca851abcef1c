"""OEIS b-file access and term comparison.

A b-file is the plain-text term listing OEIS serves for each sequence:
one ``index value`` pair per line, ``#`` comment lines and blank lines
ignored.  This module parses that format, fetches files over HTTP with a
local cache, falls back to bundled fixtures when offline, and compares a
computed term list against the reference terms under a small index shift.
"""

from __future__ import annotations

import os
import re
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .errors import BFileParseError, FixtureMissingError, TransportError

__all__ = [
    "OeisMapping",
    "ComparisonResult",
    "PINNED_MAPPINGS",
    "parse_bfile",
    "cache_path",
    "fetch_bfile",
    "validate_oeis_id",
    "compare_terms",
    "compare_with_oeis",
    "mapping_for",
]

_ID_PATTERN = re.compile(r"\AA\d{6,7}\Z")
_BFILE_URL = "https://oeis.org/{id}/b{digits}.txt"

# comparison window: shifts tried when a mapping does not pin one
_SHIFT_RANGE = range(-5, 6)
_MIN_OVERLAP = 20


def validate_oeis_id(oeis_id: str) -> str:
    """Return the id unchanged if it looks like A000000..., else raise."""
    if not _ID_PATTERN.match(oeis_id):
        raise ValueError(f"not a valid OEIS id: {oeis_id!r}")
    return oeis_id


def parse_bfile(text: str) -> dict[int, int]:
    """Parse b-file text into an index -> value map.

    Lines starting with ``#`` and blank lines are skipped.  Anything else
    must be two integer fields; violations raise BFileParseError carrying
    the 1-based line number.
    """
    terms: dict[int, int] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileParseError(
                f"line {line_number}: expected 'index value', got {raw!r}",
                line_number=line_number,
            )
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileParseError(
                f"line {line_number}: non-integer field in {raw!r}",
                line_number=line_number,
            ) from None
        if index in terms:
            raise BFileParseError(
                f"line {line_number}: duplicate index {index}",
                line_number=line_number,
            )
        terms[index] = value
    return terms


def cache_path(oeis_id: str, cache_dir: Optional[str] = None) -> Path:
    """Resolve the on-disk cache location for a sequence's b-file."""
    if cache_dir is None:
        cache_dir = os.environ.get("BINSUM_CACHE_DIR")
    if cache_dir is None:
        cache_dir = os.path.join(os.path.expanduser("~"), ".cache", "binsum")
    return Path(cache_dir) / f"b{oeis_id[1:]}.txt"


def _fixture_text(oeis_id: str) -> str:
    name = f"b{oeis_id[1:]}.txt"
    ref = resources.files("binsum.fixtures") / name
    if not ref.is_file():
        raise FixtureMissingError(
            f"no bundled fixture for {oeis_id} (looked for fixtures/{name})"
        )
    return ref.read_text()


def fetch_bfile(
    oeis_id: str,
    max_terms: Optional[int] = None,
    *,
    offline: bool = False,
    cache_dir: Optional[str] = None,
    timeout: float = 10.0,
) -> list[tuple[int, int]]:
    """Return the sequence's reference terms as (index, value) pairs.

    Pairs come back sorted by index, truncated to max_terms when given.
    Offline mode reads the cache, then the bundled fixture; a miss on both
    raises FixtureMissingError.  Online mode fetches from oeis.org and
    writes the cache atomically; network failure raises TransportError.
    """
    validate_oeis_id(oeis_id)
    path = cache_path(oeis_id, cache_dir)

    if path.is_file():
        terms = parse_bfile(path.read_text())
    elif offline:
        terms = parse_bfile(_fixture_text(oeis_id))
    else:
        digits = oeis_id[1:]
        url = _BFILE_URL.format(id=oeis_id, digits=digits)
        try:
            with urllib.request.urlopen(url, timeout=timeout) as response:
                text = response.read().decode("utf-8")
        except (urllib.error.URLError, OSError, TimeoutError) as exc:
            raise TransportError(f"could not fetch {url}: {exc}") from exc
        terms = parse_bfile(text)  # validate before caching
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(text)
            os.replace(tmp_name, path)
        except OSError:
            os.unlink(tmp_name)
            raise

    pairs = sorted(terms.items())
    if max_terms is not None:
        pairs = pairs[:max_terms]
    return pairs


@dataclass(frozen=True)
class OeisMapping:
    """How one of our sequences lines up with an OEIS entry."""

    oeis_id: str
    family: str  # "a", "b", "c", or "gf-numerator"
    params: tuple
    offset_shift: Optional[int]  # pinned shift, or None to search
    note: str = ""


PINNED_MAPPINGS: tuple[OeisMapping, ...] = (
    OeisMapping("A027471", "a", (1, 2), 2, "n*3^(n-1) shifted; file starts at index 1 with a leading 0"),
    OeisMapping("A361609", "a", (2, 3), 0, ""),
    OeisMapping("A361610", "a", (3, 4), 0, ""),
    OeisMapping("A361608", "a", (5, 6), 0, ""),
)


@dataclass(frozen=True)
class ComparisonResult:
    oeis_id: str
    shift: Optional[int]
    overlap: int
    matched: bool
    first_divergence: Optional[tuple[int, int, int]]  # (our index, ours, theirs)

    def describe(self) -> str:
        if self.matched:
            return (
                f"{self.oeis_id}: match, shift {self.shift:+d}, "
                f"{self.overlap} terms compared"
            )
        if self.first_divergence is None:
            return f"{self.oeis_id}: no shift in [-5, 5] gives {_MIN_OVERLAP}+ matching terms"
        index, ours, theirs = self.first_divergence
        return (
            f"{self.oeis_id}: mismatch at our index {index}: "
            f"computed {ours}, reference {theirs}"
        )


def _try_shift(
    computed: Sequence[int], reference: dict[int, int], shift: int
) -> tuple[int, Optional[tuple[int, int, int]]]:
    """Count overlapping agreements under computed[i] == reference[i + shift]."""
    overlap = 0
    for i, ours in enumerate(computed):
        theirs = reference.get(i + shift)
        if theirs is None:
            continue
        if ours != theirs:
            return overlap, (i, ours, theirs)
        overlap += 1
    return overlap, None


def compare_terms(
    computed: Sequence[int],
    reference: dict[int, int],
    oeis_id: str,
    *,
    pinned_shift: Optional[int] = None,
) -> ComparisonResult:
    """Match computed terms against reference terms, possibly searching shifts."""
    shifts = [pinned_shift] if pinned_shift is not None else list(_SHIFT_RANGE)
    best: Optional[ComparisonResult] = None
    for shift in shifts:
        overlap, divergence = _try_shift(computed, reference, shift)
        if divergence is None and overlap >= _MIN_OVERLAP:
            return ComparisonResult(oeis_id, shift, overlap, True, None)
        candidate = ComparisonResult(oeis_id, shift, overlap, False, divergence)
        if best is None or overlap > best.overlap:
            best = candidate
    assert best is not None
    if pinned_shift is None and best.first_divergence is None:
        # every shift ran out of overlap rather than disagreeing
        return ComparisonResult(oeis_id, None, best.overlap, False, None)
    return best


def compare_with_oeis(
    mapping: OeisMapping,
    computed: Sequence[int],
    *,
    offline: bool = False,
    cache_dir: Optional[str] = None,
) -> ComparisonResult:
    """Check computed terms against the mapping's OEIS entry.

    A mapping with offset_shift None asks for auto-resolution over the
    shift window; a pinned shift is used as-is.
    """
    pairs = fetch_bfile(mapping.oeis_id, offline=offline, cache_dir=cache_dir)
    return compare_terms(
        computed, dict(pairs), mapping.oeis_id, pinned_shift=mapping.offset_shift
    )


def mapping_for(oeis_id: str) -> Optional[OeisMapping]:
    for mapping in PINNED_MAPPINGS:
        if mapping.oeis_id == oeis_id:
            return mapping
    return None
