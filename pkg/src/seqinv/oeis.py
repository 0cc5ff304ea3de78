"""OEIS b-file parsing and comparison against term blocks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .sequences import TermBlock


class BFileError(ValueError):
    """Malformed b-file."""


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: (index, value) pairs, contiguous from the first index."""

    entries: tuple
    source: str = ""

    @property
    def first_index(self) -> int:
        return self.entries[0][0] if self.entries else 0

    def __len__(self) -> int:
        return len(self.entries)


def parse_bfile(text: str, source: str = "") -> BFile:
    """Parse 'index value' lines; '#' comments allowed; gaps are errors."""
    entries = []
    expected = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"{source or 'b-file'}:{lineno}: malformed line {raw!r}")
        try:
            n, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"{source or 'b-file'}:{lineno}: non-integer field in {raw!r}")
        if expected is not None and n != expected:
            raise BFileError(
                f"{source or 'b-file'}:{lineno}: gap at index {expected} (got {n})"
            )
        entries.append((n, value))
        expected = n + 1
    return BFile(tuple(entries), source)


@dataclass(frozen=True)
class OeisVerdict:
    compared: int  # number of overlapping indices compared
    first_mismatch: int | None  # index of first disagreement, None if none

    @property
    def agrees(self) -> bool:
        return self.first_mismatch is None and self.compared > 0


def compare_oeis(b: BFile, t: TermBlock) -> OeisVerdict:
    """Compare the b-file against a term block on their overlapping range."""
    if not b.entries:
        return OeisVerdict(0, None)
    idx = np.array([n for n, _ in b.entries], dtype=np.int64)
    val = np.array([v for _, v in b.entries], dtype=np.int64)
    keep = idx < t.count
    idx, val = idx[keep], val[keep]
    if len(idx) == 0:
        return OeisVerdict(0, None)
    ours = t.values[idx]
    diff = np.nonzero(ours != val)[0]
    if len(diff):
        return OeisVerdict(len(idx), int(idx[diff[0]]))
    return OeisVerdict(len(idx), None)


def fetch_bfile(a_number: str, timeout: float = 30.0) -> str:
    """Download a b-file from oeis.org (network required; tests never call this)."""
    import urllib.request

    aid = a_number.upper().lstrip("A")
    url = f"https://oeis.org/A{aid}/b{aid}.txt"
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        return resp.read().decode("utf-8")
