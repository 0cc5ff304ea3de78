"""Exact letter counting by digit DP, and run-length statistics.

The DP walks the machine over all length-L digit strings (L = digit length
of the bound) while tracking whether the number built so far is below the
bound; zero-padding invariance of the machines makes the padded walk agree
with canonical evaluation.  Counters are plain Python integers, since counts
exceed 2^64 at the probed ranges.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..dfao import Dfao


def _letterset(a: Dfao, letters) -> set:
    if letters == "nonzero":
        return {v for v in range(a.p) if v != 0}
    if np.isscalar(letters):
        return {int(letters)}
    return {int(x) for x in letters}


def count_letter(a: Dfao, letters, bound: int) -> int:
    """|{n < bound : a(n) in letters}| exactly; letters may be 'nonzero'."""
    want = _letterset(a, letters)
    if bound <= 0:
        return 0
    digits = []
    b = bound
    while b:
        b, d = divmod(b, a.radix)
        digits.append(d)
    L = len(digits)
    # counts[(state, strictly_below)] over prefixes of the padded digit string
    counts = {(a.initial, 2): 1}  # 2 = equal-so-far, 1 = below, 0 = above
    for pos in range(L):
        nd = digits[pos]
        nxt: dict = {}
        for (q, st), cnt in counts.items():
            for d in range(a.radix):
                if d < nd:
                    st2 = 1
                elif d > nd:
                    st2 = 0
                else:
                    st2 = st
                key = (int(a.next[q, d]), st2)
                nxt[key] = nxt.get(key, 0) + cnt
        counts = nxt
    return sum(cnt for (q, st), cnt in counts.items() if st == 1 and int(a.out[q]) in want)


def count_letter_bruteforce(a: Dfao, letters, bound: int) -> int:
    """Direct evaluation of every n < bound; the oracle for count_letter."""
    want = _letterset(a, letters)
    outs = a.evaluate_block(np.arange(bound))
    return int(np.isin(outs, sorted(want)).sum())


@dataclass(frozen=True)
class RunStats:
    """Maximal runs of equal letters in a finite block."""

    per_letter: dict  # letter -> (max run length, first position attaining it)
    nonzero: tuple  # (max run of consecutive nonzero terms, first position)

    def max_run(self, letter: int) -> int:
        return self.per_letter.get(letter, (0, None))[0]


def _runs(values: np.ndarray):
    """(start, length, letter) triples of the maximal constant runs."""
    n = len(values)
    if n == 0:
        return
    change = np.nonzero(np.diff(values))[0]
    starts = np.concatenate([[0], change + 1])
    ends = np.concatenate([change + 1, [n]])
    for s, e in zip(starts, ends):
        yield int(s), int(e - s), int(values[s])


def max_runs(values) -> RunStats:
    """Per-letter maximal run lengths (with first attainment position) and
    the maximal run of consecutive nonzero terms."""
    values = np.asarray(getattr(values, "values", values), dtype=np.int64)
    per: dict = {}
    for start, length, letter in _runs(values):
        best = per.get(letter)
        if best is None or length > best[0]:
            per[letter] = (length, start)
    nz_best = (0, None)
    for start, length, letter in _runs((values != 0).astype(np.int64)):
        if letter == 1 and length > nz_best[0]:
            nz_best = (length, start)
    return RunStats(per_letter=per, nonzero=nz_best)
