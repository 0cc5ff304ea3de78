"""Synchronizing words: uniform reachability, the exact pair-merge test,
and exhaustive shortest-word search.

Words are digit tuples in feed order (least significant digit first), the
same order the machines consume.  `word_digits("12")` is the word that feeds
1 then 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..dfao import Dfao

# shortest_sync_words materializes radix^len x n_states state slots per level
_SEARCH_CAP = 50_000_000


def word_digits(word, radix: int = 10) -> tuple:
    """Normalize a word given as digit string or iterable of ints."""
    if isinstance(word, str):
        digits = tuple(int(ch) for ch in word)
    else:
        digits = tuple(int(d) for d in word)
    if any(not 0 <= d < radix for d in digits):
        raise ValueError(f"word {word!r} has digits outside base {radix}")
    return digits


def uniform_reach(a: Dfao, word) -> list:
    """{delta*(q, word) : q in Q}, over ALL states, reachable or not."""
    word = word_digits(word, a.radix)
    s = np.arange(a.n_states, dtype=np.int64)
    for d in word:
        s = a.next[s, d]
    return sorted(set(int(q) for q in s))


@dataclass(frozen=True)
class SyncResult:
    synchronizing: bool
    word: tuple | None = None  # a (not necessarily shortest) synchronizing word
    witness_pair: tuple | None = None  # two states that never merge


def _pair_reach(a: Dfao) -> np.ndarray:
    """Boolean table over ordered state pairs: can this pair be merged?"""
    n = a.n_states
    reached = np.zeros(n * n, dtype=bool)
    reached[:: n + 1] = True  # diagonal
    pairmaps = []
    for d in range(a.radix):
        t = a.next[:, d].astype(np.int64)
        pairmaps.append((t[:, None] * n + t[None, :]).ravel())
    while True:
        new = reached.copy()
        for pm in pairmaps:
            new |= reached[pm]
        if np.array_equal(new, reached):
            return reached
        reached = new


def _merge_word(a: Dfao, q1: int, q2: int) -> tuple:
    """Shortest word sending the pair {q1, q2} to a single state (BFS)."""
    if q1 == q2:
        return ()
    start = (min(q1, q2), max(q1, q2))
    prev = {start: None}
    queue = [start]
    pos = 0
    while pos < len(queue):
        pair = queue[pos]
        pos += 1
        for d in range(a.radix):
            nxt = (int(a.next[pair[0], d]), int(a.next[pair[1], d]))
            key = (min(nxt), max(nxt))
            if nxt[0] == nxt[1]:
                word = [d]
                back = pair
                while prev[back] is not None:
                    back, dd = prev[back]
                    word.append(dd)
                return tuple(reversed(word))
            if key not in prev:
                prev[key] = (pair, d)
                queue.append(key)
    raise ValueError(f"states {q1}, {q2} never merge")


def is_synchronizing(a: Dfao) -> SyncResult:
    """Exact pair-merge test with a certificate either way.

    Synchronizing iff every pair of states admits a merging word; the
    returned word (greedy pair collapsing) synchronizes the whole machine but
    need not be shortest.
    """
    n = a.n_states
    if n <= 1:
        return SyncResult(True, word=())
    reached = _pair_reach(a)
    if not reached.all():
        bad = int(np.nonzero(~reached)[0][0])
        return SyncResult(False, witness_pair=(bad // n, bad % n))
    word: list = []
    current = np.arange(n, dtype=np.int64)
    while len(set(current.tolist())) > 1:
        alive = sorted(set(current.tolist()))
        piece = _merge_word(a, alive[0], alive[1])
        word.extend(piece)
        for d in piece:
            current = a.next[current, d]
    return SyncResult(True, word=tuple(word))


def shortest_sync_words(a: Dfao, max_len: int = 6) -> list:
    """All synchronizing words of the minimal length <= max_len (exhaustive).

    Returns [] when no word of length <= max_len synchronizes.  Subset-BFS is
    infeasible for thousands of states, but the machines under study
    synchronize within length 3, so exhaustive enumeration is cheap.
    """
    n = a.n_states
    if n == 0:
        return []
    mat = np.arange(n, dtype=np.int32)[None, :]  # rows: states after each word
    for length in range(1, max_len + 1):
        rows = mat.shape[0] * a.radix
        if rows * n > _SEARCH_CAP:
            raise RuntimeError(
                f"sync word search at length {length} needs {rows * n} state slots"
            )
        new = np.empty((mat.shape[0], a.radix, n), dtype=np.int32)
        for d in range(a.radix):
            new[:, d, :] = a.next[mat, d]
        mat = new.reshape(rows, n)
        hits = np.nonzero((mat == mat[:, :1]).all(axis=1))[0]
        if len(hits):
            words = []
            for idx in hits:
                digits = []
                i = int(idx)
                for _ in range(length):
                    digits.append(i % a.radix)
                    i //= a.radix
                words.append(tuple(reversed(digits)))
            return sorted(words)
    return []
