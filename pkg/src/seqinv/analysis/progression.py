"""Machines for arithmetic subsequences n -> a(m*n + c), m a power of the base.

Built by composing the source machine with an LSD-first add-constant (or
borrow, for negative c) transducer and the digit shift for the power-of-base
multiplier.  The composed machine is complete and minimized; it computes
a(m*n + c) for every n with m*n + c >= 0 and is checked against direct
evaluation on a prefix at construction time.
"""

from __future__ import annotations

import numpy as np

from ..dfao import Dfao, minimize, relabel_kernel


class ProgressionError(ValueError):
    """Progression machine undefined for the requested parameters."""


def _constant_digits(value: int, radix: int) -> list:
    out = []
    while value:
        value, d = divmod(value, radix)
        out.append(d)
    return out


def progression_automaton(a: Dfao, m: int, c: int, check: int = 10_000) -> Dfao:
    """Machine computing n -> a(m*n + c); m must be a power of the alphabet.

    For c < 0 the machine is meaningful for n with m*n + c >= 0 (a pending
    borrow after the input runs out marks an undefined index; those states
    output 0 and callers must keep n above the defined floor).
    """
    r = a.radix
    j = 0
    mm = m
    while mm > 1 and mm % r == 0:
        mm //= r
        j += 1
    if mm != 1:
        raise ProgressionError(f"multiplier {m} is not a power of the base {r}")

    # m*n + c = m*(n + c_high) + c_low with 0 <= c_low < m: the j digits of
    # c_low are fixed and fed up front, then a transducer adds c_high to n.
    c_high = c // m
    start = a.initial
    low = c % m
    for _ in range(j):
        start = int(a.next[start, low % r])
        low //= r

    digits = _constant_digits(abs(c_high), r)
    sign = 1 if c_high >= 0 else -1
    ln = len(digits)

    def tail_output(q: int, t: int, carry: int) -> int:
        """Output once the input is exhausted in transducer state (q, t,
        carry): fold the remaining constant (plus carry/borrow) into a."""
        rem = carry
        scale = 1
        for i in range(t, ln):
            rem += digits[i] * scale
            scale *= r
        if sign < 0 and rem > 0:
            return 0  # m*n + c < 0: undefined index
        while rem:
            rem, d = divmod(rem, r)
            q = int(a.next[q, d])
        return int(a.out[q])

    index: dict = {}
    states: list = []  # (source state, position in constant digits, carry)
    trans: list = []
    outs: list = []

    def state_id(key):
        if key not in index:
            index[key] = len(states)
            states.append(key)
            trans.append([0] * r)
            outs.append(tail_output(*key))
        return index[key]

    init = state_id((start, 0, 0))
    pos = 0
    while pos < len(states):
        q, t, carry = states[pos]
        for x in range(r):
            ct = digits[t] if t < ln else 0
            if sign >= 0:
                s = x + ct + carry
                emit, carry2 = s % r, s // r
            else:
                s = x - ct - carry
                if s < 0:
                    emit, carry2 = s + r, 1
                else:
                    emit, carry2 = s, 0
            q2 = int(a.next[q, emit])
            trans[pos][x] = state_id((q2, min(t + 1, ln), carry2))
        pos += 1

    machine = Dfao(a.p, outs, trans, initial=init, radix=r, cert_depth=a.cert_depth)
    machine = relabel_kernel(minimize(machine))
    machine.cert_depth = a.cert_depth

    if check:
        n0 = 0 if c >= 0 else (-c + m - 1) // m
        ns = np.arange(n0, n0 + check, dtype=np.int64)
        got = machine.evaluate_block(ns)
        want = a.evaluate_block(m * ns + c)
        if not np.array_equal(got, want):
            bad = int(ns[np.nonzero(got != want)[0][0]])
            raise AssertionError(f"progression machine disagrees with source at n={bad}")
    return machine
