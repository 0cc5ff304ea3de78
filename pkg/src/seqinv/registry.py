"""Shared, cached construction of the standard machines and term blocks.

Budgets follow the synthesis design notes: 2^18 for the base-2 machines,
2^20 for base 3, 4e6 for base 5 (overridable through SEQINV_BUDGET).  The
base-5 budget cannot determine the deepest kernel levels, so that machine is
built with the comparison floor relaxed and carries its certification depth;
see the README for the consequences.
"""

from __future__ import annotations

import os
from functools import lru_cache

from . import sequences
from .dfao import Dfao, SynthesisOptions, power_alphabet, synthesize

DEFAULT_BUDGETS = {
    "c2": 1 << 18,
    "c3": 1 << 20,
    "c5": 4_000_000,
    "u": 1 << 18,
    "v": 1 << 18,
    "r": 1 << 16,
    "r1": 1 << 16,
    "r2": 1 << 16,
    "t2": 1 << 16,
    "t3": 1 << 16,
    "t5": 1 << 17,
}


_overrides: dict = {}


def set_budget_override(tag: str, value: int):
    """Config-file hook; must be called before the first machine build."""
    _overrides[tag] = int(value)


def budget(tag: str) -> int:
    if tag in _overrides:
        return _overrides[tag]
    if tag == "c5" and "SEQINV_BUDGET" in os.environ:
        return int(os.environ["SEQINV_BUDGET"])
    if tag in DEFAULT_BUDGETS:
        return DEFAULT_BUDGETS[tag]
    return 1 << 16


@lru_cache(maxsize=None)
def terms(tag: str, count: int) -> sequences.TermBlock:
    return sequences.terms(tag, count)


@lru_cache(maxsize=None)
def machine(tag: str) -> Dfao:
    """The minimal certified machine for a sequence tag ('c3', 'u', ...).

    Power-alphabet recodes use a trailing '_<j>': 'u_2' is the base-4 machine.
    """
    if "_" in tag:
        base, j = tag.rsplit("_", 1)
        return power_alphabet(machine(base), int(j))
    opts = SynthesisOptions()
    if tag == "c5":
        opts = SynthesisOptions(hard_floor=1)
    return synthesize(terms(tag, budget(tag)), _prime_of(tag), opts)


def _prime_of(tag: str) -> int:
    if tag in ("r", "r1", "r2", "u", "v"):
        return 2
    if tag[0] in "tcsw" and tag[1:].isdigit():
        return int(tag[1:])
    raise ValueError(f"unknown machine tag {tag!r}")
