"""Pumped word families: verdicts covering every pump count at once.

A family prefix.d^k.suffix (digits in LSD feed order) drives the machine
into an eventually periodic orbit as k grows; the verdict records the
preperiod, the period, and the output after the suffix for every pump-count
class, which settles the claim for infinitely many integers in one pass.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..dfao import Dfao
from .sync import word_digits


@dataclass(frozen=True)
class WordFamily:
    """LSD-first words prefix . pump^k . suffix for k >= 0."""

    prefix: tuple
    pump: int
    suffix: tuple

    @classmethod
    def make(cls, prefix, pump, suffix, radix=10):
        return cls(word_digits(prefix, radix), int(pump), word_digits(suffix, radix))

    def word(self, k: int) -> tuple:
        return self.prefix + (self.pump,) * k + self.suffix

    def value(self, k: int, radix: int) -> int:
        total = 0
        for d in reversed(self.word(k)):
            total = total * radix + d
        return total


@dataclass(frozen=True)
class FamilyVerdict:
    """Machine outputs for every pump count k.

    Outputs for k < preperiod are listed directly; for k >= preperiod the
    output depends only on (k - preperiod) mod period.
    """

    preperiod: int
    period: int
    head: tuple  # outputs for k < preperiod
    cycle: tuple  # outputs for k >= preperiod, indexed by (k - preperiod) % period

    def output_for(self, k: int) -> int:
        if k < self.preperiod:
            return self.head[k]
        return self.cycle[(k - self.preperiod) % self.period]

    def outputs(self) -> set:
        return set(self.head) | set(self.cycle)

    def residue_map(self) -> dict:
        """k mod period -> output, valid for k >= preperiod."""
        return {
            (self.preperiod + i) % self.period: self.cycle[i] for i in range(self.period)
        }

    def holds(self, predicate, stride: int = 1, offset: int = 0) -> bool:
        """Does predicate(output) hold for every k = offset + stride*t, t >= 0?

        Checking k up to preperiod + stride*period covers all pump counts by
        periodicity, so the verdict is exact for the whole infinite family.
        """
        k = offset
        bound = max(self.preperiod, offset) + stride * self.period
        while k <= bound:
            if not predicate(self.output_for(k)):
                return False
            k += stride
        return True

    def constant(self, value: int, stride: int = 1, offset: int = 0) -> bool:
        return self.holds(lambda o: o == value, stride, offset)


def family_eval(a: Dfao, fam: WordFamily, start: int | None = None) -> FamilyVerdict:
    """Outputs of a on every word prefix.pump^k.suffix, all k >= 0 at once.

    The state after the prefix and k pump digits is eventually periodic in k
    (preperiod + period <= number of states); the verdict tabulates the
    output after the suffix for one full preperiod plus one full period.
    """
    for d in fam.prefix + (fam.pump,) + fam.suffix:
        if not 0 <= d < a.radix:
            raise ValueError(f"family digit {d} outside base {a.radix}")
    q = a.initial if start is None else int(start)
    q = a.step_word(q, fam.prefix)
    seen = {q: 0}
    orbit = [q]
    while True:
        q = int(a.next[q, fam.pump])
        if q in seen:
            mu = seen[q]
            lam = len(orbit) - mu
            break
        seen[q] = len(orbit)
        orbit.append(q)
    outs = [int(a.out[a.step_word(s, fam.suffix)]) for s in orbit]
    return FamilyVerdict(
        preperiod=mu, period=lam, head=tuple(outs[:mu]), cycle=tuple(outs[mu:])
    )
