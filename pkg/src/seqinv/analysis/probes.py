"""Finite-range probes of the three general-p conjectures.

Probes report; they never assert.  Conjecture 1 predicts c(p)[p*n+i] = 0 for
p > 3 and i in the consecutive range (p+1)/2 .. p-2 (the reading consistent
with p = 5 giving exactly {3}).  Conjecture 2 bounds letter runs by (p+3)/2.
Conjecture 3 predicts the synchronizing 4-level shape; it is only testable
when a machine fits the synthesis budget.
"""

from __future__ import annotations

from .. import sequences
from ..dfao import SynthesisError, SynthesisOptions, synthesize
from ..fieldcore import as_prime
from .counting import max_runs
from .structure import structure_report
from .sync import is_synchronizing


def conjecture1_offsets(p: int) -> list:
    return list(range((p + 1) // 2, p - 1))


def probe_conjectures(
    p,
    n_check: int = 100_000,
    run_scan: int = 1_000_000,
    synth_budget: int | None = 1 << 21,
) -> dict:
    """Check the conjectures for one prime over finite ranges; returns a report."""
    p = as_prime(p)
    report: dict = {"p": p}
    need = max(run_scan, p * n_check + p)
    terms = sequences.c_terms(p, need)
    vals = terms.values

    if p > 3:
        offsets = conjecture1_offsets(p)
        zero_offsets = {}
        for i in offsets:
            block = vals[i::p][:n_check]
            nz = (block != 0).nonzero()[0]
            zero_offsets[i] = None if len(nz) == 0 else int(nz[0] * p + i)
        report["conjecture1"] = {
            "offsets": offsets,
            "checked_n": n_check,
            "counterexamples": {i: ce for i, ce in zero_offsets.items() if ce is not None},
            "holds_in_range": all(ce is None for ce in zero_offsets.values()),
        }
    else:
        report["conjecture1"] = {"offsets": [], "note": "conjecture applies to p > 3"}

    runs = max_runs(vals[:run_scan])
    bound = (p + 3) // 2 if p > 3 else None
    letters = {letter: runs.max_run(letter) for letter in range(1, p)}
    report["conjecture2"] = {
        "scanned_n": run_scan,
        "max_run_per_letter": letters,
        "bound": bound,
        "within_bound": None if bound is None else all(v <= bound for v in letters.values()),
    }

    conj3: dict = {}
    if synth_budget:
        try:
            machine = synthesize(
                terms.values[: min(len(vals), synth_budget)],
                p,
                SynthesisOptions(term_budget=synth_budget),
            )
            rep = structure_report(machine)
            sizes = rep.sizes()
            cycles = [c for c in rep.components if c.kind == "cycle"]
            conj3 = {
                "states": machine.n_states,
                "cert_depth": machine.cert_depth,
                "synchronizing": is_synchronizing(machine).synchronizing,
                "component_sizes": sizes,
                "p_cycles": sorted(c.size for c in cycles),
                "has_absorbing_sink": bool(rep.sinks),
                "matches_template": (
                    bool(rep.sinks)
                    and sorted(c.size for c in cycles).count(p) >= 2
                    and rep.components[rep.initial_component].size == 1
                ),
            }
        except SynthesisError as exc:
            conj3 = {"synthesized": False, "reason": str(exc)}
    else:
        conj3 = {"synthesized": False, "reason": "synthesis disabled"}
    report["conjecture3"] = conj3
    return report
