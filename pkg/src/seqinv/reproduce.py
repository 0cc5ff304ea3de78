"""The acceptance suite: every quantitative claim as a runnable check.

Each criterion yields CheckResults with status PASS, FAIL or REPORT
(REPORT lines carry evidence but are not pass/fail findings: conjecture
probes and documented soft-target reconciliations).  `run_all` prints one
line per check and returns the results; the CLI maps any FAIL to a nonzero
exit code.

Three checks about the base-5 machine (state count 2236, length-2
synchronizing words, the 2224-state component) are expected to FAIL at the
default 4e6-term budget: that budget provably underdetermines the deep
kernel levels, so the synthesized machine is only certified below its term
budget.  The failure lines carry the certification evidence.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import catalog, registry, sequences
from .analysis import (
    WordFamily,
    brute_force_statement,
    count_letter,
    family_eval,
    is_synchronizing,
    max_runs,
    probe_conjectures,
    shortest_sync_words,
    structure_report,
    transition_bipartite,
    uniform_reach,
    verify_statement,
    walnut1a_text,
    walnut1b_text,
    walnut2_text,
)
from .dfao import verify
from .oeis import compare_oeis, parse_bfile
from .series import PowerSeries, compose, residual


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    status: str  # PASS / FAIL / REPORT
    detail: str = ""


def _check(criterion, name, ok, detail=""):
    return CheckResult(criterion, name, "PASS" if ok else "FAIL", detail)


def _lsd(msd: str) -> tuple:
    return tuple(int(ch) for ch in reversed(msd))


# -- criterion 1: cross-oracle coefficients ---------------------------------


def criterion_1():
    out = []
    t0 = time.time()
    n = 5000
    s_rec, _ = sequences.sw_terms(3, n + 1)
    s_new = catalog.entry("s3").root(n)
    out.append(
        _check(1, "s3: recurrence vs Newton (5000 terms)",
               np.array_equal(s_rec.values[:n], s_new.coeffs))
    )
    for p in (3, 5):
        rec = sequences.c_terms(p, n, method="recurrence")
        new = registry.terms(f"c{p}", registry.budget(f"c{p}")).values[:n]
        out.append(
            _check(1, f"c{p}: recurrence vs Newton (5000 terms)",
                   np.array_equal(rec.values, new))
        )
    for tag in ("u", "v"):
        ref = sequences.inverse_terms(tag, n, method="reference-inverse")
        new = sequences.inverse_terms(tag, n, method="newton")
        out.append(
            _check(1, f"{tag}: reference inversion vs Newton (5000 terms)",
                   np.array_equal(ref.values, new.values))
        )
    elapsed = time.time() - t0
    out.append(_check(1, "criterion 1 runtime < 10 s", elapsed < 10, f"{elapsed:.1f}s"))
    return out


# -- criterion 2: residuals --------------------------------------------------


def criterion_2():
    out = []
    t0 = time.time()
    order = 4096
    pairs = ["f2", "f3", "f5", "s2", "s3", "s5", "r", "u", "v"]
    for tag in pairs:
        e = catalog.entry(tag)
        root = e.root(order)
        res = residual(e.equation, root)
        out.append(
            _check(2, f"equation for {tag}: residual vanishes mod X^{order}", res.is_zero())
        )
    elapsed = time.time() - t0
    out.append(_check(2, "criterion 2 runtime < 10 s", elapsed < 10, f"{elapsed:.1f}s"))
    return out


# -- criterion 3: compositional identities -----------------------------------


def criterion_3():
    out = []
    n = 2000
    for p in (2, 3, 5):
        f = sequences.thue_terms(p, n).series()
        c = sequences.c_terms(p, n).series()
        x = PowerSeries.x(p, n)
        out.append(_check(3, f"F_{p} o C_{p} = X mod X^{n}", compose(f, c) == x))
        out.append(_check(3, f"C_{p} o F_{p} = X mod X^{n}", compose(c, f) == x))
    r1 = sequences.rudin_terms("r'", n).series()
    u = sequences.inverse_terms("u", n).series()
    out.append(_check(3, f"R1 o U = X mod X^{n}", compose(r1, u) == PowerSeries.x(2, n)))
    r2 = sequences.rudin_terms("r''", n).series()
    v = sequences.inverse_terms("v", n).series()
    out.append(_check(3, f"R2 o V = X mod X^{n}", compose(r2, v) == PowerSeries.x(2, n)))
    return out


# -- criterion 4: hard state counts ------------------------------------------


def criterion_4():
    out = []
    expectations = [("c2", 8), ("c3", 28)]
    for tag, want in expectations:
        m = registry.machine(tag)
        out.append(
            _check(4, f"{tag} machine has {want} states", m.n_states == want,
                   f"got {m.n_states}")
        )
        mism = verify(m, registry.terms(tag, registry.budget(tag)), 100_000)
        out.append(
            _check(4, f"{tag} machine verified vs oracle below 1e5", mism is None,
                   f"first mismatch {mism}" if mism is not None else "")
        )
    m24 = registry.machine("c2_2")
    out.append(
        _check(4, "c2 base-4 recode has 5 states", m24.n_states == 5, f"got {m24.n_states}")
    )

    t0 = time.time()
    c5_terms = registry.terms("c5", registry.budget("c5"))
    a5 = registry.machine("c5")
    elapsed = time.time() - t0
    out.append(
        _check(4, "c5 machine has 2236 states", a5.n_states == 2236,
               f"got {a5.n_states}: the 4e6-term budget underdetermines the deep kernel "
               f"levels (machine certified to its budget only; see decisions ledger)")
    )
    mism = verify(a5, c5_terms, 100_000)
    out.append(
        _check(4, "c5 machine verified vs oracle below 1e5", mism is None,
               f"first mismatch {mism}" if mism is not None else "")
    )
    full = verify(a5, c5_terms, c5_terms.count)
    out.append(
        CheckResult(4, "c5 machine certification evidence", "REPORT",
                    f"{a5.n_states} states, agrees with oracle on all "
                    f"{c5_terms.count} supplied terms (full-budget check: "
                    f"{'clean' if full is None else f'mismatch at {full}'})")
    )
    out.append(
        _check(4, "c5 synthesis (terms + closure) within 5 min", elapsed < 300,
               f"{elapsed:.0f}s at 4e6-term budget")
    )
    return out


# -- criterion 5: soft state counts ------------------------------------------


def criterion_5():
    out = []
    for tag, want in (("u", 23), ("v", 33), ("u_2", 12)):
        m = registry.machine(tag)
        if m.n_states == want:
            out.append(_check(5, f"{tag} machine has {want} states", True))
        else:
            out.append(
                CheckResult(5, f"{tag} machine state count", "REPORT",
                            f"expected {want} (documented as a soft target), got "
                            f"{m.n_states}; certified to {m.cert_depth} terms")
            )
    return out


# -- criterion 6: synchronization --------------------------------------------


def criterion_6():
    out = []
    a3 = registry.machine("c3")
    words3 = shortest_sync_words(a3, 4)
    out.append(
        _check(6, 'A_3 shortest sync words exactly {"12"}', words3 == [(1, 2)],
               f"got {words3}")
    )
    a2 = registry.machine("c2")
    words2 = shortest_sync_words(a2, 4)
    out.append(
        _check(6, 'A_2 shortest sync word exactly {"011"}', words2 == [(0, 1, 1)],
               f"got {words2}")
    )
    au4 = registry.machine("u_2")
    words_u4 = shortest_sync_words(au4, 4)
    out.append(
        _check(6, 'base-4 u machine shortest sync word exactly {"33"}',
               words_u4 == [(3, 3)], f"got {words_u4}")
    )

    a5 = registry.machine("c5")
    words5 = shortest_sync_words(a5, 4)
    want5 = [(1, 4), (2, 4), (3, 3), (3, 4), (4, 3)]
    sink5 = a5.state_for_label(1, 3)
    all_to_sink = all(uniform_reach(a5, w) == [sink5] for w in want5)
    out.append(
        _check(6, "A_5 shortest sync words exactly {14,24,33,34,43} onto the sink",
               words5 == want5 and all_to_sink,
               f"got {words5}; the synthesized machine is certified only to its "
               f"4e6-term budget (see decisions ledger)")
    )

    for tag in ("u", "v"):
        res = is_synchronizing(registry.machine(tag))
        out.append(
            _check(6, f"A_{tag.upper()} not synchronizing, with unmergeable pair",
                   not res.synchronizing and res.witness_pair is not None,
                   f"pair {res.witness_pair}")
        )
    res3 = is_synchronizing(a3)
    out.append(
        _check(6, "A_3 synchronizing with certificate word",
               res3.synchronizing and len(uniform_reach(a3, res3.word)) == 1)
    )
    return out


# -- criterion 7: structure ---------------------------------------------------


def criterion_7():
    out = []
    a3 = registry.machine("c3")
    rep3 = structure_report(a3)
    sink_outputs3 = [int(a3.out[rep3.components[i].states[0]]) for i in rep3.sinks]
    out.append(
        _check(7, "A_3 has an absorbing sink with output 0 (c[9n+7] = 0)",
               sink_outputs3 == [0],
               f"sink outputs {sink_outputs3}")
    )
    a5 = registry.machine("c5")
    rep5 = structure_report(a5)
    sink_outputs5 = [int(a5.out[rep5.components[i].states[0]]) for i in rep5.sinks]
    out.append(
        _check(7, "A_5 has an absorbing sink with output 0 (d[5n+3] = 0)",
               sink_outputs5 == [0], f"sink outputs {sink_outputs5}")
    )
    sizes = rep5.sizes()
    cycles = sorted(c.size for c in rep5.components if c.kind == "cycle")
    template = (
        rep5.components[rep5.initial_component].size == 1
        and cycles.count(5) == 2
        and 2224 in sizes
        and len(rep5.sinks) == 1
    )
    out.append(
        _check(7, "A_5 condensation = initial / two 5-cycles / 2224 states / sink",
               template,
               f"got component sizes {sizes}; deep-kernel transitions beyond the "
               f"4e6-term budget are unresolved (see decisions ledger)")
    )
    bp = transition_bipartite(registry.machine("u"))
    out.append(
        _check(7, "A_U transition-bipartite", bp is not None,
               f"sides {None if bp is None else (len(bp[0]), len(bp[1]))}")
    )
    return out


# -- criterion 8: progression lemmas ------------------------------------------


def criterion_8():
    out = []
    a3 = registry.machine("c3")
    av = registry.machine("v")
    c3 = registry.terms("c3", registry.budget("c3"))
    v = registry.terms("v", registry.budget("v"))
    cases = [
        ("one of c[9n-1..9n+6] vanishes", walnut1a_text(), {"c3": a3}, {"c3": c3}),
        ("five equal consecutive c-terms force 0", walnut1b_text(), {"c3": a3}, {"c3": c3}),
        ("one of v[4n+2..4n+5] vanishes", walnut2_text(), {"v": av}, {"v": v}),
    ]
    for name, text, machines, oracles in cases:
        vm = verify_statement(text, machines)
        vb = brute_force_statement(text, oracles, 10_000)
        out.append(
            _check(8, f"{name}: product machine", vm.holds,
                   f"counterexample {vm.counterexample}" if not vm.holds else
                   f"{vm.product_states} product states")
        )
        out.append(_check(8, f"{name}: brute force below 1e4", vb.holds))
    return out


# -- criterion 9: run lengths --------------------------------------------------


def criterion_9():
    out = []
    n = 1_000_000

    c3 = registry.terms("c3", registry.budget("c3")).values[:n]
    rs = max_runs(c3)
    out.append(_check(9, "c3 max run of 1s = 4", rs.max_run(1) == 4, f"got {rs.max_run(1)}"))
    out.append(_check(9, "c3 max run of 2s = 4", rs.max_run(2) == 4, f"got {rs.max_run(2)}"))
    out.append(_check(9, "c3 max nonzero run = 7", rs.nonzero[0] == 7, f"got {rs.nonzero[0]}"))

    c5 = registry.terms("c5", registry.budget("c5")).values[:n]
    rs5 = max_runs(c5)
    for letter in (1, 2, 3, 4):
        out.append(
            _check(9, f"c5 max run of {letter}s = 4", rs5.max_run(letter) == 4,
                   f"got {rs5.max_run(letter)}")
        )

    t3 = sequences.thue_terms(3, n)
    rst = max_runs(t3.values)
    out.append(
        _check(9, "t3 max letter run = 2",
               max(rst.max_run(k) for k in range(3)) == 2)
    )
    out.append(_check(9, "t3 max nonzero run = 4", rst.nonzero[0] == 4))

    r = sequences.rudin_terms("r", n)
    rsr = max_runs(r.values)
    out.append(
        _check(9, "r max runs (0s and 1s) = 4",
               rsr.max_run(0) == 4 and rsr.max_run(1) == 4)
    )

    v = sequences.inverse_terms("v", n)
    rsv = max_runs(v.values)
    out.append(_check(9, "v max run of 1s = 6", rsv.max_run(1) == 6, f"got {rsv.max_run(1)}"))
    return out


# -- criterion 10: witness families --------------------------------------------


def _family_suite_a3():
    """(family, expected predicate, pump stride, pump offset, label) on A_3."""
    suite = []
    # g_n = 4*3^(n+2)+1, base-3 numeral 11 0^(n+1) 1, four offsets, letter 1
    g = [
        (WordFamily((1,), 0, (1, 1)), 1, 1),
        (WordFamily((2,), 0, (1, 1)), 1, 1),
        (WordFamily((0, 1), 0, (1, 1)), 1, 0),
        (WordFamily((1, 1), 0, (1, 1)), 1, 0),
    ]
    for i, (fam, stride, off) in enumerate(g):
        suite.append((fam, 1, stride, off, f"g_n + {i} gives letter 1"))
    # h_n = 166*3^(n+2)+1, numeral 20011 0^(n+1) 1, letter 2
    h = [
        (WordFamily((1,), 0, _lsd("20011")), 1, 1),
        (WordFamily((2,), 0, _lsd("20011")), 1, 1),
        (WordFamily((0, 1), 0, _lsd("20011")), 1, 0),
        (WordFamily((1, 1), 0, _lsd("20011")), 1, 0),
    ]
    for i, (fam, stride, off) in enumerate(h):
        suite.append((fam, 2, stride, off, f"h_n + {i} gives letter 2"))
    return suite


def criterion_10():
    out = []
    a3 = registry.machine("c3")

    # value sanity for the hand-derived digit families
    fam_g0 = WordFamily((1,), 0, (1, 1))
    assert all(fam_g0.value(n + 1, 3) == 4 * 3 ** (n + 2) + 1 for n in range(5))
    fam_h0 = WordFamily((1,), 0, _lsd("20011"))
    assert all(fam_h0.value(n + 1, 3) == 166 * 3 ** (n + 2) + 1 for n in range(5))

    for fam, letter, stride, off, label in _family_suite_a3():
        verdict = family_eval(a3, fam)
        out.append(
            _check(10, f"A_3 family {label} for all n", verdict.constant(letter, stride, off))
        )

    # 4*3^(n+2)+i nonzero for i = 0..6 (numeral 11 0^n d1 d0)
    for i in range(7):
        d1, d0 = divmod(i, 3)
        fam = WordFamily((d0, d1), 0, (1, 1))
        assert all(fam.value(n, 3) == 4 * 3 ** (n + 2) + i for n in range(4))
        verdict = family_eval(a3, fam)
        out.append(
            _check(10, f"A_3 family 4*3^(n+2)+{i} is nonzero for all n",
                   verdict.holds(lambda v: v != 0))
        )

    # base-5 witness families for four consecutive equal letters
    a5 = registry.machine("c5")
    heads = {1: "100", 2: "31", 3: "210", 4: "3021"}
    for i, head in heads.items():
        fams = [
            (WordFamily(_lsd("44"), 2, _lsd(head)), 1),
            (WordFamily(_lsd("300"), 2, _lsd(head)), 0),
            (WordFamily(_lsd("301"), 2, _lsd(head)), 0),
            (WordFamily(_lsd("302"), 2, _lsd(head)), 0),
        ]
        base_val = fams[0][0].value(1, 5)
        for j, (fam, off) in enumerate(fams):
            assert fam.value(off, 5) == base_val + j
        ok = all(
            family_eval(a5, fam).constant(i, 1, off) for fam, off in fams
        )
        out.append(_check(10, f"A_5 family k_n^({i}) gives four consecutive {i}s", ok))

    # u: uniform zero/one runs 79*2^k and 47*2^k (words in feed order)
    au = registry.machine("u")
    reach0 = uniform_reach(au, (1, 1, 1, 1, 0, 0, 1))
    out.append(
        _check(10, "u: all states reach output-0 states under LSD(79)",
               len(reach0) <= 2 and {int(au.out[q]) for q in reach0} == {0})
    )
    reach1 = uniform_reach(au, (1, 1, 1, 1, 0, 1))
    out.append(
        _check(10, "u: all states reach output-1 states under LSD(47)",
               {int(au.out[q]) for q in reach1} == {1})
    )

    # v: zero runs at 53*2^k
    av = registry.machine("v")
    reachv = uniform_reach(av, (1, 0, 1, 0, 1, 1))
    out.append(
        _check(10, "v: all states reach output-0 states under LSD(53)",
               {int(av.out[q]) for q in reachv} == {0})
    )

    # 3*4^(n+3)+11 starts six consecutive 1s in v; the numeral of value+j is
    # 11 0^(2n+2) 1011 ... 1111 (j <= 4), carrying into 11 0^(2n+1) 10000 at +5
    sixes = [
        (WordFamily(_lsd("1011"), 0, (1, 1)), 2),
        (WordFamily(_lsd("1100"), 0, (1, 1)), 2),
        (WordFamily(_lsd("1101"), 0, (1, 1)), 2),
        (WordFamily(_lsd("1110"), 0, (1, 1)), 2),
        (WordFamily(_lsd("1111"), 0, (1, 1)), 2),
        (WordFamily(_lsd("10000"), 0, (1, 1)), 1),
    ]
    vals_ok = all(
        sixes[j][0].value(sixes[j][1] + 2 * n, 2) == 3 * 4 ** (n + 3) + 11 + j
        for n in range(4)
        for j in range(6)
    )
    ok = vals_ok and all(
        family_eval(av, fam).constant(1, 2, off) for fam, off in sixes
    )
    out.append(_check(10, "v family 3*4^(n+3)+11 gives six consecutive 1s", ok))

    # r: p_n = 3*4^(n+2)-1 gives 0000, q_n = 2*4^(n+1)-1 gives 1111
    ar = registry.machine("r")
    p_fams = [
        (WordFamily((), 1, (0, 1)), 4),      # p_n      = 1^(2n+4) then 01
        (WordFamily((), 0, (1, 1)), 4),      # p_n + 1  = 0^(2n+4) then 11
        (WordFamily((1,), 0, (1, 1)), 3),    # p_n + 2
        (WordFamily((0, 1), 0, (1, 1)), 2),  # p_n + 3
    ]
    vals_ok = all(
        p_fams[j][0].value(p_fams[j][1] + 2 * n, 2) == 3 * 4 ** (n + 2) - 1 + j
        for n in range(4)
        for j in range(4)
    )
    ok = vals_ok and all(
        family_eval(ar, fam).constant(0, 2, off) for fam, off in p_fams
    )
    out.append(_check(10, "r family p_n = 3*4^(n+2)-1 gives four 0s", ok))

    q_fams = [
        (WordFamily((), 1, ()), 3),      # q_n = 1^(2n+3)
        (WordFamily((), 0, (1,)), 3),    # +1 = 2^(2n+3)
        (WordFamily((1,), 0, (1,)), 2),  # +2
        (WordFamily((0, 1), 0, (1,)), 1),  # +3
    ]
    vals_ok = all(
        q_fams[j][0].value(q_fams[j][1] + 2 * n, 2) == 2 * 4 ** (n + 1) - 1 + j
        for n in range(4)
        for j in range(4)
    )
    ok = vals_ok and all(
        family_eval(ar, fam).constant(1, 2, off) for fam, off in q_fams
    )
    out.append(_check(10, "r family q_n = 2*4^(n+1)-1 gives four 1s", ok))
    return out


# -- criterion 11: counting identities -----------------------------------------


def criterion_11():
    out = []
    a3 = registry.machine("c3")
    ok = True
    worst = ""
    for m in range(1, 13):
        cnt = count_letter(a3, "nonzero", 9**m)
        if cnt > 8**m:
            ok = False
            worst = f"m={m}: {cnt} > {8**m}"
            break
    out.append(_check(11, "nonzero(c3, 9^m) <= 8^m for m <= 12", ok, worst))

    at3 = registry.machine("t3")
    ok = all(
        count_letter(at3, letter, 3**m) == 3 ** (m - 1)
        for m in range(1, 13)
        for letter in (0, 1, 2)
    )
    out.append(_check(11, "t3 letter counts at 3^m all equal 3^(m-1), m <= 12", ok))

    au = registry.machine("u")
    ok = all(
        count_letter(au, 1, 80 * 2**k) == count_letter(au, 1, 79 * 2**k)
        for k in range(21)
    )
    out.append(_check(11, "ones(u, 80*2^k) = ones(u, 79*2^k) for k <= 20", ok))
    ok = all(
        count_letter(au, 0, 48 * 2**k) == count_letter(au, 0, 47 * 2**k)
        for k in range(21)
    )
    out.append(_check(11, "zeros(u, 48*2^k) = zeros(u, 47*2^k) for k <= 20", ok))

    av = registry.machine("v")
    ok = all(
        count_letter(av, 1, 54 * 2**k) == count_letter(av, 1, 53 * 2**k)
        for k in range(19)
    )
    out.append(_check(11, "ones(v, 54*2^k) = ones(v, 53*2^k) for k <= 18", ok))
    ok = all(count_letter(av, 1, 11 * 2**k) >= 2**k for k in range(19))
    out.append(_check(11, "ones(v, 11*2^k) >= 2^k for k <= 18", ok))

    ar = registry.machine("r")
    ones = count_letter(ar, 1, 4**10)
    out.append(
        _check(11, "|2*ones(r, 4^10) - 4^10| <= 0.01 * 4^10",
               abs(2 * ones - 4**10) <= 0.01 * 4**10, f"ones = {ones}")
    )
    return out


# -- criterion 12: conjecture probes (reported) ---------------------------------


def criterion_12():
    report = probe_conjectures(7, n_check=100_000, run_scan=1_000_000, synth_budget=1 << 21)
    c1 = report["conjecture1"]
    c2 = report["conjecture2"]
    c3 = report["conjecture3"]
    out = [
        CheckResult(12, "p=7 conjecture-1 probe (offsets {4,5}, n < 1e5)", "REPORT",
                    f"offsets {c1['offsets']}, holds in range: {c1['holds_in_range']}, "
                    f"counterexamples: {c1['counterexamples'] or 'none'}"),
        CheckResult(12, "p=7 run-length probe (N = 1e6, bound (p+3)/2 = 5)", "REPORT",
                    f"max runs {c2['max_run_per_letter']}, within bound: {c2['within_bound']}"),
        CheckResult(12, "p=7 structure probe", "REPORT",
                    str(c3)),
    ]
    # the probe must have run with the expected offsets
    out.append(_check(12, "conjecture-1 offsets computed as {4, 5}", c1["offsets"] == [4, 5]))
    return out


# -- criterion 13: OEIS fixtures -------------------------------------------------


def criterion_13(fixture_dir=None):
    from pathlib import Path

    if fixture_dir is None:
        candidates = [
            Path(__file__).resolve().parent.parent.parent / "tests" / "fixtures",
            Path.cwd() / "tests" / "fixtures",
        ]
        fixture_dir = next((c for c in candidates if c.is_dir()), candidates[0])
    fixture_dir = Path(fixture_dir)
    out = []
    for aid, tag in (("053838", "c3"), ("053840", "c5")):
        path = fixture_dir / f"b{aid}.txt"
        b = parse_bfile(path.read_text(), path.name)
        t = registry.terms(tag, registry.budget(tag))
        verdict = compare_oeis(b, t)
        out.append(
            _check(13, f"{tag} agrees with vendored A{aid} prefix",
                   verdict.agrees, f"compared {verdict.compared} terms, "
                   f"first mismatch {verdict.first_mismatch}")
        )
    return out


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
    11: criterion_11,
    12: criterion_12,
    13: criterion_13,
}


def run_all(selected=None, out=print):
    """Run the acceptance criteria; returns the list of CheckResults."""
    results = []
    t0 = time.time()
    for crit in sorted(selected or CRITERIA):
        t1 = time.time()
        for res in CRITERIA[crit]():
            results.append(res)
            out(f"[criterion {res.criterion:2d}] {res.status:6s} {res.name}"
                + (f"  ({res.detail})" if res.detail else ""))
        out(f"-- criterion {crit} done in {time.time()-t1:.1f}s")
    fails = [r for r in results if r.status == "FAIL"]
    out(f"== {len(results)} checks, {len(fails)} failed, "
        f"{sum(r.status == 'REPORT' for r in results)} reported, "
        f"total {time.time()-t0:.1f}s")
    return results
