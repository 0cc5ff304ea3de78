"""Command-line front end.

Subcommands: terms, automaton, analyze (sync|structure|bipartite|runs),
verify, family, count, probe, oeis, export, reproduce-paper.  Output is JSON
unless --csv or a subcommand-specific format is chosen.  A plain
`key = value` config file can override term budgets (`budget.c5 = 8000000`);
the SEQINV_BUDGET environment variable overrides the base-5 budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import registry, sequences
from .analysis import (
    WordFamily,
    brute_force_statement,
    count_letter,
    family_eval,
    is_synchronizing,
    max_runs,
    parse_statement,
    probe_conjectures,
    shortest_sync_words,
    structure_report,
    transition_bipartite,
    verify_statement,
    walnut1a_text,
    walnut1b_text,
    walnut2_text,
)
from .dfao import Dfao, SynthesisOptions, synthesize
from .oeis import compare_oeis, fetch_bfile, parse_bfile

BUILTIN_STATEMENTS = {
    "walnut1a": walnut1a_text,
    "walnut1b": walnut1b_text,
    "walnut2": walnut2_text,
}


def _load_machine(spec: str) -> tuple:
    """'name=path.json', 'path.json' or a registry tag like 'c3'."""
    if "=" in spec:
        name, path = spec.split("=", 1)
        return name, Dfao.from_json(Path(path).read_text())
    if spec.endswith(".json"):
        return Path(spec).stem, Dfao.from_json(Path(spec).read_text())
    return spec, registry.machine(spec)


def _apply_config(path: str):
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SystemExit(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key.startswith("budget."):
            registry.set_budget_override(key.split(".", 1)[1], int(value))
        else:
            raise SystemExit(f"{path}:{lineno}: unknown config key {key!r}")


def _emit(doc, args):
    if getattr(args, "out", None):
        Path(args.out).write_text(json.dumps(doc, indent=1) + "\n")
    else:
        print(json.dumps(doc, indent=1))


def cmd_terms(args):
    block = sequences.terms(args.seq, args.count, method=args.method)
    vals = [int(v) for v in block.values]
    if args.format == "plain":
        print(",".join(str(v) for v in vals))
    elif args.format == "csv":
        print("index,coefficient")
        for n, v in enumerate(vals):
            print(f"{n},{v}")
    elif args.format == "bfile":
        sys.stdout.write(block.bfile_text())
    else:
        _emit({"seq": args.seq, "method": block.method, "values": vals}, args)
    return 0


def cmd_automaton(args):
    tag = args.seq
    if args.budget is None:
        machine = registry.machine(tag)
    else:
        opts = SynthesisOptions(hard_floor=1 if tag == "c5" else 16)
        machine = synthesize(
            sequences.terms(tag, args.budget), registry._prime_of(tag), opts
        )
    if args.out:
        Path(args.out).write_text(machine.to_json())
    if args.dot:
        Path(args.dot).write_text(machine.to_dot())
    print(
        json.dumps(
            {
                "seq": tag,
                "states": machine.n_states,
                "radix": machine.radix,
                "cert_depth": machine.cert_depth,
                "written": args.out,
            }
        )
    )
    return 0


def cmd_analyze(args):
    if args.what == "runs":
        block = sequences.terms(args.seq, args.count)
        rs = max_runs(block.values)
        doc = {
            "seq": args.seq,
            "scanned": args.count,
            "max_run_per_letter": {str(k): v[0] for k, v in sorted(rs.per_letter.items())},
            "max_nonzero_run": rs.nonzero[0],
            "first_attained_at": {str(k): v[1] for k, v in sorted(rs.per_letter.items())},
        }
        _emit(doc, args)
        return 0
    name, machine = _load_machine(args.machine)
    if args.what == "sync":
        words = shortest_sync_words(machine, args.max_len)
        res = is_synchronizing(machine)
        doc = {
            "machine": name,
            "synchronizing": res.synchronizing,
            "shortest_words": ["".join(map(str, w)) for w in words],
            "witness_word": "".join(map(str, res.word)) if res.word is not None else None,
            "unmergeable_pair": res.witness_pair,
        }
    elif args.what == "structure":
        rep = structure_report(machine)
        doc = {
            "machine": name,
            "components": [
                {"size": c.size, "kind": c.kind, "cycle_length": c.cycle_length}
                for c in rep.components
            ],
            "initial_component": rep.initial_component,
            "sinks": list(rep.sinks),
            "sink_outputs": [int(machine.out[rep.components[i].states[0]]) for i in rep.sinks],
        }
    elif args.what == "bipartite":
        sides = transition_bipartite(machine)
        doc = {
            "machine": name,
            "bipartite": sides is not None,
            "side_sizes": None if sides is None else [len(sides[0]), len(sides[1])],
            "initial_side": None if sides is None else list(sides[0]),
        }
    else:
        raise SystemExit(f"unknown analyze target {args.what!r}")
    _emit(doc, args)
    return 0


def cmd_verify(args):
    text = args.statement
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    elif text in BUILTIN_STATEMENTS:
        text = BUILTIN_STATEMENTS[text]()
    stmt = parse_statement(text)
    machines = {}
    for spec in args.machine or []:
        name, m = _load_machine(spec)
        machines[name] = m
    needed = {seq for seq, _ in stmt.term_offsets()}
    if len(needed) == 1 and len(machines) == 1 and next(iter(needed)) not in machines:
        machines = {next(iter(needed)): next(iter(machines.values()))}
    for seq in sorted(needed - set(machines)):
        machines[seq] = registry.machine(seq)
    verdict = verify_statement(stmt, machines)
    doc = {
        "statement": stmt.text.strip(),
        "holds": verdict.holds,
        "counterexample": verdict.counterexample,
        "product_states": verdict.product_states,
    }
    if args.brute_force:
        oracles = {seq: registry.terms(seq, registry.budget(seq)) for seq in needed}
        bf = brute_force_statement(stmt, oracles, args.brute_force)
        doc["brute_force_below"] = args.brute_force
        doc["brute_force_holds"] = bf.holds
        doc["brute_force_counterexample"] = bf.counterexample
    _emit(doc, args)
    print("TRUE" if verdict.holds else f"FALSE (least n = {verdict.counterexample})",
          file=sys.stderr)
    return 0 if verdict.holds else 1


def cmd_family(args):
    name, machine = _load_machine(args.machine)
    fam = WordFamily.make(args.prefix or "", args.pump, args.suffix or "", machine.radix)
    verdict = family_eval(machine, fam, start=args.start)
    doc = {
        "machine": name,
        "prefix": list(fam.prefix),
        "pump": fam.pump,
        "suffix": list(fam.suffix),
        "preperiod": verdict.preperiod,
        "period": verdict.period,
        "head_outputs": list(verdict.head),
        "cycle_outputs": list(verdict.cycle),
        "outputs": sorted(verdict.outputs()),
    }
    _emit(doc, args)
    return 0


def cmd_count(args):
    name, machine = _load_machine(args.machine)
    letters = args.letter if args.letter == "nonzero" else int(args.letter)
    cnt = count_letter(machine, letters, args.below)
    _emit({"machine": name, "letter": args.letter, "below": args.below, "count": str(cnt)}, args)
    return 0


def cmd_probe(args):
    report = probe_conjectures(
        args.p, n_check=args.n_check, run_scan=args.run_scan, synth_budget=args.budget
    )
    _emit(report, args)
    return 0


def cmd_oeis(args):
    if args.fetch:
        text = fetch_bfile(args.fetch)
        if args.save:
            Path(args.save).write_text(text)
        source = args.fetch
    else:
        text = Path(args.bfile).read_text()
        source = args.bfile
    b = parse_bfile(text, source)
    count = args.count or (b.entries[-1][0] + 1 if b.entries else 0)
    block = sequences.terms(args.seq, count)
    verdict = compare_oeis(b, block)
    _emit(
        {
            "bfile": source,
            "seq": args.seq,
            "compared": verdict.compared,
            "first_mismatch": verdict.first_mismatch,
            "agrees": verdict.agrees,
        },
        args,
    )
    return 0 if verdict.agrees else 1


def cmd_export(args):
    name, machine = _load_machine(args.machine)
    if args.format == "dot":
        sys.stdout.write(machine.to_dot())
    else:
        sys.stdout.write(machine.to_json() + "\n")
    return 0


def cmd_reproduce(args):
    from .reproduce import run_all

    selected = None
    if args.criteria:
        selected = [int(x) for x in args.criteria.split(",")]
    results = run_all(selected=selected)
    fails = [r for r in results if r.status == "FAIL"]
    return 1 if fails else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="seqinv",
        description="Formal inverses of p-automatic sequences: terms, automata, analysis.",
    )
    ap.add_argument("--config", help="plain key = value config file")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("terms", help="print sequence terms")
    p.add_argument("--seq", required=True)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--method", default="auto")
    p.add_argument("--format", choices=("plain", "csv", "json", "bfile"), default="plain")
    p.add_argument("--out")
    p.set_defaults(func=cmd_terms)

    p = sub.add_parser("automaton", help="synthesize the kernel automaton")
    p.add_argument("--seq", required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--out", help="write machine JSON here")
    p.add_argument("--dot", help="write DOT here")
    p.set_defaults(func=cmd_automaton)

    p = sub.add_parser("analyze", help="sync | structure | bipartite | runs")
    p.add_argument("what", choices=("sync", "structure", "bipartite", "runs"))
    p.add_argument("--machine", help="machine JSON path or registry tag")
    p.add_argument("--seq", help="sequence tag (for runs)")
    p.add_argument("--count", type=int, default=1_000_000)
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="verify a progression statement")
    p.add_argument("--statement", required=True,
                   help="@file, inline text, or walnut1a|walnut1b|walnut2")
    p.add_argument("--machine", action="append",
                   help="machine JSON path, tag, or name=path (repeatable)")
    p.add_argument("--brute-force", type=int, default=0,
                   help="also check directly below this bound")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="evaluate a pumped word family")
    p.add_argument("--machine", required=True)
    p.add_argument("--prefix", default="")
    p.add_argument("--pump", type=int, required=True)
    p.add_argument("--suffix", default="")
    p.add_argument("--start", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("count", help="count letter occurrences below a bound")
    p.add_argument("--machine", required=True)
    p.add_argument("--letter", required=True, help="a letter or 'nonzero'")
    p.add_argument("--below", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("probe", help="finite-range conjecture probes")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n-check", type=int, default=100_000)
    p.add_argument("--run-scan", type=int, default=1_000_000)
    p.add_argument("--budget", type=int, default=1 << 21)
    p.add_argument("--out")
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("oeis", help="compare terms against an OEIS b-file")
    p.add_argument("--bfile", help="local b-file path")
    p.add_argument("--fetch", help="A-number to download (network)")
    p.add_argument("--save", help="save fetched b-file here")
    p.add_argument("--seq", required=True)
    p.add_argument("--count", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_oeis)

    p = sub.add_parser("export", help="emit a machine as DOT or JSON")
    p.add_argument("--machine", required=True)
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("reproduce-paper", help="run the acceptance suite")
    p.add_argument("--criteria", help="comma-separated criterion numbers (default: all)")
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.config:
        _apply_config(args.config)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"seqinv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
