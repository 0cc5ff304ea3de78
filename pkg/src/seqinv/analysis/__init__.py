"""Everything proved *about* the machines: synchronization, structure,
word-family pumping, restricted progression statements, exact counting,
run statistics, and conjecture probes."""

from .counting import RunStats, count_letter, max_runs
from .families import FamilyVerdict, WordFamily, family_eval
from .probes import probe_conjectures
from .progression import progression_automaton
from .statements import (
    ProgressionStatement,
    StatementError,
    Verdict,
    brute_force_statement,
    parse_statement,
    verify_statement,
    walnut1a_text,
    walnut1b_text,
    walnut2_text,
)
from .structure import StructureReport, structure_report, transition_bipartite
from .sync import SyncResult, is_synchronizing, shortest_sync_words, uniform_reach, word_digits

__all__ = [
    "RunStats",
    "count_letter",
    "max_runs",
    "FamilyVerdict",
    "WordFamily",
    "family_eval",
    "probe_conjectures",
    "progression_automaton",
    "ProgressionStatement",
    "StatementError",
    "Verdict",
    "brute_force_statement",
    "parse_statement",
    "verify_statement",
    "walnut1a_text",
    "walnut1b_text",
    "walnut2_text",
    "StructureReport",
    "structure_report",
    "transition_bipartite",
    "SyncResult",
    "is_synchronizing",
    "shortest_sync_words",
    "uniform_reach",
    "word_digits",
]
