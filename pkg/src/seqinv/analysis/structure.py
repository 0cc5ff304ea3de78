"""Condensation structure and transition bipartiteness of a machine."""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from ..dfao import Dfao


@dataclass(frozen=True)
class ComponentInfo:
    states: tuple  # sorted state ids
    kind: str  # "sink", "cycle", "singleton" or "component"
    cycle_length: int | None = None

    @property
    def size(self) -> int:
        return len(self.states)


@dataclass(frozen=True)
class StructureReport:
    components: tuple  # ComponentInfo in topological order (initial first)
    component_of: dict  # state -> component index
    edges: frozenset  # condensation edges (i, j), always topologically forward
    initial_component: int
    sinks: tuple  # indices of absorbing single-state components
    largest: int  # index of the largest component

    def sizes(self) -> list:
        return [c.size for c in self.components]


def _transition_graph(a: Dfao) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(a.n_states))
    for q in range(a.n_states):
        for d in range(a.radix):
            g.add_edge(q, int(a.next[q, d]))
    return g


def _classify(a: Dfao, comp: list) -> ComponentInfo:
    states = tuple(sorted(comp))
    inside = set(states)
    if len(states) == 1:
        q = states[0]
        if all(int(a.next[q, d]) == q for d in range(a.radix)):
            return ComponentInfo(states, "sink")
        return ComponentInfo(states, "singleton")
    # a cycle component: every state has exactly one successor inside it and
    # they form a single loop
    succs = []
    for q in states:
        inner = {int(a.next[q, d]) for d in range(a.radix)} & inside
        if len(inner) != 1:
            return ComponentInfo(states, "component")
        succs.append(next(iter(inner)))
    seen = {states[0]}
    q = succs[states.index(states[0])]
    while q not in seen:
        seen.add(q)
        q = succs[states.index(q)]
    if len(seen) == len(states):
        return ComponentInfo(states, "cycle", cycle_length=len(states))
    return ComponentInfo(states, "component")


def structure_report(a: Dfao) -> StructureReport:
    """Strongly connected components, classified and topologically ordered.

    The condensation is acyclic by construction, so transitions can never
    climb back to an earlier level; the report's edges are all forward in
    the returned order.
    """
    g = _transition_graph(a)
    cond = nx.condensation(g)
    order = list(nx.topological_sort(cond))
    # put the initial component first (it has no predecessors anyway)
    infos = []
    comp_index = {}
    for new_i, old_i in enumerate(order):
        members = sorted(cond.nodes[old_i]["members"])
        infos.append(_classify(a, members))
        for q in members:
            comp_index[q] = new_i
    rank = {old: new for new, old in enumerate(order)}
    edges = frozenset(
        (rank[u], rank[v]) for u, v in cond.edges() if rank[u] != rank[v]
    )
    for u, v in edges:
        assert u < v, "condensation edge against topological order"
    sinks = tuple(i for i, c in enumerate(infos) if c.kind == "sink")
    largest = max(range(len(infos)), key=lambda i: (infos[i].size, -i))
    return StructureReport(
        components=tuple(infos),
        component_of=comp_index,
        edges=edges,
        initial_component=comp_index[a.initial],
        sinks=sinks,
        largest=largest,
    )


def transition_bipartite(a: Dfao):
    """2-coloring of states such that every transition crosses sides.

    The constraint color(q) != color(next(q, d)) is symmetric, so the
    coloring runs over the undirected transition relation.  Returns
    (side_of_initial, other_side) as sorted tuples, or None when no such
    coloring exists (a self-loop already rules it out).
    """
    n = a.n_states
    adj = [set() for _ in range(n)]
    for q in range(n):
        for d in range(a.radix):
            t = int(a.next[q, d])
            if t == q:
                return None
            adj[q].add(t)
            adj[t].add(q)
    color = {}
    for start in range(n):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        pos = 0
        while pos < len(queue):
            q = queue[pos]
            pos += 1
            for t in adj[q]:
                if t not in color:
                    color[t] = color[q] ^ 1
                    queue.append(t)
                elif color[t] == color[q]:
                    return None
    c0 = color.get(a.initial, 0)
    side_init = tuple(sorted(q for q, c in color.items() if c == c0))
    side_other = tuple(sorted(q for q, c in color.items() if c != c0))
    return side_init, side_other
