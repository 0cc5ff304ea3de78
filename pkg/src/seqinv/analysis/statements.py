"""Restricted universally quantified statements about progression terms.

Grammar (plain text):

    statement := 'forall' 'n' '>=' INT ':' expr
    expr      := 'exists' NAME 'in' '{' INT '..' INT '}' ':' expr | implies
    implies   := or ('->' implies)?
    or        := and ('|' and)*
    and       := unary ('&' unary)*
    unary     := '!' unary | '(' expr ')' | atom
    atom      := term ('=' | '!=') (INT | term)
    term      := NAME '[' INT '*' 'n' (('+'|'-') (INT | NAME))* ']'

All terms must share one multiplier, a power of the machines' base.  The
machine route expands finite quantifiers, builds the product of the
progression machines for each distinct offset, checks the predicate at every
product state reachable by a canonical digit string (small n by direct
enumeration), and returns TRUE or the least counterexample.  The brute-force
route evaluates the same AST against raw term arrays.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from ..dfao import Dfao
from .progression import progression_automaton


class StatementError(ValueError):
    """Malformed or unsupported progression statement."""


@dataclass(frozen=True)
class Term:
    seq: str
    mult: int
    offset: int
    vars: tuple = ()  # ((sign, name), ...) before quantifier substitution

    def concrete(self, env) -> "Term":
        off = self.offset
        for sign, name in self.vars:
            if name not in env:
                raise StatementError(f"unbound variable {name!r}")
            off += sign * env[name]
        return Term(self.seq, self.mult, off)


@dataclass(frozen=True)
class Atom:
    lhs: Term
    op: str  # '=' or '!='
    rhs: object  # int or Term


@dataclass(frozen=True)
class Not:
    body: object


@dataclass(frozen=True)
class And:
    items: tuple


@dataclass(frozen=True)
class Or:
    items: tuple


@dataclass(frozen=True)
class Implies:
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Exists:
    var: str
    lo: int
    hi: int
    body: object


@dataclass(frozen=True)
class ProgressionStatement:
    n_floor: int
    body: object
    text: str

    def expanded(self):
        return _expand(self.body, {})

    def atoms(self):
        out = []
        _collect_atoms(self.expanded(), out)
        return out

    def multiplier(self) -> int:
        mults = {t.mult for a in self.atoms() for t in _atom_terms(a)}
        if len(mults) != 1:
            raise StatementError(f"mixed multipliers {sorted(mults)} in statement")
        return mults.pop()

    def term_offsets(self):
        return sorted(
            {(t.seq, t.offset) for a in self.atoms() for t in _atom_terms(a)}
        )


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_']*)"
    r"|(?P<op>>=|->|!=|\.\.|[=!&|()\[\]{}:*+-]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise StatementError(f"cannot tokenize at: {text[pos:pos+20]!r}")
            break
        if m.group("int") is not None:
            out.append(("int", int(m.group("int"))))
        elif m.group("name") is not None:
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if kind and tok[0] != kind or value is not None and tok[1] != value:
            raise StatementError(f"expected {value or kind}, got {tok}")
        self.i += 1
        return tok

    def signed_int(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.take("int")[1]
        return self.take("int")[1]

    def statement(self):
        tok = self.take()
        if tok != ("name", "forall"):
            raise StatementError("statement must start with 'forall n >= INT :'")
        self.take("name", "n")
        self.take("op", ">=")
        floor = self.signed_int()
        self.take("op", ":")
        body = self.expr()
        if self.peek()[0] != "end":
            raise StatementError(f"trailing tokens at {self.peek()}")
        return floor, body

    def expr(self):
        if self.peek() == ("name", "exists"):
            self.take()
            var = self.take("name")[1]
            self.take("name", "in")
            self.take("op", "{")
            lo = self.signed_int()
            self.take("op", "..")
            hi = self.signed_int()
            self.take("op", "}")
            self.take("op", ":")
            return Exists(var, lo, hi, self.expr())
        return self.implies()

    def implies(self):
        lhs = self.or_()
        if self.peek() == ("op", "->"):
            self.take()
            return Implies(lhs, self.implies())
        return lhs

    def or_(self):
        items = [self.and_()]
        while self.peek() == ("op", "|"):
            self.take()
            items.append(self.and_())
        return items[0] if len(items) == 1 else Or(tuple(items))

    def and_(self):
        items = [self.unary()]
        while self.peek() == ("op", "&"):
            self.take()
            items.append(self.unary())
        return items[0] if len(items) == 1 else And(tuple(items))

    def unary(self):
        if self.peek() == ("op", "!"):
            self.take()
            return Not(self.unary())
        if self.peek() == ("op", "("):
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        return self.atom()

    def atom(self):
        lhs = self.term()
        op = self.take("op")[1]
        if op not in ("=", "!="):
            raise StatementError(f"bad comparison {op!r}")
        if self.peek()[0] == "int":
            rhs = self.take("int")[1]
        else:
            rhs = self.term()
        return Atom(lhs, op, rhs)

    def term(self):
        seq = self.take("name")[1]
        self.take("op", "[")
        mult = self.take("int")[1]
        self.take("op", "*")
        self.take("name", "n")
        offset = 0
        vars_ = []
        while self.peek() in (("op", "+"), ("op", "-")):
            sign = 1 if self.take()[1] == "+" else -1
            tok = self.take()
            if tok[0] == "int":
                offset += sign * tok[1]
            elif tok[0] == "name":
                vars_.append((sign, tok[1]))
            else:
                raise StatementError(f"bad offset token {tok}")
        self.take("op", "]")
        return Term(seq, mult, offset, tuple(vars_))


def parse_statement(text: str) -> ProgressionStatement:
    floor, body = _Parser(_tokenize(text)).statement()
    return ProgressionStatement(floor, body, text)


def _expand(node, env):
    """Substitute quantifier variables and expand exists into disjunctions."""
    if isinstance(node, Exists):
        branches = []
        for val in range(node.lo, node.hi + 1):
            child_env = dict(env)
            child_env[node.var] = val
            branches.append(_expand(node.body, child_env))
        return Or(tuple(branches))
    if isinstance(node, Atom):
        rhs = node.rhs.concrete(env) if isinstance(node.rhs, Term) else node.rhs
        return Atom(node.lhs.concrete(env), node.op, rhs)
    if isinstance(node, Not):
        return Not(_expand(node.body, env))
    if isinstance(node, And):
        return And(tuple(_expand(x, env) for x in node.items))
    if isinstance(node, Or):
        return Or(tuple(_expand(x, env) for x in node.items))
    if isinstance(node, Implies):
        return Implies(_expand(node.lhs, env), _expand(node.rhs, env))
    raise StatementError(f"unexpected node {node!r}")


def _collect_atoms(node, out):
    if isinstance(node, Atom):
        out.append(node)
    elif isinstance(node, Not):
        _collect_atoms(node.body, out)
    elif isinstance(node, (And, Or)):
        for x in node.items:
            _collect_atoms(x, out)
    elif isinstance(node, Implies):
        _collect_atoms(node.lhs, out)
        _collect_atoms(node.rhs, out)
    else:
        raise StatementError(f"unexpected node {node!r}")


def _atom_terms(atom):
    terms = [atom.lhs]
    if isinstance(atom.rhs, Term):
        terms.append(atom.rhs)
    return terms


def _eval(node, value_of):
    """Evaluate an expanded AST; works on scalars and numpy arrays alike."""
    if isinstance(node, Atom):
        lhs = value_of(node.lhs.seq, node.lhs.offset)
        rhs = (
            value_of(node.rhs.seq, node.rhs.offset)
            if isinstance(node.rhs, Term)
            else node.rhs
        )
        return lhs == rhs if node.op == "=" else lhs != rhs
    if isinstance(node, Not):
        return np.logical_not(_eval(node.body, value_of))
    if isinstance(node, And):
        out = _eval(node.items[0], value_of)
        for x in node.items[1:]:
            out = np.logical_and(out, _eval(x, value_of))
        return out
    if isinstance(node, Or):
        out = _eval(node.items[0], value_of)
        for x in node.items[1:]:
            out = np.logical_or(out, _eval(x, value_of))
        return out
    if isinstance(node, Implies):
        return np.logical_or(
            np.logical_not(_eval(node.lhs, value_of)), _eval(node.rhs, value_of)
        )
    raise StatementError(f"unexpected node {node!r}")


@dataclass(frozen=True)
class Verdict:
    holds: bool
    counterexample: int | None = None
    product_states: int | None = None

    def __bool__(self):
        return self.holds


def _as_statement(stmt) -> ProgressionStatement:
    return stmt if isinstance(stmt, ProgressionStatement) else parse_statement(stmt)


def verify_statement(stmt, machines: dict, cutoff: int = 4096, max_layers: int = 50_000) -> Verdict:
    """Decide a progression statement with the product-machine method.

    `machines` maps sequence names to their base Dfao.  Small n are checked
    by direct enumeration; beyond that, the predicate is checked on the
    output tuples of every product state reachable by a canonical digit
    string, with layered reachable sets iterated to a repeat (minimal-value
    tracking turns any failure into the least counterexample).
    """
    stmt = _as_statement(stmt)
    body = stmt.expanded()
    m = stmt.multiplier()
    names = {seq for seq, _ in stmt.term_offsets()}
    for name in names:
        if name not in machines:
            raise StatementError(f"no machine supplied for sequence {name!r}")
    radixes = {machines[name].radix for name in names}
    if len(radixes) != 1:
        raise StatementError("machines operate over different bases")
    r = radixes.pop()

    offsets = stmt.term_offsets()
    for _, c in offsets:
        if m * stmt.n_floor + c < 0:
            raise StatementError(
                f"undefined index: offset {c} needs n >= {(-c + m - 1) // m}, "
                f"statement floor is {stmt.n_floor}"
            )

    progs = [progression_automaton(machines[seq], m, c) for seq, c in offsets]
    key_of = {tc: i for i, tc in enumerate(offsets)}

    # phase 1: direct enumeration of n in [floor, r^L0)
    bound = max(cutoff, stmt.n_floor + 1)
    L0 = 1
    while r**L0 < bound:
        L0 += 1
    ns = np.arange(stmt.n_floor, r**L0, dtype=np.int64)
    vals = {tc: progs[i].evaluate_block(ns) for tc, i in key_of.items()}
    ok = _eval(body, lambda s, c: vals[(s, c)])
    ok = np.broadcast_to(ok, ns.shape)
    bad = np.nonzero(~ok)[0]
    if len(bad):
        return Verdict(False, counterexample=int(ns[bad[0]]))

    # phase 2: layered product reachability for n >= r^L0
    init = tuple(p.initial for p in progs)
    layer = {init: 0}
    for t in range(L0):
        nxt: dict = {}
        scale = r**t
        for s, v in layer.items():
            for d in range(r):
                s2 = tuple(int(progs[i].next[s[i], d]) for i in range(len(progs)))
                v2 = v + d * scale
                if s2 not in nxt or v2 < nxt[s2]:
                    nxt[s2] = v2
        layer = nxt

    seen_sets = {}
    t = L0
    max_product = 0
    while t < max_layers:
        max_product = max(max_product, len(layer))
        # canonical strings of length t+1: extend by a nonzero digit
        scale = r**t
        least_bad = None
        for s, v in layer.items():
            for d in range(1, r):
                s2 = tuple(int(progs[i].next[s[i], d]) for i in range(len(progs)))
                outs = {
                    tc: int(progs[i].out[s2[i]]) for tc, i in key_of.items()
                }
                if not _eval(body, lambda sq, c: outs[(sq, c)]):
                    v2 = v + d * scale
                    if least_bad is None or v2 < least_bad:
                        least_bad = v2
        if least_bad is not None:
            return Verdict(False, counterexample=int(least_bad), product_states=max_product)
        key = frozenset(layer.keys())
        if key in seen_sets:
            return Verdict(True, product_states=max_product)
        seen_sets[key] = t
        nxt = {}
        for s, v in layer.items():
            for d in range(r):
                s2 = tuple(int(progs[i].next[s[i], d]) for i in range(len(progs)))
                v2 = v + d * scale
                if s2 not in nxt or v2 < nxt[s2]:
                    nxt[s2] = v2
        layer = nxt
        t += 1
    raise StatementError("layered search did not stabilize (max_layers reached)")


def brute_force_statement(stmt, oracles: dict, n_max: int) -> Verdict:
    """Evaluate the statement directly against term arrays for n < n_max."""
    stmt = _as_statement(stmt)
    body = stmt.expanded()
    m = stmt.multiplier()
    ns = np.arange(stmt.n_floor, n_max, dtype=np.int64)
    vals = {}
    for seq, c in stmt.term_offsets():
        arr = getattr(oracles[seq], "values", oracles[seq])
        idx = m * ns + c
        if idx.min() < 0 or idx.max() >= len(arr):
            raise StatementError(
                f"oracle for {seq!r} too short: need indices up to {int(idx.max())}"
            )
        vals[(seq, c)] = np.asarray(arr)[idx]
    ok = _eval(body, lambda s, c: vals[(s, c)])
    ok = np.broadcast_to(ok, ns.shape)
    bad = np.nonzero(~ok)[0]
    if len(bad):
        return Verdict(False, counterexample=int(ns[bad[0]]))
    return Verdict(True)


def walnut1a_text() -> str:
    """Every block of 8 around 9n (offsets -1..6) contains a zero."""
    return "forall n >= 1 : exists k in {-1..6} : c3[9*n+k] = 0"


def walnut1b_text() -> str:
    """Five equal consecutive terms starting near 9n force the value zero."""
    clauses = []
    for k in range(-1, 3):
        offs = [k, k + 1, k + 2, k + 3, k + 4]
        eqs = " & ".join(
            f"c3[9*n{_fmt(offs[i])}] = c3[9*n{_fmt(offs[i + 1])}]" for i in range(4)
        )
        clauses.append(f"(({eqs}) -> c3[9*n{_fmt(k)}] = 0)")
    return "forall n >= 1 : " + " & ".join(clauses)


def walnut2_text() -> str:
    """One of v[4n+2..4n+5] vanishes for every n."""
    return "forall n >= 0 : v[4*n+2] = 0 | v[4*n+3] = 0 | v[4*n+4] = 0 | v[4*n+5] = 0"


def _fmt(off: int) -> str:
    if off == 0:
        return ""
    return f"+{off}" if off > 0 else str(off)
