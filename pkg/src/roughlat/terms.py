"""Terms over the signature 0, 1, &, |, ->, <-, f, g: parser, printer, evaluator, identity checker.

Grammar (loosest first)::

    identity := term "=" term
    term     := orterm ("->" orterm)*      right-associative
              | orterm ("<-" orterm)*      left-associative
    orterm   := andterm ("|" andterm)*
    andterm  := atom ("&" atom)*
    atom     := "0" | "1" | var | "f(" term ")" | "g(" term ")" | "(" term ")"

Mixing ``->`` and ``<-`` at one level without parentheses is rejected.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from roughlat.config import ASSIGNMENT_BOUND
from roughlat.errors import (
    AssignmentSpaceTooLarge,
    MixedAssociativity,
    ReservedVariable,
    TermSyntaxError,
    UnboundVariable,
    UnsupportedOperation,
)
from roughlat.lattice import coimplication, implication

RESERVED = frozenset({"f", "g"})


@dataclass(frozen=True)
class Term:
    pos: int = field(default=0, compare=False, repr=False, kw_only=True)


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class One(Term):
    pass


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Join(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Imp(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Coimp(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class F(Term):
    arg: Term


@dataclass(frozen=True)
class G(Term):
    arg: Term


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term

    def variables(self):
        return tuple(dict.fromkeys(variables(self.lhs) + variables(self.rhs)))


_TOKEN = re.compile(r"\s*(?:(->|<-|[()&|=])|([A-Za-z][A-Za-z0-9_]*)|([0-9]+)|(\S))")


def tokenize(text):
    """List of (kind, value, offset); kinds are 'op', 'ident', 'num', 'end'."""
    out = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        op, ident, num, bad = m.groups()
        start = m.start(m.lastindex)
        if bad is not None:
            raise TermSyntaxError(start, {"term"}, f"unexpected character {bad!r} at {start}")
        if op:
            out.append(("op", op, start))
        elif ident:
            out.append(("ident", ident, start))
        else:
            out.append(("num", num, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def at(self, value):
        kind, v, _ = self.toks[self.i]
        return kind == "op" and v == value

    def advance(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value, expected=None):
        if not self.at(value):
            _, v, p = self.peek()
            raise TermSyntaxError(p, expected or {value}, f"expected {value!r} at {p}, found {v or 'end of input'!r}")
        return self.advance()

    def top(self):
        lhs = self.term()
        if self.at("="):
            self.advance()
            rhs = self.term()
            self.end({"end of input"})
            return Identity(lhs, rhs)
        self.end({"=", "end of input", "->", "<-", "|", "&"})
        return lhs

    def end(self, expected):
        kind, v, p = self.peek()
        if kind != "end":
            if v in ("->", "<-"):
                raise MixedAssociativity(p)
            raise TermSyntaxError(p, expected, f"unexpected {v!r} at {p}")

    def term(self):
        first = self.orterm()
        if self.at("->"):
            ops = [first]
            positions = []
            while self.at("->"):
                positions.append(self.advance()[2])
                ops.append(self.orterm())
            if self.at("<-"):
                raise MixedAssociativity(self.peek()[2])
            acc = ops[-1]
            for left, p in zip(reversed(ops[:-1]), reversed(positions)):
                acc = Imp(left, acc, pos=p)
            return acc
        if self.at("<-"):
            acc = first
            while self.at("<-"):
                p = self.advance()[2]
                acc = Coimp(acc, self.orterm(), pos=p)
            if self.at("->"):
                raise MixedAssociativity(self.peek()[2])
            return acc
        return first

    def orterm(self):
        acc = self.andterm()
        while self.at("|"):
            p = self.advance()[2]
            acc = Join(acc, self.andterm(), pos=p)
        return acc

    def andterm(self):
        acc = self.atom()
        while self.at("&"):
            p = self.advance()[2]
            acc = Meet(acc, self.atom(), pos=p)
        return acc

    def atom(self):
        kind, v, p = self.peek()
        if kind == "num":
            self.advance()
            if v == "0":
                return Zero(pos=p)
            if v == "1":
                return One(pos=p)
            raise TermSyntaxError(p, {"0", "1"}, f"constant {v!r} at {p}: only 0 and 1 exist")
        if kind == "ident":
            self.advance()
            if v in RESERVED:
                if not self.at("("):
                    raise ReservedVariable(p, v)
                self.advance()
                arg = self.term()
                self.expect(")")
                return (F if v == "f" else G)(arg, pos=p)
            return Var(v, pos=p)
        if self.at("("):
            self.advance()
            inner = self.term()
            self.expect(")")
            return inner
        raise TermSyntaxError(
            p, {"0", "1", "variable", "f(", "g(", "("}, f"expected a term at {p}, found {v or 'end of input'!r}"
        )


def parse(text):
    """Parse a term, or an identity when a top-level ``=`` is present."""
    return _Parser(text).top()


def parse_identity(text):
    node = parse(text)
    if not isinstance(node, Identity):
        raise TermSyntaxError(len(text), {"="}, "expected an identity 'lhs = rhs'")
    return node


_PREC = {Imp: 1, Coimp: 1, Join: 2, Meet: 3}
_SYM = {Imp: "->", Coimp: "<-", Join: "|", Meet: "&"}


def _wrap(t, ok):
    s = to_text(t)
    return s if ok else f"({s})"


def to_text(t):
    """Render with the fewest parentheses that parse back to the same tree."""
    if isinstance(t, Identity):
        return f"{to_text(t.lhs)} = {to_text(t.rhs)}"
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, F):
        return f"f({to_text(t.arg)})"
    if isinstance(t, G):
        return f"g({to_text(t.arg)})"
    kind = type(t)
    prec = _PREC[kind]
    lp = _PREC.get(type(t.left), 4)
    rp = _PREC.get(type(t.right), 4)
    if kind is Imp:
        left_ok = lp > 1
        right_ok = rp > 1 or isinstance(t.right, Imp)
    elif kind is Coimp:
        left_ok = lp > 1 or isinstance(t.left, Coimp)
        right_ok = rp > 1
    else:
        left_ok = lp >= prec
        right_ok = rp > prec
    return f"{_wrap(t.left, left_ok)} {_SYM[kind]} {_wrap(t.right, right_ok)}"


def variables(t):
    """Free variables in order of first occurrence."""
    if isinstance(t, Var):
        return (t.name,)
    if isinstance(t, (F, G)):
        return variables(t.arg)
    if isinstance(t, (Meet, Join, Imp, Coimp)):
        return tuple(dict.fromkeys(variables(t.left) + variables(t.right)))
    return ()


def _uses(t, kind):
    if isinstance(t, kind):
        return True
    if isinstance(t, (F, G)):
        return _uses(t.arg, kind)
    if isinstance(t, (Meet, Join, Imp, Coimp)):
        return _uses(t.left, kind) or _uses(t.right, kind)
    return False


def _check_signature(t, signature):
    if _uses(t, Imp) and signature not in ("HGC", "HBGC"):
        raise UnsupportedOperation("->", signature)
    if _uses(t, Coimp) and signature != "HBGC":
        raise UnsupportedOperation("<-", signature)


class _Tables:
    def __init__(self, pair):
        self.pair = pair
        self.lat = pair.base
        self._imp = None
        self._coimp = None

    @property
    def imp(self):
        if self._imp is None:
            n = self.lat.n
            self._imp = [[implication(self.lat, a, b) for b in range(n)] for a in range(n)]
        return self._imp

    @property
    def coimp(self):
        if self._coimp is None:
            n = self.lat.n
            self._coimp = [[coimplication(self.lat, a, b) for b in range(n)] for a in range(n)]
        return self._coimp


def _compile(t, tables, slots):
    """Closure mapping an index environment tuple to the term's value index."""
    lat = tables.lat
    if isinstance(t, Var):
        if t.name not in slots:
            raise UnboundVariable(t.name)
        k = slots[t.name]
        return lambda env: env[k]
    if isinstance(t, Zero):
        b = lat.bottom
        return lambda env: b
    if isinstance(t, One):
        top = lat.top
        return lambda env: top
    if isinstance(t, (F, G)):
        m = tables.pair.f if isinstance(t, F) else tables.pair.g
        inner = _compile(t.arg, tables, slots)
        return lambda env: m[inner(env)]
    left = _compile(t.left, tables, slots)
    right = _compile(t.right, tables, slots)
    if isinstance(t, Meet):
        table = lat.meet
    elif isinstance(t, Join):
        table = lat.join
    elif isinstance(t, Imp):
        table = tables.imp
    else:
        table = tables.coimp
    return lambda env: table[left(env)][right(env)]


def _as_term(t):
    return parse(t) if isinstance(t, str) else t


def evaluate(term, algebra, assignment):
    """Value (an element identifier) of ``term`` under ``assignment`` (variable -> identifier)."""
    term = _as_term(term)
    _check_signature(term, algebra.signature)
    lat = algebra.base
    names = tuple(assignment)
    env = tuple(lat.index(assignment[v]) for v in names)
    fn = _compile(term, _Tables(algebra), {v: k for k, v in enumerate(names)})
    return lat.carrier[fn(env)]


@dataclass(frozen=True)
class Verdict:
    valid: bool
    assignment: dict | None = None
    lhs: object = None
    rhs: object = None
    checked: int = 0

    def __str__(self):
        if self.valid:
            return f"Valid ({self.checked} assignments)"
        env = ", ".join(f"{k}={v}" for k, v in self.assignment.items())
        return f"Counterexample: {env}: lhs={self.lhs} rhs={self.rhs}"


def check_identity(identity, algebra, bound=ASSIGNMENT_BOUND):
    """Evaluate both sides under every assignment; first failing assignment wins."""
    if isinstance(identity, str):
        identity = parse_identity(identity)
    _check_signature(identity.lhs, algebra.signature)
    _check_signature(identity.rhs, algebra.signature)
    lat = algebra.base
    names = identity.variables()
    size = lat.n ** len(names)
    if size > bound:
        raise AssignmentSpaceTooLarge(size, bound)
    tables = _Tables(algebra)
    slots = {v: k for k, v in enumerate(names)}
    lhs = _compile(identity.lhs, tables, slots)
    rhs = _compile(identity.rhs, tables, slots)
    count = 0
    for env in itertools.product(range(lat.n), repeat=len(names)):
        count += 1
        a, b = lhs(env), rhs(env)
        if a != b:
            assignment = {v: lat.carrier[x] for v, x in zip(names, env)}
            return Verdict(False, assignment, lat.carrier[a], lat.carrier[b], count)
    return Verdict(True, checked=count)
