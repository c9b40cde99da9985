"""Infix formula syntax, e.g. ``~a & ~b & (a | b)``.

A formula is a conjunction of clauses; a clause is a literal or a
disjunction, optionally parenthesized.  ``|`` binds tighter than ``&`` so
bare disjunctions read as clauses.  Accepted operator spellings:

    and: ``&``  ``/\\``  ``∧``
    or:  ``|``  ``\\/``  ``∨``
    not: ``~``  ``!``  ``¬``  (prefix, may repeat)

Variables are alphanumeric names (``_`` allowed), numbered 1, 2, ... in
order of first appearance.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass

from ..errors import EmptyClauseError, FormulaSyntaxError, TautologyError
from ..logic import Instance, Literal, canonicalize_clause, make_instance

log = logging.getLogger(__name__)

_TOKEN = re.compile(
    r"\s*(?:(?P<and>&|/\\|∧)|(?P<or>\||\\/|∨)|(?P<not>[~!¬])|(?P<lp>\()|(?P<rp>\))|(?P<name>\w+))"
)


@dataclass(frozen=True)
class FormulaResult:
    instance: Instance
    names: tuple[str, ...]
    tautologies_dropped: int


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise FormulaSyntaxError(f"unexpected character {text[offset]!r}", offset)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.names: dict[str, int] = {}

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise FormulaSyntaxError(f"expected {kind}, found {what}", tok[2])
        self.i += 1
        return tok

    def literal(self) -> Literal:
        positive = True
        while self.peek()[0] == "not":
            self.i += 1
            positive = not positive
        _, name, _ = self.take("name")
        index = self.names.setdefault(name, len(self.names) + 1)
        return Literal(index, positive)

    def disjunction(self) -> list[Literal]:
        lits = [self.literal()]
        while self.peek()[0] == "or":
            self.i += 1
            lits.append(self.literal())
        return lits

    def clause(self) -> tuple[list[Literal], int]:
        kind, _, pos = self.peek()
        if kind == "lp":
            self.i += 1
            if self.peek()[0] == "rp":
                raise EmptyClauseError(f"empty clause at position {pos}")
            lits = self.disjunction()
            self.take("rp")
            return lits, pos
        return self.disjunction(), pos

    def formula(self) -> list[tuple[list[Literal], int]]:
        clauses = [self.clause()]
        while self.peek()[0] == "and":
            self.i += 1
            clauses.append(self.clause())
        self.take("end")
        return clauses


def read_formula(text: str) -> FormulaResult:
    parser = _Parser(text)
    raw = parser.formula()
    clauses = []
    tautologies = 0
    for lits, _ in raw:
        try:
            clauses.append(canonicalize_clause(lits))
        except TautologyError:
            tautologies += 1
    if tautologies:
        log.warning("dropped %d tautological clause(s)", tautologies)
    names = tuple(sorted(parser.names, key=parser.names.__getitem__))
    return FormulaResult(make_instance(len(names), clauses), names, tautologies)


def parse_formula(text: str) -> Instance:
    return read_formula(text).instance


def format_formula(instance: Instance, names=None) -> str:
    """Inverse of :func:`parse_formula` given the same ``names``."""
    def name(v: int) -> str:
        return names[v - 1] if names else f"x{v}"

    parts = []
    for clause in instance.clauses:
        lits = [name(l.variable) if l.polarity else "~" + name(l.variable) for l in clause]
        parts.append(lits[0] if len(lits) == 1 else "(" + " | ".join(lits) + ")")
    return " & ".join(parts)
