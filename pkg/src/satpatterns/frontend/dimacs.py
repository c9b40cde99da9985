"""DIMACS CNF reading and writing, restricted to clauses of width <= 3."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Union

from ..errors import (
    EmptyClauseError,
    LiteralOutOfRange,
    MalformedHeader,
    ParseError,
    TautologyError,
    TooManyLiteralsError,
    UnterminatedClause,
)
from ..logic import Instance, Literal, canonicalize_clause, make_instance

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DimacsResult:
    instance: Instance
    tautologies_dropped: int
    header_clauses: int


def read_dimacs(text: Union[str, bytes]) -> DimacsResult:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n: Optional[int] = None
    header_m = 0
    clauses = []
    tautologies = 0
    pending: list[int] = []

    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("%"):  # SATLIB end marker
            break
        if stripped.startswith("p"):
            parts = stripped.split()
            if n is not None:
                raise MalformedHeader(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise MalformedHeader(f"line {lineno}: expected 'p cnf <n> <m>', got {stripped!r}")
            try:
                n, header_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise MalformedHeader(f"line {lineno}: non-integer counts in {stripped!r}") from None
            if n < 0 or header_m < 0:
                raise MalformedHeader(f"line {lineno}: negative counts in {stripped!r}")
            continue
        if n is None:
            raise MalformedHeader(f"line {lineno}: clause data before 'p cnf' header")
        for token in stripped.split():
            try:
                value = int(token)
            except ValueError:
                raise ParseError(f"line {lineno}: invalid literal {token!r}") from None
            if value != 0:
                if abs(value) > n:
                    raise LiteralOutOfRange(f"line {lineno}: literal {value} outside 1..{n}")
                pending.append(value)
                continue
            if not pending:
                raise EmptyClauseError(f"line {lineno}: empty clause")
            try:
                clauses.append(canonicalize_clause([Literal.from_int(v) for v in pending]))
            except TautologyError:
                tautologies += 1
            except TooManyLiteralsError as exc:
                raise TooManyLiteralsError(f"line {lineno}: {exc} (3SAT input only)") from None
            pending = []

    if n is None:
        raise MalformedHeader("missing 'p cnf <n> <m>' header")
    if pending:
        raise UnterminatedClause(f"clause {pending} not terminated by 0")
    instance = make_instance(n, clauses)
    if tautologies:
        log.warning("dropped %d tautological clause(s)", tautologies)
    if instance.m != header_m:
        log.warning("header declares %d clauses, read %d distinct", header_m, instance.m)
    return DimacsResult(instance, tautologies, header_m)


def parse_dimacs(text: Union[str, bytes]) -> Instance:
    return read_dimacs(text).instance


def emit_dimacs(instance: Instance) -> str:
    lines = [f"p cnf {instance.num_variables} {instance.m}"]
    lines.extend(" ".join(map(str, c.to_ints())) + " 0" for c in instance.clauses)
    return "\n".join(lines) + "\n"
