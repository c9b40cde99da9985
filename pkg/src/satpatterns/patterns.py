"""Syntactic unsatisfiability patterns over a clause set.

* Pattern 1: both unit clauses ``a`` and ``~a``.
* Pattern 2: all four 2-clauses over one variable pair.
* Pattern 3: all eight 3-clauses over one variable triple.

Each detector makes a single pass over the clauses, OR-ing each clause's
one-hot polarity bit into a mask keyed by its variable tuple, so detection
is linear in the number of clauses.  A pattern fires when some mask is full.
Only clauses of exactly the pattern's width take part: a 3-clause that
happens to imply ``a | b`` does not count toward Pattern 2.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Optional

from .logic import Clause, Instance, Literal


class PatternKind(enum.Enum):
    PATTERN1 = 1
    PATTERN2 = 2
    PATTERN3 = 3

    @property
    def arity(self) -> int:
        return self.value

    @property
    def label(self) -> str:
        return f"Pattern{self.value}"


@dataclass(frozen=True)
class PatternWitness:
    kind: PatternKind
    variables: tuple[int, ...]

    def __post_init__(self):
        if len(self.variables) != self.kind.arity:
            raise ValueError(f"{self.kind.label} needs {self.kind.arity} variables, got {self.variables}")
        if list(self.variables) != sorted(set(self.variables)):
            raise ValueError(f"witness variables must be strictly increasing: {self.variables}")

    def clauses(self) -> list[Clause]:
        """Materialize the 2, 4 or 8 clauses this witness claims are present."""
        out = []
        for signs in itertools.product((True, False), repeat=len(self.variables)):
            out.append(Clause(Literal(v, s) for v, s in zip(self.variables, signs)))
        return out

    def holds_in(self, instance: Instance) -> bool:
        present = set(instance.clauses)
        return all(c in present for c in self.clauses())


@dataclass(frozen=True)
class PatternReport:
    witnesses: list[PatternWitness] = field(default_factory=list)

    @property
    def matched(self) -> bool:
        return bool(self.witnesses)


def polarity_index(instance: Instance, width: int) -> dict[tuple[int, ...], int]:
    """Map each variable tuple of ``width``-clauses to its polarity-presence mask."""
    index: dict[tuple[int, ...], int] = {}
    get = index.get
    for clause in instance.clauses:
        if len(clause.literals) == width:
            key = clause.variables
            index[key] = get(key, 0) | clause.mask
    return index


def _detect(instance: Instance, kind: PatternKind) -> Optional[PatternWitness]:
    full = (1 << (1 << kind.arity)) - 1
    hits = [key for key, mask in polarity_index(instance, kind.arity).items() if mask == full]
    if not hits:
        return None
    return PatternWitness(kind, min(hits))


def detect_pattern1(instance: Instance) -> Optional[PatternWitness]:
    return _detect(instance, PatternKind.PATTERN1)


def detect_pattern2(instance: Instance) -> Optional[PatternWitness]:
    return _detect(instance, PatternKind.PATTERN2)


def detect_pattern3(instance: Instance) -> Optional[PatternWitness]:
    return _detect(instance, PatternKind.PATTERN3)


def detect_any(instance: Instance) -> PatternReport:
    witnesses = []
    # one pass builds all three indices
    index: list[dict] = [{}, {}, {}]
    for clause in instance.clauses:
        bucket = index[len(clause.literals) - 1]
        key = clause.variables
        bucket[key] = bucket.get(key, 0) | clause.mask
    for kind in PatternKind:
        full = (1 << (1 << kind.arity)) - 1
        hits = [key for key, mask in index[kind.arity - 1].items() if mask == full]
        if hits:
            witnesses.append(PatternWitness(kind, min(hits)))
    return PatternReport(witnesses)
