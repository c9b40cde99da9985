"""Literals, clauses, instances and truth evaluation for 3SAT.

Literals are ordered by ``(variable, polarity)`` with the positive literal
first.  Clauses are ordered by size, then lexicographically on their sorted
literals; instances keep their clauses in that order, which makes every
derived output (DIMACS, JSON, canonical forms) byte-stable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    EmptyClauseError,
    TautologyError,
    TooManyLiteralsError,
    UnassignedVariable,
    VariableOutOfRange,
)

MAX_WIDTH = 3

Assignment = Mapping[int, bool]


@dataclass(frozen=True, slots=True)
class Literal:
    variable: int
    polarity: bool = True

    def __post_init__(self):
        if not isinstance(self.variable, int) or self.variable < 1:
            raise VariableOutOfRange(f"variable index must be >= 1, got {self.variable!r}")

    @classmethod
    def from_int(cls, value: int) -> Literal:
        """DIMACS-style signed integer to literal (``-3`` is not-x3)."""
        if value == 0:
            raise VariableOutOfRange("0 is not a literal")
        return cls(abs(value), value > 0)

    def to_int(self) -> int:
        return self.variable if self.polarity else -self.variable

    @property
    def code(self) -> int:
        # dense code whose integer order is the literal order
        return 2 * (self.variable - 1) + (0 if self.polarity else 1)

    def __neg__(self) -> Literal:
        return Literal(self.variable, not self.polarity)

    def satisfied_by(self, assignment: Assignment) -> bool:
        try:
            value = assignment[self.variable]
        except KeyError:
            raise UnassignedVariable(self.variable) from None
        return value == self.polarity

    def __str__(self):
        return f"x{self.variable}" if self.polarity else f"~x{self.variable}"


class Clause:
    """Canonical disjunction of 1-3 literals over distinct variables.

    Build through :func:`canonicalize_clause` (or :meth:`Clause.of`); the
    constructor itself validates but does not collapse duplicates.
    """

    __slots__ = ("literals", "variables", "mask", "key", "_hash")

    def __init__(self, literals: Iterable[Literal]):
        lits = tuple(sorted(literals, key=lambda l: l.code))
        if not lits:
            raise EmptyClauseError("clause has no literals")
        variables = tuple(l.variable for l in lits)
        if len(set(variables)) != len(variables):
            raise ValueError("clause literals must be over distinct variables; use canonicalize_clause")
        if len(lits) > MAX_WIDTH:
            raise TooManyLiteralsError(f"clause has {len(lits)} distinct variables (max {MAX_WIDTH})")
        sign_bits = 0
        for position, lit in enumerate(lits):
            if not lit.polarity:
                sign_bits |= 1 << position
        object.__setattr__(self, "literals", lits)
        object.__setattr__(self, "variables", variables)
        # one-hot polarity pattern; OR-ing these per variable tuple gives the presence mask
        object.__setattr__(self, "mask", 1 << sign_bits)
        object.__setattr__(self, "key", (len(lits), tuple(l.code for l in lits)))
        object.__setattr__(self, "_hash", hash(self.key))

    def __setattr__(self, name, value):
        raise AttributeError("Clause is immutable")

    @classmethod
    def of(cls, *ints: int) -> Clause:
        """``Clause.of(1, -2)`` is x1 or not-x2."""
        return canonicalize_clause([Literal.from_int(i) for i in ints])

    def __len__(self):
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)

    def __eq__(self, other):
        if not isinstance(other, Clause):
            return NotImplemented
        return self.key == other.key

    def __lt__(self, other: Clause) -> bool:
        return self.key < other.key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Clause.of({', '.join(str(l.to_int()) for l in self.literals)})"

    def __str__(self):
        return " | ".join(str(l) for l in self.literals)

    def to_ints(self) -> tuple[int, ...]:
        return tuple(l.to_int() for l in self.literals)


def canonicalize_clause(raw_literals: Sequence[Literal]) -> Clause:
    if not raw_literals:
        raise EmptyClauseError("clause has no literals")
    unique = set(raw_literals)
    polarity_of: dict[int, bool] = {}
    for lit in unique:
        if lit.variable in polarity_of:
            raise TautologyError(f"clause contains x{lit.variable} and its negation")
        polarity_of[lit.variable] = lit.polarity
    if len(unique) > MAX_WIDTH:
        raise TooManyLiteralsError(f"clause has {len(unique)} distinct variables (max {MAX_WIDTH})")
    return Clause(unique)


@dataclass(frozen=True)
class Instance:
    """A 3SAT instance: ``num_variables`` and a set of distinct clauses.

    ``clauses`` is kept sorted in the normal clause order; use
    :func:`make_instance` rather than the raw constructor.
    """

    num_variables: int
    clauses: tuple[Clause, ...]

    @property
    def m(self) -> int:
        return len(self.clauses)

    @property
    def key(self) -> tuple:
        """Total order on instances with equal ``n`` and ``m``."""
        return tuple(c.key for c in self.clauses)

    def used_variables(self) -> set[int]:
        return {v for c in self.clauses for v in c.variables}

    def __str__(self):
        if not self.clauses:
            return "T"
        return " & ".join(f"({c})" if len(c) > 1 else str(c) for c in self.clauses)


def make_instance(num_variables: int, clauses: Iterable[Clause]) -> Instance:
    if num_variables < 0:
        raise VariableOutOfRange(f"num_variables must be >= 0, got {num_variables}")
    unique = set(clauses)
    for clause in unique:
        if clause.variables[-1] > num_variables:
            raise VariableOutOfRange(
                f"clause {clause} references x{clause.variables[-1]} but n={num_variables}"
            )
    return Instance(num_variables, tuple(sorted(unique, key=lambda c: c.key)))


def instance_from_ints(num_variables: int, clauses: Iterable[Iterable[int]]) -> Instance:
    """Shorthand: ``instance_from_ints(2, [[1], [-1, 2]])``."""
    return make_instance(num_variables, [Clause.of(*c) for c in clauses])


def evaluate_clause(clause: Clause, assignment: Assignment) -> bool:
    # evaluate every literal so a missing variable always raises
    results = [lit.satisfied_by(assignment) for lit in clause.literals]
    return any(results)


def evaluate_instance(instance: Instance, assignment: Assignment) -> bool:
    return all([evaluate_clause(c, assignment) for c in instance.clauses])


def flip_variable(instance: Instance, variable: int) -> Instance:
    """Negate every occurrence of ``variable``."""
    flipped = []
    for clause in instance.clauses:
        flipped.append(Clause(-l if l.variable == variable else l for l in clause.literals))
    return make_instance(instance.num_variables, flipped)


PAPER_COUNTEREXAMPLE_CLAUSES = ((-1,), (-2,), (-3,), (1, 2), (1, 3), (2, 3))


def paper_counterexample() -> Instance:
    """``~a & ~b & ~c & (a|b) & (a|c) & (b|c)`` with a, b, c = x1, x2, x3."""
    return instance_from_ints(3, PAPER_COUNTEREXAMPLE_CLAUSES)
