"""Exhaustive small-instance enumeration up to symmetry, and classification.

Enumeration is orderly generation: a clause set (as sorted universe indices)
is canonical when no group element maps it to a lexicographically smaller
sorted tuple.  Dropping the largest element of a canonical set leaves a
canonical set, so a depth-first search that only appends indices above the
current maximum, and prunes non-canonical sets, visits each symmetry class
exactly once.
"""
from __future__ import annotations

import enum
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

import numpy as np

from .errors import BoundsTooLarge, SatPatternsError, SoundnessViolation
from .logic import Clause, Instance, Literal, make_instance
from .oracle import brute_force_cap, brute_force_sat, dpll_sat
from .patterns import PatternWitness, detect_any
from .symmetry import MAX_CANON_VARS, SymmetryAction, action_table, clause_universe


class OracleDisagreement(SatPatternsError):
    pass


class Quadrant(enum.Enum):
    SAT_PATTERN_FREE = "SatPatternFree"
    SAT_PATTERN_MATCHED = "SatPatternMatched"
    UNSAT_PATTERN_MATCHED = "UnsatPatternMatched"
    UNSAT_PATTERN_FREE = "UnsatPatternFree"

    @classmethod
    def of(cls, satisfiable: bool, matched: bool) -> Quadrant:
        if satisfiable:
            return cls.SAT_PATTERN_MATCHED if matched else cls.SAT_PATTERN_FREE
        return cls.UNSAT_PATTERN_MATCHED if matched else cls.UNSAT_PATTERN_FREE

    @property
    def cli_name(self) -> str:
        return {
            Quadrant.SAT_PATTERN_FREE: "sat-pattern-free",
            Quadrant.SAT_PATTERN_MATCHED: "sat-pattern-matched",
            Quadrant.UNSAT_PATTERN_MATCHED: "unsat-pattern-matched",
            Quadrant.UNSAT_PATTERN_FREE: "unsat-pattern-free",
        }[self]

    @classmethod
    def from_cli(cls, name: str) -> Quadrant:
        for q in cls:
            if q.cli_name == name:
                return q
        raise ValueError(f"unknown quadrant {name!r}")


@dataclass(frozen=True)
class ClassificationRecord:
    instance: Instance
    pattern_matched: bool
    pattern_witnesses: list[PatternWitness]
    satisfiable: bool
    quadrant: Quadrant
    source: str = "mined"
    # user-facing variable names, index v-1 for variable v (formula input only)
    names: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.quadrant is not Quadrant.of(self.satisfiable, self.pattern_matched):
            raise ValueError("quadrant inconsistent with satisfiable/pattern_matched")


def decide(instance: Instance) -> bool:
    """Satisfiability, by brute force where the cap allows, else DPLL."""
    if instance.num_variables <= brute_force_cap():
        return brute_force_sat(instance).satisfiable
    return dpll_sat(instance).satisfiable


def classify(instance: Instance, source: str = "mined", names=None) -> ClassificationRecord:
    report = detect_any(instance)
    sat = decide(instance)
    return ClassificationRecord(
        instance=instance,
        pattern_matched=report.matched,
        pattern_witnesses=list(report.witnesses),
        satisfiable=sat,
        quadrant=Quadrant.of(sat, report.matched),
        source=source,
        names=tuple(names) if names is not None else None,
    )


def _check_bounds(max_vars: int, max_clauses: int) -> None:
    if max_vars < 0 or max_clauses < 0:
        raise BoundsTooLarge(f"bounds must be non-negative, got ({max_vars}, {max_clauses})")
    if max_vars > MAX_CANON_VARS:
        raise BoundsTooLarge(f"enumeration limited to max_vars <= {MAX_CANON_VARS}, got {max_vars}")


def _canonical_children(table: np.ndarray, members: list[int], candidates: np.ndarray) -> np.ndarray:
    """Subset of ``candidates`` whose addition to canonical ``members`` stays canonical."""
    target = np.empty((len(candidates), len(members) + 1), dtype=np.int64)
    target[:, :-1] = members
    target[:, -1] = candidates
    images = np.concatenate(
        [
            np.broadcast_to(table[:, members][:, None, :], (len(table), len(candidates), len(members))),
            table[:, candidates][:, :, None],
        ],
        axis=2,
    )
    images = np.sort(images, axis=2)
    differs = images != target[None]
    first = differs.argmax(axis=2)
    image_at = np.take_along_axis(images, first[..., None], axis=2)[..., 0]
    target_at = target[np.arange(len(candidates))[None, :], first]
    smaller = differs.any(axis=2) & (image_at < target_at)
    return candidates[~smaller.any(axis=0)]


def _enumerate_width(n: int, max_clauses: int) -> Iterator[Instance]:
    universe = clause_universe(n)
    table = action_table(n)
    full_support = (1 << n) - 1
    support = [sum(1 << (v - 1) for v in c.variables) for c in universe]
    # stack of (members, support mask); children visited in ascending order
    stack: list[tuple[list[int], int]] = [([], 0)]
    while stack:
        members, used = stack.pop()
        if members and used == full_support:
            yield Instance(n, tuple(universe[i] for i in members))
        if len(members) >= max_clauses:
            continue
        start = members[-1] + 1 if members else 0
        candidates = np.arange(start, len(universe))
        if members:
            candidates = _canonical_children(table, members, candidates)
        else:
            # singletons: canonical iff no image is smaller
            candidates = candidates[table.min(axis=0)[candidates] == candidates]
        for x in reversed(candidates.tolist()):
            stack.append((members + [x], used | support[x]))


def enumerate_instances(max_vars: int, max_clauses: int) -> Iterator[Instance]:
    """One canonical representative per symmetry class.

    Classes are grouped by the number of variables the instance actually
    uses (``n`` from 1 to ``max_vars``), then listed in increasing order.
    """
    _check_bounds(max_vars, max_clauses)
    for n in range(1, max_vars + 1):
        yield from _enumerate_width(n, max_clauses)


def count_classes(max_vars: int, max_clauses: int) -> int:
    return sum(1 for _ in enumerate_instances(max_vars, max_clauses))


@dataclass
class SufficiencyReport:
    max_vars: int
    max_clauses: int
    counts: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, quadrant: Quadrant) -> int:
        return self.counts[quadrant]

    def as_dict(self) -> dict:
        return {
            "max_vars": self.max_vars,
            "max_clauses": self.max_clauses,
            "total": self.total,
            **{q.value: self.counts[q] for q in Quadrant},
        }


def classify_all(instances: Iterable[Instance], source: str = "mined") -> Iterator[ClassificationRecord]:
    for instance in instances:
        yield classify(instance, source=source)


def verify_sufficiency(max_vars: int, max_clauses: int) -> SufficiencyReport:
    """Classify every class representative; raise if a pattern-matching instance is SAT."""
    _check_bounds(max_vars, max_clauses)
    report = SufficiencyReport(max_vars, max_clauses)
    for record in classify_all(enumerate_instances(max_vars, max_clauses)):
        report.counts[record.quadrant] += 1
        if record.quadrant is Quadrant.SAT_PATTERN_MATCHED:
            raise SoundnessViolation(
                f"pattern {record.pattern_witnesses} present but instance is satisfiable: {record.instance}"
            )
    return report


def find_counterexamples(max_vars: int, max_clauses: int) -> Iterator[Instance]:
    """UNSAT, pattern-free class representatives, each confirmed by both oracles."""
    _check_bounds(max_vars, max_clauses)
    for instance in enumerate_instances(max_vars, max_clauses):
        if detect_any(instance).matched:
            continue
        if brute_force_sat(instance).satisfiable:
            continue
        if dpll_sat(instance).satisfiable:
            raise OracleDisagreement(f"brute force says UNSAT, DPLL says SAT: {instance}")
        yield instance


def random_instance(num_vars: int, num_clauses: int, seed: int) -> Instance:
    """Draw ``num_clauses`` clauses uniformly from the canonical width-1..3 universe.

    Uses :class:`random.Random` (Mersenne Twister) seeded with ``seed``;
    duplicates collapse, so the result may have fewer clauses.
    """
    if num_vars < 1:
        raise ValueError(f"num_vars must be >= 1, got {num_vars}")
    rng = random.Random(seed)
    widths = [w for w in (1, 2, 3) if w <= num_vars]
    weights = [(1 << w) * math.comb(num_vars, w) for w in widths]
    variables = range(1, num_vars + 1)
    clauses = []
    for width in rng.choices(widths, weights, k=num_clauses):
        chosen = rng.sample(variables, width)
        signs = rng.getrandbits(width)
        clauses.append(Clause(Literal(v, not (signs >> i) & 1) for i, v in enumerate(chosen)))
    return make_instance(num_vars, clauses)


def random_action(n: int, rng: random.Random) -> SymmetryAction:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    flips = frozenset(v for v in range(1, n + 1) if rng.random() < 0.5)
    return SymmetryAction(tuple(perm), flips)
