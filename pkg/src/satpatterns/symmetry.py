"""Variable permutations and polarity flips acting on instances.

The full syntactic symmetry group of an ``n``-variable instance has
``n! * 2**n`` elements.  For small ``n`` the action of every group element on
the finite clause universe is tabulated once, so canonical forms reduce to
"sort each image row, take the lexicographically smallest".
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import DimensionMismatch, TooManyVariablesForCanon
from .logic import Clause, Instance, Literal, make_instance

MAX_CANON_VARS = 6


@dataclass(frozen=True)
class SymmetryAction:
    """``permutation[v-1]`` is the image of variable ``v``.

    Polarity flips apply to source variables, before relabeling.
    """

    permutation: tuple[int, ...]
    flips: frozenset[int] = frozenset()

    def __post_init__(self):
        n = len(self.permutation)
        if sorted(self.permutation) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection on 1..{n}: {self.permutation}")
        if any(not 1 <= v <= n for v in self.flips):
            raise ValueError(f"flips {sorted(self.flips)} outside 1..{n}")
        object.__setattr__(self, "flips", frozenset(self.flips))

    @classmethod
    def identity(cls, n: int) -> SymmetryAction:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.permutation)

    def map_literal(self, lit: Literal) -> Literal:
        return Literal(self.permutation[lit.variable - 1], lit.polarity ^ (lit.variable in self.flips))


def apply_symmetry(instance: Instance, action: SymmetryAction) -> Instance:
    if action.n != instance.num_variables:
        raise DimensionMismatch(f"action acts on {action.n} variables, instance has {instance.num_variables}")
    mapped = [Clause(action.map_literal(l) for l in c.literals) for c in instance.clauses]
    return make_instance(instance.num_variables, mapped)


def all_actions(n: int) -> Iterator[SymmetryAction]:
    """Every group element, in the row order of :func:`action_table`."""
    for perm in itertools.permutations(range(1, n + 1)):
        for flip_bits in range(1 << n):
            yield SymmetryAction(perm, frozenset(v for v in range(1, n + 1) if flip_bits >> (v - 1) & 1))


def orbit(instance: Instance) -> set[Instance]:
    return {apply_symmetry(instance, a) for a in all_actions(instance.num_variables)}


@lru_cache(maxsize=None)
def clause_universe(n: int) -> tuple[Clause, ...]:
    """All canonical clauses of width 1-3 over ``n`` variables, in clause order."""
    clauses = []
    for width in (1, 2, 3):
        for variables in itertools.combinations(range(1, n + 1), width):
            for signs in itertools.product((True, False), repeat=width):
                clauses.append(Clause(Literal(v, s) for v, s in zip(variables, signs)))
    return tuple(sorted(clauses, key=lambda c: c.key))


@lru_cache(maxsize=None)
def universe_index(n: int) -> dict[Clause, int]:
    return {c: i for i, c in enumerate(clause_universe(n))}


@lru_cache(maxsize=None)
def action_table(n: int) -> np.ndarray:
    """``table[a, i]`` = universe index of the image of clause ``i`` under action ``a``.

    Row order matches :func:`all_actions`.  Shape ``(n! * 2**n, |universe|)``.
    """
    if n > MAX_CANON_VARS:
        raise TooManyVariablesForCanon(f"symmetry tables limited to n <= {MAX_CANON_VARS}, got {n}")
    universe = clause_universe(n)
    base = 2 * n  # literal codes are 0..2n-1; ``base`` doubles as padding
    codes = np.full((len(universe), 3), base, dtype=np.int64)
    for i, clause in enumerate(universe):
        codes[i, : len(clause)] = [l.code for l in clause.literals]
    sizes = (codes != base).sum(axis=1)

    # dense lookup from clause encoding to universe index
    def encode(sorted_codes: np.ndarray, size: np.ndarray) -> np.ndarray:
        c = np.where(sorted_codes == base, 0, sorted_codes)
        return ((size * base + c[..., 0]) * base + c[..., 1]) * base + c[..., 2]

    lookup = np.full(4 * base**3 + 1, -1, dtype=np.int64)
    lookup[encode(codes, sizes)] = np.arange(len(universe))

    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    flips = (np.arange(1 << n)[:, None] >> np.arange(n)[None, :]) & 1
    neg = np.arange(2)
    # literal-code map: (perm, flip, var, neg) -> 2*perm[var] + (neg ^ flip[var])
    lit_map = 2 * perms[:, None, :, None] + (neg[None, None, None, :] ^ flips[None, :, :, None])
    lit_map = lit_map.reshape(-1, 2 * n)
    lit_map = np.concatenate([lit_map, np.full((len(lit_map), 1), base)], axis=1)

    table = np.empty((len(lit_map), len(universe)), dtype=np.int16)
    step = max(1, 8192 // max(1, len(universe) // 8))
    for lo in range(0, len(lit_map), step):
        mapped = np.sort(lit_map[lo : lo + step][:, codes], axis=-1)
        table[lo : lo + step] = lookup[encode(mapped, sizes[None, :])]
    assert (table >= 0).all()
    table.setflags(write=False)
    return table


def group_order(n: int) -> int:
    return math.factorial(n) * (1 << n)


def lex_min_row(rows: np.ndarray) -> int:
    """Index of the lexicographically smallest row of a 2-D array."""
    return int(np.lexsort(rows.T[::-1])[0])


def canonical_form(instance: Instance) -> Instance:
    """Orbit minimum under the clause-sequence order of :attr:`Instance.key`."""
    n = instance.num_variables
    if n > MAX_CANON_VARS:
        raise TooManyVariablesForCanon(f"canonical_form limited to n <= {MAX_CANON_VARS}, got {n}")
    if not instance.clauses:
        return instance
    index = universe_index(n)
    members = np.array([index[c] for c in instance.clauses])
    images = np.sort(action_table(n)[:, members], axis=1)
    best = images[lex_min_row(images)]
    universe = clause_universe(n)
    return Instance(n, tuple(universe[i] for i in best))
