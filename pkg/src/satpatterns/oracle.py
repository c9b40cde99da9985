"""Ground-truth satisfiability: exhaustive enumeration and a small DPLL.

The two procedures share nothing beyond the :class:`~satpatterns.logic.Instance`
type, so each one is a check on the other.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .errors import TooManyVariables
from .logic import Instance

DEFAULT_BRUTE_CAP = 24
BRUTE_CAP_ENV = "PATTERN_SAT_BRUTE_CAP"
_CHUNK_BITS = 16


def brute_force_cap() -> int:
    raw = os.environ.get(BRUTE_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BRUTE_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{BRUTE_CAP_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class SatVerdict:
    satisfiable: bool
    model: Optional[dict[int, bool]] = None

    def __post_init__(self):
        if self.satisfiable != (self.model is not None):
            raise ValueError("model must be present exactly when satisfiable")


def _check_cap(instance: Instance) -> None:
    cap = brute_force_cap()
    if instance.num_variables > cap:
        raise TooManyVariables(
            f"brute force limited to n <= {cap} (got n={instance.num_variables}); "
            f"raise {BRUTE_CAP_ENV} to override"
        )


def _satisfying_rows(instance: Instance) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(offset, mask)`` per chunk of assignments in ascending binary order.

    Assignment ``k`` sets variable ``v`` to bit ``v-1`` of ``k``.
    """
    n = instance.num_variables
    total = 1 << n
    chunk = 1 << min(n, _CHUNK_BITS)
    clauses = [c.to_ints() for c in instance.clauses]
    for start in range(0, total, chunk):
        idx = np.arange(start, start + chunk, dtype=np.int64)
        bits = [None] + [((idx >> (v - 1)) & 1).astype(bool) for v in range(1, n + 1)]
        sat = np.ones(chunk, dtype=bool)
        for lits in clauses:
            csat = np.zeros(chunk, dtype=bool)
            for lit in lits:
                csat |= bits[lit] if lit > 0 else ~bits[-lit]
            sat &= csat
        yield start, sat


def brute_force_sat(instance: Instance) -> SatVerdict:
    _check_cap(instance)
    for start, sat in _satisfying_rows(instance):
        if sat.any():
            k = start + int(np.argmax(sat))
            model = {v: bool((k >> (v - 1)) & 1) for v in range(1, instance.num_variables + 1)}
            return SatVerdict(True, model)
    return SatVerdict(False)


def count_models(instance: Instance) -> int:
    _check_cap(instance)
    return sum(int(np.count_nonzero(sat)) for _, sat in _satisfying_rows(instance))


# DPLL over DIMACS-style integer clauses


def _assign(clauses: list[frozenset], lit: int) -> Optional[list[frozenset]]:
    out = []
    for c in clauses:
        if lit in c:
            continue
        if -lit in c:
            c = c - {-lit}
            if not c:
                return None
        out.append(c)
    return out


def _propagate(clauses: list[frozenset], assignment: dict[int, bool]) -> Optional[list[frozenset]]:
    """Unit propagation and pure-literal elimination to a fixpoint."""
    while True:
        unit = next((c for c in clauses if len(c) == 1), None)
        if unit is not None:
            (lit,) = unit
            assignment[abs(lit)] = lit > 0
            clauses = _assign(clauses, lit)
            if clauses is None:
                return None
            continue
        present = {lit for c in clauses for lit in c}
        pure = sorted((lit for lit in present if -lit not in present), key=abs)
        if not pure:
            return clauses
        for lit in pure:
            assignment[abs(lit)] = lit > 0
            clauses = _assign(clauses, lit)


def dpll_sat(instance: Instance) -> SatVerdict:
    """Branches on the lowest-indexed unassigned variable, ``True`` first."""
    start = [frozenset(c.to_ints()) for c in instance.clauses]
    stack: list[tuple[list[frozenset], dict[int, bool]]] = [(start, {})]
    while stack:
        clauses, assignment = stack.pop()
        clauses = _propagate(clauses, assignment)
        if clauses is None:
            continue
        if not clauses:
            model = {v: assignment.get(v, True) for v in range(1, instance.num_variables + 1)}
            return SatVerdict(True, model)
        var = min(abs(lit) for c in clauses for lit in c)
        for lit in (-var, var):  # pushed so that the True branch pops first
            reduced = _assign(clauses, lit)
            if reduced is not None:
                stack.append((reduced, {**assignment, var: lit > 0}))
    return SatVerdict(False)
