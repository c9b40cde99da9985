import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import clauses, instances
from satpatterns.logic import flip_variable, instance_from_ints, make_instance
from satpatterns.miner import random_action
from satpatterns.oracle import brute_force_sat
from satpatterns.patterns import (
    PatternKind,
    PatternWitness,
    detect_any,
    detect_pattern1,
    detect_pattern2,
    detect_pattern3,
    polarity_index,
)
from satpatterns.symmetry import apply_symmetry


QUAD = [[1, 2], [1, -2], [-1, 2], [-1, -2]]
OCTET = [[s1 * 1, s2 * 2, s3 * 3] for s1, s2, s3 in itertools.product((1, -1), repeat=3)]
EMPTY = make_instance(0, [])


def test_pattern1():
    assert detect_pattern1(instance_from_ints(1, [[1], [-1]])) == PatternWitness(PatternKind.PATTERN1, (1,))
    assert detect_pattern1(EMPTY) is None


def test_pattern2():
    assert detect_pattern2(instance_from_ints(2, QUAD)) == PatternWitness(PatternKind.PATTERN2, (1, 2))
    assert detect_pattern2(instance_from_ints(2, QUAD[:3])) is None


def test_pattern3():
    assert detect_pattern3(instance_from_ints(3, OCTET)) == PatternWitness(PatternKind.PATTERN3, (1, 2, 3))
    assert detect_pattern3(instance_from_ints(3, OCTET[:-1])) is None


def test_paper_counterexample_has_no_pattern(paper):
    assert detect_pattern1(paper) is None
    assert detect_pattern2(paper) is None
    assert detect_pattern3(paper) is None
    report = detect_any(paper)
    assert not report.matched and report.witnesses == []


def test_detect_any_multiple_kinds():
    report = detect_any(instance_from_ints(2, [[1], [-1]] + QUAD))
    assert report.matched
    assert [w.kind for w in report.witnesses] == [PatternKind.PATTERN1, PatternKind.PATTERN2]
    assert not detect_any(EMPTY).matched


def test_smallest_witness_wins():
    inst = instance_from_ints(5, [[4], [-4], [2], [-2], [5], [-5]])
    assert detect_pattern1(inst).variables == (2,)
    quads = [[s * 3, t * 5] for s, t in itertools.product((1, -1), repeat=2)]
    quads += [[s * 2, t * 4] for s, t in itertools.product((1, -1), repeat=2)]
    assert detect_pattern2(instance_from_ints(5, quads)).variables == (2, 4)


def test_wider_clauses_do_not_count_for_narrow_patterns():
    # every 3-clause implies nothing syntactically about the 2-clause quadruple
    inst = instance_from_ints(3, [[1, 2, 3], [1, -2, 3], [-1, 2, 3], [-1, -2, 3], [1, 2], [1, -2], [-1, 2]])
    assert detect_pattern2(inst) is None


def test_polarity_index_masks():
    idx = polarity_index(instance_from_ints(3, QUAD + [[1, 3]]), 2)
    assert idx[(1, 2)] == 0b1111
    assert idx[(1, 3)] == 0b0001


def test_witness_validation():
    with pytest.raises(ValueError):
        PatternWitness(PatternKind.PATTERN2, (1,))
    with pytest.raises(ValueError):
        PatternWitness(PatternKind.PATTERN2, (2, 1))
    assert len(PatternWitness(PatternKind.PATTERN3, (1, 2, 3)).clauses()) == 8


@given(instances(max_vars=4, max_clauses=20))


def test_soundness(inst):
    if detect_any(inst).matched:
        assert not brute_force_sat(inst).satisfiable


@given(instances(max_vars=4, max_clauses=20))


def test_witnesses_are_subsets(inst):
    for w in detect_any(inst).witnesses:
        present = set(inst.clauses)
        assert all(cl in present for cl in w.clauses())


@given(instances(max_vars=5, max_clauses=16), st.integers(0, 2**32))


def test_renaming_and_flip_invariance(inst, seed):
    rng = random.Random(seed)
    action = random_action(inst.num_variables, rng)
    before = detect_any(inst)
    after = detect_any(apply_symmetry(inst, action))
    assert before.matched == after.matched
    assert [w.kind for w in before.witnesses] == [w.kind for w in after.witnesses]
    # each witness maps to a valid witness of the same kind in the image
    image = apply_symmetry(inst, action)
    for w in before.witnesses:
        mapped = tuple(sorted(action.permutation[v - 1] for v in w.variables))
        assert PatternWitness(w.kind, mapped).holds_in(image)


@given(instances(max_vars=5, max_clauses=16), st.data())


def test_single_variable_flip_invariance(inst, data):
    v = data.draw(st.integers(1, inst.num_variables))
    assert detect_any(flip_variable(inst, v)).matched == detect_any(inst).matched


@given(instances(max_vars=4, max_clauses=16), st.data())


def test_monotone_under_clause_addition(inst, data):
    extra = data.draw(clauses(inst.num_variables))
    if detect_any(inst).matched:
        assert detect_any(make_instance(inst.num_variables, inst.clauses + (extra,))).matched
