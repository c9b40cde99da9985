"""Syntactic unsatisfiability patterns for 3SAT: detection, oracles, and counterexample mining."""
from .errors import SatPatternsError
from .logic import (
    Clause,
    Instance,
    Literal,
    canonicalize_clause,
    evaluate_clause,
    evaluate_instance,
    instance_from_ints,
    make_instance,
    paper_counterexample,
)
from .miner import (
    ClassificationRecord,
    Quadrant,
    classify,
    enumerate_instances,
    find_counterexamples,
    random_instance,
    verify_sufficiency,
)
from .oracle import SatVerdict, brute_force_sat, count_models, dpll_sat
from .patterns import (
    PatternKind,
    PatternReport,
    PatternWitness,
    detect_any,
    detect_pattern1,
    detect_pattern2,
    detect_pattern3,
)
from .symmetry import SymmetryAction, apply_symmetry, canonical_form

__version__ = "0.1.0"
