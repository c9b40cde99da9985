"""Smallest UNSAT, pattern-free instances found by exhaustive search.

For each variable count, reports the fewest clauses any counterexample
needs and lists those classes.

    python scripts/smallest_counterexamples.py --max-vars 3 --max-clauses 6
"""
import argparse

from satpatterns.frontend.formula import format_formula
from satpatterns.logic import paper_counterexample
from satpatterns.miner import find_counterexamples
from satpatterns.symmetry import canonical_form


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-vars", type=int, default=3)
    parser.add_argument("--max-clauses", type=int, default=6)
    args = parser.parse_args()

    found = list(find_counterexamples(args.max_vars, args.max_clauses))
    paper = canonical_form(paper_counterexample())
    for n in range(1, args.max_vars + 1):
        at_n = [i for i in found if i.num_variables == n]
        if not at_n:
            print(f"n={n}: none with m <= {args.max_clauses}")
            continue
        fewest = min(i.m for i in at_n)
        smallest = [i for i in at_n if i.m == fewest]
        print(f"n={n}: {len(at_n)} classes, fewest clauses {fewest} ({len(smallest)} classes)")
        for inst in smallest:
            print(f"    {format_formula(inst)}")
    print(f"paper's instance class present: {paper in set(found)} ({format_formula(paper)})")


if __name__ == "__main__":
    main()
