"""Quadrant counts over exhaustive small-instance enumeration.

    python scripts/sufficiency_sweep.py --max-vars 3 --max-clauses 8
"""
import argparse
import time

from satpatterns.miner import Quadrant, verify_sufficiency


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-vars", type=int, default=3)
    parser.add_argument("--max-clauses", type=int, default=8)
    args = parser.parse_args()

    header = ["n<=", "m<=", "classes"] + [q.value for q in Quadrant] + ["secs"]
    print("\t".join(header))
    for n in range(1, args.max_vars + 1):
        for m in range(1, args.max_clauses + 1):
            started = time.perf_counter()
            report = verify_sufficiency(n, m)
            row = [n, m, report.total] + [report[q] for q in Quadrant]
            print("\t".join(map(str, row)) + f"\t{time.perf_counter() - started:.2f}")


if __name__ == "__main__":
    main()
