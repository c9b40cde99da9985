"""Wall time of detect_any as the clause count grows (n fixed)."""
import argparse
import time

from satpatterns.miner import random_instance
from satpatterns.patterns import detect_any


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--vars", type=int, default=10_000)
    parser.add_argument("--sizes", type=int, nargs="+", default=[10_000, 30_000, 100_000, 300_000])
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    print("m\tsecs\tus_per_clause")
    for m in args.sizes:
        inst = random_instance(args.vars, m, seed=m)
        best = float("inf")
        for _ in range(args.repeats):
            started = time.perf_counter()
            detect_any(inst)
            best = min(best, time.perf_counter() - started)
        print(f"{inst.m}\t{best:.3f}\t{1e6 * best / max(inst.m, 1):.2f}")


if __name__ == "__main__":
    main()
