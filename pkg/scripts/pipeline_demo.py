"""Run both pipelines on random connected graphs and tabulate outcomes."""
import argparse
import collections

from vminor.extraction import pipeline_cycle, pipeline_fan
from vminor.generators import random_connected


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=14)
    ap.add_argument("--p", type=float, default=0.25)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    tally = collections.Counter()
    for s in range(a.seed, a.seed + a.count):
        g = random_connected(a.n, a.p, s)
        for k in (2, 3, 4):
            tally[("fan", k, bool(pipeline_fan(g, k)))] += 1
        for k in (3, 4, 5, 6):
            tally[("cycle", k, bool(pipeline_cycle(g, k)))] += 1
    for what, k in sorted({(w, k) for w, k, _ in tally}):
        hit = tally[(what, k, True)]
        print(f"{what:5s} k={k}: {hit}/{hit + tally[(what, k, False)]} certified")


if __name__ == "__main__":
    main()
