"""Compare the containment search with the brute-force closure oracle on
every pair of graphs up to a given order."""
import argparse
import time

from vminor.oracles import all_graphs, brute_is_minor
from vminor.search import is_pivot_minor, is_vertex_minor


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    a = ap.parse_args()
    graphs = [g for n in range(a.max_n + 1) for g in all_graphs(n)]
    for name, search, pivots in (("vertex-minor", is_vertex_minor, False), ("pivot-minor", is_pivot_minor, True)):
        t = time.perf_counter()
        total = bad = 0
        for h in graphs:
            for p in graphs:
                if p.order > h.order:
                    continue
                total += 1
                bad += (search(p, h) is not None) != brute_is_minor(p, h, pivots)
        print(f"{name}: {total} pairs, {bad} disagreements, {time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main()
