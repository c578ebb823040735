"""Sweep incomplete fans (all apex sets with both ends) and report, per
(k, n), how often the gap case analysis produces C_k and which case fired."""
import argparse
import collections
import itertools

from vminor.extraction.cycles import _to_cycle, infer_fan
from vminor.generators import incomplete_fan
from vminor.graph import TraceBuilder


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, nargs="+", default=[3, 4, 5, 6])
    ap.add_argument("--max-n", type=int, default=13)
    a = ap.parse_args()
    for k in a.k:
        for n in range(k % 2 or 2, a.max_n + 1, 2):
            if n < 1:
                continue
            cases = collections.Counter()
            for mid in itertools.product((0, 1), repeat=n - 1):
                g = incomplete_fan(n, [0, n] + [i + 1 for i, b in enumerate(mid) if b])
                tb = TraceBuilder(g)
                cases[_to_cycle(tb, infer_fan(g), k) or "none"] += 1
            total = sum(cases.values())
            print(f"k={k} n={n:2d} solved {total - cases['none']:5d}/{total:<5d} " + ", ".join(f"{c}: {m}" for c, m in sorted(cases.items())))


if __name__ == "__main__":
    main()
