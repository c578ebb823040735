"""Print which cycles are pivot-minors of which, with the parity prediction."""
import argparse
import time

from vminor.claims import parity_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=10)
    a = ap.parse_args()
    t = time.perf_counter()
    table = parity_table(a.max_k)
    ks = range(4, a.max_k + 1)
    print("l\\k" + "".join(f"{k:>4}" for k in ks))
    for l in range(3, a.max_k):
        cells = []
        for k in ks:
            if l >= k:
                cells.append("   .")
                continue
            found, parity = table[(l, k)], (k - l) % 2 == 0
            mark = "!" if found != parity else ""
            cells.append(f"{('Y' if found else 'n') + mark:>4}")
        print(f"{l:>3}" + "".join(cells))
    off = sorted(p for p, f in table.items() if f != ((p[1] - p[0]) % 2 == 0))
    print(f"\n{len(table)} pairs in {time.perf_counter() - t:.2f}s; off-parity: {off or 'none'}")


if __name__ == "__main__":
    main()
