"""Biclique counts of random connected twin-free graphs.

Prints a histogram of the biclique count per order and the smallest count
seen, for comparison with the small-n lower bounds checked by the sweep.
"""

import argparse
import random
import statistics
from collections import Counter

from kbdynamics.bicliques import enumerate_bicliques
from kbdynamics.graph import to_graph6
from kbdynamics.harness import random_twin_free


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+", default=[10, 11, 12])
    ap.add_argument("--samples", type=int, default=1000, help="samples per order")
    ap.add_argument("--seed", type=int, default=20240611)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    for n in args.orders:
        hist = Counter()
        smallest = None
        for _ in range(args.samples):
            g = random_twin_free(n, rng)
            k = len(enumerate_bicliques(g))
            hist[k] += 1
            if smallest is None or k < smallest[0]:
                smallest = (k, to_graph6(g))
        median = statistics.median(hist.elements())
        print(f"n={n}: min={min(hist)} max={max(hist)} median={median} smallest={smallest[1]}")


if __name__ == "__main__":
    main()
