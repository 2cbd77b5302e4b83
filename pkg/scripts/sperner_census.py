"""Statistics of random Sperner colorings on iterated barycentric subdivisions.

For each (n, k) draws random valid colorings and reports the distribution of
the number of full cells, the face-count identity and the length of the
path found by following the door graph.
"""
import argparse
from collections import Counter

import numpy as np

from spernerkit.complex import standard_simplex
from spernerkit.sperner import build_graph, enumerate_full_cells, face_counts, follow_path, random_coloring
from spernerkit.subdivision import iterated_barycentric


def path_length(g):
    prev, cur, steps = None, g.start, 0
    while True:
        nxt = [u for u in g.adjacency[cur] if u != prev]
        if not nxt:
            return steps
        prev, cur, steps = cur, nxt[0], steps + 1


def census(n, k, samples, rng):
    sub = iterated_barycentric(standard_simplex(n), k)
    counts = Counter()
    lengths = []
    balanced = True
    for _ in range(samples):
        col = random_coloring(sub, rng)
        counts[len(enumerate_full_cells(col))] += 1
        balanced &= all(face_counts(col, i).balanced for i in range(n + 1))
        g = build_graph(col)
        follow_path(g)
        lengths.append(path_length(g))
    return sub.refined.complex.count(n), counts, balanced, lengths


def main():
    ap = argparse.ArgumentParser(description="Random Sperner coloring census")
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--shapes", nargs="+", default=["1:2", "2:1", "2:2", "3:1", "3:2"], help="n:k pairs")
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    for shape in args.shapes:
        n, k = (int(x) for x in shape.split(":"))
        cells, counts, balanced, lengths = census(n, k, args.samples, rng)
        odd = all(c % 2 for c in counts)
        dist = " ".join(f"{c}:{counts[c]}" for c in sorted(counts))
        print(f"n={n} k={k} cells={cells} all_odd={odd} face_identity={balanced} "
              f"mean_path={np.mean(lengths):.1f} max_path={max(lengths)}")
        print(f"  full-cell counts {dist}")


if __name__ == "__main__":
    main()
