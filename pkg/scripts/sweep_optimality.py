#!/usr/bin/env python3
"""Exhaustive optimality sweep: minimum untangler vs. brute-force oracle.

Enumerates every almost-planar drawing of every connected outerplanar graph
at the given size (one per rotation class), compares the algorithmic minimum
against the oracle, and tabulates optimum values.
"""

import argparse
import time
from collections import Counter

import untangling as ut


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=6, help="vertex count (exhaustive; keep <= 7)")
    ap.add_argument("--also-edge-fixed", action="store_true")
    args = ap.parse_args()

    t0 = time.time()
    count = 0
    optima: Counter = Counter()
    for d in ut.enumerate_almost_planar_instances(args.n):
        exact = ut.exact_min_untangle(d)
        rep = ut.verify_untangling(d, ut.min_untangle(d))
        assert rep.planar_ok and rep.moved_count == exact.moved_count, (d.graph.edges, d.order)
        optima[exact.moved_count] += 1
        if args.also_edge_fixed:
            for cand in ut.classify(d).candidates:
                got = ut.verify_untangling(d, ut.edge_fixed_untangle(d, cand.edge)).moved_count
                want = ut.exact_min_untangle_edge_fixed(d, cand.edge)
                assert got == want, (d.graph.edges, d.order, cand.edge)
        count += 1

    print(f"n={args.n}: {count} almost-planar drawings, all optimal, {time.time() - t0:.1f}s")
    print("moves  #instances")
    for k in sorted(optima):
        print(f"{k:5d}  {optima[k]}")


if __name__ == "__main__":
    main()
