#!/usr/bin/env python3
"""Time the pruned counting path against plain enumerate-and-rectify, and check they agree."""
import argparse
import random
import time

from cominrule.poset import build_box_poset
from cominrule.schubert import _LRC_CACHE, lrc, lrc_naive
from cominrule.shapes import all_shapes


def sample(space, n, rng, max_size):
    S = all_shapes(space)
    out = []
    while len(out) < n:
        nu = rng.choice(S)
        lam = rng.choice([s for s in S if s <= nu])
        if len(nu) - len(lam) > max_size:
            continue
        mus = [m for m in S if len(m) == len(nu) - len(lam)]
        out.append((lam, rng.choice(mus), nu))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("spaces", nargs="*", default=["Gr:4,8", "LG:5", "QD:7", "E6", "E7"])
    ap.add_argument("-n", type=int, default=40)
    ap.add_argument("--max-size", type=int, default=10, help="largest skew shape fed to the naive path")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"{'space':8} {'triples':>7} {'fast ms':>9} {'naive ms':>10} {'speedup':>8} agree")
    for sp in args.spaces:
        build_box_poset(sp)
        trip = sample(sp, args.n, rng, args.max_size)
        times = []
        results = []
        for f in (lrc, lrc_naive):
            _LRC_CACHE.clear()
            t0 = time.perf_counter()
            results.append([f(*t) for t in trip])
            times.append((time.perf_counter() - t0) * 1000)
        speed = times[1] / times[0] if times[0] else float("inf")
        print(f"{sp:8} {len(trip):7d} {times[0]:9.1f} {times[1]:10.1f} {speed:8.1f} {results[0] == results[1]}")


if __name__ == "__main__":
    main()
