#!/usr/bin/env python3
"""Print the degree of every space (number of standard fillings of the full poset), two ways."""
import argparse
import time

from cominrule.poset import build_box_poset
from cominrule.shapes import Shape, SkewShape
from cominrule.tableaux import count_syt, iter_syt

DEFAULT = ["Gr:2,4", "Gr:3,6", "LG:3", "LG:4", "QB:4", "QD:5", "QD:6", "OG:5", "OG:6", "E6", "E7"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("spaces", nargs="*", default=DEFAULT)
    ap.add_argument("--no-enumerate", action="store_true", help="skip the slow path")
    args = ap.parse_args()
    print(f"{'space':8} {'boxes':>5} {'recursion':>12} {'enumerated':>12} {'ms':>8}")
    for sp in args.spaces:
        P = build_box_poset(sp)
        t0 = time.perf_counter()
        full = Shape(P, P.full)
        a = count_syt(full)
        b = "-" if args.no_enumerate else sum(1 for _ in iter_syt(SkewShape(Shape(P, 0), full)))
        ms = (time.perf_counter() - t0) * 1000
        flag = "" if b in ("-", a) else "  MISMATCH"
        print(f"{sp:8} {len(P):5d} {a:12d} {b!s:>12} {ms:8.1f}{flag}")


if __name__ == "__main__":
    main()
