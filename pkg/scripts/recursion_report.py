#!/usr/bin/env python3
"""Build the three exceptional embeddings and check the recursion identity on every admissible triple."""
import argparse
import json

from cominrule.verify.recursion import RECURSIONS, build_recursion, check_recursion


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=list(RECURSIONS))
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    out = []
    for name in args.names:
        rec = build_recursion(name)
        res = check_recursion(rec)
        row = {**rec.summary(), "checked": res["checked"], "violations": len(res["violations"]),
               "elapsed_ms": res["elapsed_ms"]}
        out.append(row)
        if not args.json:
            print(f"{name}: {row['small']} -> {row['big']}, delta = s_{'s_'.join(map(str, row['delta']))}")
            print(f"  image {row['image']} boxes, L {row['L']}, Gamma {row['Gamma']}; image shape {row['image_tuple']}")
            print(f"  {row['checked']} triples checked, {row['violations']} violations, {row['elapsed_ms']:.0f} ms")
            for v in res["violations"][:5]:
                print("   ", v)
    if args.json:
        print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
