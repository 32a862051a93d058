"""Command line front end.

Exit status: 0 ok, 1 mathematical rejection, 2 usage error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .poset import SpaceSpecError, build_box_poset, popcount
from .roots import UnsupportedRootSystem
from .schubert import TableTooLarge, default_workers, full_table, lrc, lrc_naive, product_expand, structural_zero
from .shapes import Shape, ShapeError, SkewShape, all_shapes, parse_shape, print_shape
from .tableaux import TableauError, count_syt, enumerate_syt, rectify, tableau_from_cells
from .verify.suites import SUITES, UnknownSuite, check_cross_isomorphisms, run_suite


class Rejected(Exception):
    """Input is well formed but mathematically invalid."""


class UsageError(Exception):
    pass


def _space(text):
    try:
        return build_box_poset(text)
    except (SpaceSpecError, UnsupportedRootSystem) as exc:
        raise UsageError(str(exc)) from None


def _shape(text, P) -> Shape:
    try:
        return parse_shape(text, P)
    except ShapeError as exc:
        raise Rejected(str(exc)) from None


def _emit(args, obj, text=None):
    if args.json or text is None:
        print(json.dumps(obj))
    else:
        print(text)


def _threads(args) -> int:
    if args.threads:
        return args.threads
    return default_workers()


# --- subcommands --------------------------------------------------------------


def cmd_coeff(args):
    P = _space(args.space)
    lam, mu, nu = _shape(args.lam, P), _shape(args.mu, P), _shape(args.nu, P)
    zero = structural_zero(lam, mu, nu)
    if zero and args.strict:
        raise Rejected(f"structural zero: |lam|+|mu| = {len(lam) + len(mu)}, |nu| = {len(nu)}"
                       + ("" if lam <= nu else ", lam not inside nu"))
    c = (lrc_naive if args.naive else lrc)(lam, mu, nu)
    _emit(args, {"space": P.space, "lam": str(lam), "mu": str(mu), "nu": str(nu), "c": c, "structural_zero": zero}, str(c))


def cmd_expand(args):
    P = _space(args.space)
    lam, mu = _shape(args.lam, P), _shape(args.mu, P)
    out = {str(nu): c for nu, c in product_expand(lam, mu).items()}
    print(json.dumps(out))


def cmd_shapes(args):
    P = _space(args.space)
    shapes = [s for s in all_shapes(P) if args.size is None or len(s) == args.size]
    _emit(args, [str(s) for s in shapes], "\n".join(str(s) for s in shapes))


def cmd_syt(args):
    P = _space(args.space)
    outer = _shape(args.outer, P)
    inner = _shape(args.inner, P) if args.inner else Shape(P, 0)
    if not inner <= outer:
        raise Rejected(f"inner shape {inner} is not inside {outer}")
    sk = SkewShape(inner, outer)
    n = count_syt(sk)
    if args.count:
        _emit(args, {"count": n}, str(n))
        return
    ts = enumerate_syt(sk)
    if args.limit is not None:
        ts = ts[: args.limit]
    if args.json:
        print(json.dumps([t.cells() for t in ts]))
    else:
        print("\n\n".join(t.pretty() for t in ts))


def _read_tableau(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read tableau file: {exc}") from None
    for k in ("space", "labels"):
        if k not in data:
            raise UsageError(f"tableau file lacks the {k!r} field")
    P = _space(data["space"])
    inner = _shape(str(data.get("inner", "()")), P) if not isinstance(data.get("inner"), list) else _shape(data["inner"], P)
    try:
        T = tableau_from_cells(P, data["labels"], inner=inner.mask)
    except TableauError as exc:
        raise Rejected(str(exc)) from None
    if "outer" in data:
        outer = _shape(data["outer"] if isinstance(data["outer"], list) else str(data["outer"]), P)
        if outer.mask != T.outer:
            raise Rejected(f"labels do not fill {outer}/{inner}")
    return T


def _tableau_json(T):
    return {
        "space": T.poset.space,
        "inner": print_shape(Shape(T.poset, T.inner)),
        "outer": print_shape(Shape(T.poset, T.outer)),
        "labels": T.cells(),
    }


def cmd_rectify(args):
    T = _read_tableau(args.file)
    order = random.Random(args.seed) if args.order == "random" else args.order
    R = rectify(T, order)
    _emit(args, _tableau_json(R), f"{print_shape(R.shape)}\n{R.pretty()}")


def cmd_verify(args):
    overrides = {"corrupt": args.corrupt}
    if args.trials:
        overrides["trials"] = args.trials
    if args.suite == "isomorphism" and args.space is None:
        rep = check_cross_isomorphisms()
        reports = [rep]
    else:
        if args.space is None:
            raise UsageError("--space is required for this suite")
        P = _space(args.space)
        names = SUITES if args.suite == "all" else [args.suite]
        reports = []
        for name in names:
            try:
                reports.append(run_suite(P, name, seed=args.seed, **overrides))
            except UnknownSuite as exc:
                if args.suite == "all":
                    continue
                raise Rejected(str(exc)) from None
    if args.json:
        print(json.dumps([r.to_dict() for r in reports] if len(reports) > 1 else reports[0].to_dict()))
    else:
        print("\n".join(r.text() for r in reports))
    return 3 if any(not r.passed for r in reports) else 0


def cmd_table(args):
    P = _space(args.space)
    try:
        t = full_table(P, bound=args.bound, workers=_threads(args))
    except TableTooLarge as exc:
        raise Rejected(str(exc)) from None
    text = t.to_csv() if args.format == "csv" else t.to_json()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def hasse_picture(P) -> str:
    """Grid picture: o a box, * a short box, - and | the covers."""
    at = {g: i for i, g in enumerate(P.grid)}
    cmax = max(c for c, _ in P.grid)
    rmax = max(r for _, r in P.grid)
    lines = []
    for r in range(rmax, 0, -1):
        row = ""
        for c in range(1, cmax + 1):
            i = at.get((c, r))
            mark = " " if i is None else "*" if P.short[i] else "o"
            link = "-" if i is not None and (c - 1, r) in at else " "
            row += (link if c > 1 else "") + mark
        lines.append(row.rstrip())
        if r > 1:
            below = ""
            for c in range(1, cmax + 1):
                i = at.get((c, r))
                below += (" " if c > 1 else "") + ("|" if i is not None and (c, r - 1) in at else " ")
            lines.append(below.rstrip())
    return "\n".join(lines)


def cmd_poset(args):
    P = _space(args.space)
    boxes = [{"id": i, "column": c, "row": r, "root": list(P.boxes[i]), "short": P.short[i], "rotate": P.rotate[i]}
             for i, (c, r) in enumerate(P.grid)]
    if args.json:
        print(json.dumps({"space": P.space, "flavor": P.flavor, "type": P.rs.name, "node": P.node,
                          "boxes": boxes, "covers": [list(c) for c in P.covers]}))
        return
    print(f"{P.space}: {P.rs.name}, node {P.node}, {P.flavor}, {len(P)} boxes, {popcount(P.short_mask)} short")
    print(hasse_picture(P))
    print()
    for b in boxes:
        print(f"{b['id']:3d} ({b['column']},{b['row']}) root={''.join(map(str, b['root']))}"
              f"{' short' if b['short'] else ''} rotate->{b['rotate']}")


# --- parser -------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $COMINRULE_THREADS or the CPU count)")

    p = _Parser(prog="cominrule", description="Schubert structure constants of (co)minuscule flag varieties.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("coeff", parents=[common], help="one structure constant")
    c.add_argument("--space", required=True)
    c.add_argument("--lam", required=True)
    c.add_argument("--mu", required=True)
    c.add_argument("--nu", required=True)
    c.add_argument("--strict", action="store_true", help="reject structural zeros with exit status 1")
    c.add_argument("--naive", action="store_true", help="enumerate and rectify every filling")
    c.set_defaults(func=cmd_coeff)

    c = sub.add_parser("expand", parents=[common], help="expand a product of two classes")
    c.add_argument("--space", required=True)
    c.add_argument("--lam", required=True)
    c.add_argument("--mu", required=True)
    c.set_defaults(func=cmd_expand)

    c = sub.add_parser("shapes", parents=[common], help="list shapes")
    c.add_argument("--space", required=True)
    c.add_argument("--size", type=int)
    c.set_defaults(func=cmd_shapes)

    c = sub.add_parser("syt", parents=[common], help="list or count standard tableaux of a skew shape")
    c.add_argument("--space", required=True)
    c.add_argument("--outer", required=True)
    c.add_argument("--inner", default="")
    c.add_argument("--count", action="store_true")
    c.add_argument("--limit", type=int)
    c.set_defaults(func=cmd_syt)

    c = sub.add_parser("rectify", parents=[common], help="rectify a tableau read from a JSON file")
    c.add_argument("file")
    c.add_argument("--order", choices=["max", "min", "random"], default="max")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_rectify)

    c = sub.add_parser("verify", parents=[common], help="run a verification suite")
    c.add_argument("--space")
    c.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--trials", type=int)
    c.add_argument("--corrupt", action="store_true", help="inject a known error; the suite should then fail")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("table", parents=[common], help="export the full coefficient table")
    c.add_argument("--space", required=True)
    c.add_argument("--format", choices=["json", "csv"], default="json")
    c.add_argument("--output")
    c.add_argument("--bound", type=int, default=70)
    c.set_defaults(func=cmd_table)

    c = sub.add_parser("poset", parents=[common], help="print the box poset")
    c.add_argument("--space", required=True)
    c.set_defaults(func=cmd_poset)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads is not None and args.threads < 1:
        parser.print_usage(sys.stderr)
        print("cominrule: error: --threads must be positive", file=sys.stderr)
        return 2
    try:
        rc = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"cominrule: error: {exc}", file=sys.stderr)
        return 2
    except Rejected as exc:
        print(f"cominrule: {exc}", file=sys.stderr)
        return 1
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
