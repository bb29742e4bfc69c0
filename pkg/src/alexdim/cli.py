"""Command-line interface.

Exit status: 0 success, 1 parse or validation error, 2 internal
disagreement between independent computations, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bench
from .dimension import height, krull_dimension_bruteforce
from .enumeration import census_rows, rows_to_csv, summarize
from .errors import CarrierTooLarge, ResourceGuard, SpaceError, TheoremViolation
from .irreducible import irreducible_closed_sets
from .quotient import kolmogorov_quotient, to_dot
from .space import Preorder
from .spaceio import parse_document, read_document, to_preorder
from .verify import verify_all

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_DISAGREE = 2
EXIT_GUARD = 3


def _load(args) -> Preorder:
    if args.input == "-":
        doc = parse_document(sys.stdin.read(), "<stdin>")
    else:
        doc = read_document(args.input)
    return to_preorder(doc, close=args.close)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_dim(args) -> int:
    p = _load(args)
    if args.mode == "fast":
        h = height(p)
        _emit(args, {"height": h}, str(h))
        return EXIT_OK
    if args.mode == "bruteforce":
        k = krull_dimension_bruteforce(p)
        _emit(args, {"krull": k}, str(k))
        return EXIT_OK
    k = krull_dimension_bruteforce(p)
    h = height(p)
    agree = k == h
    verdict = "agree" if agree else "DISAGREE"
    _emit(args, {"krull": k, "height": h, "agree": agree}, f"krull={k} height={h} {verdict}")
    return EXIT_OK if agree else EXIT_DISAGREE


def cmd_height(args) -> int:
    h = height(_load(args))
    _emit(args, {"height": h}, str(h))
    return EXIT_OK


def cmd_quotient(args) -> int:
    p = _load(args)
    q = kolmogorov_quotient(p)
    if args.dot:
        sys.stdout.write(to_dot(q))
        return EXIT_OK
    classes = [q.poset.label(c) for c in range(q.poset.n)]
    order = [(c, d) for c, d in q.poset.pairs() if c != d]
    payload = {
        "classes": [[p.label(x) for x in m] for m in q.class_members],
        "pi": {p.label(x): c for x, c in enumerate(q.pi)},
        "order": [[c, d] for c, d in order],
    }
    lines = [f"classes {q.poset.n}"]
    lines += [f"{c} {name}" for c, name in enumerate(classes)]
    lines.append("pi " + " ".join(f"{p.label(x)}={c}" for x, c in enumerate(q.pi)))
    lines.append("order " + " ".join(f"{classes[c]}<{classes[d]}" for c, d in order))
    _emit(args, payload, "\n".join(line.rstrip() for line in lines))
    return EXIT_OK


def cmd_irreducibles(args) -> int:
    p = _load(args)
    status = EXIT_OK
    lines, payload = [], []
    for a in irreducible_closed_sets(p):
        generators = [x for x in range(p.n) if p.down[x] == a.mask]
        if not generators:
            status = EXIT_DISAGREE
        text = a.format(p.labels)
        lines.append("=".join([text] + ["cl{" + p.label(x) + "}" for x in generators]))
        payload.append(
            {"set": [p.label(x) for x in a], "generators": [p.label(x) for x in generators]}
        )
    _emit(args, {"irreducibles": payload}, "\n".join(lines))
    return status


def cmd_verify(args) -> int:
    results = verify_all(args.max_n, allow_large=args.allow_large)
    ok = all(r.ok for r in results)
    if args.json:
        print(json.dumps({
            "ok": ok,
            "levels": [
                {"n": r.n, "spaces": r.spaces, "seconds": round(r.seconds, 3),
                 "failures": [{"space_id": i, "checks": c} for i, c in r.failures]}
                for r in results
            ],
        }, sort_keys=True))
    else:
        for r in results:
            verdict = "all agree" if r.ok else f"{len(r.failures)} FAILED"
            print(f"{r.spaces} spaces at n={r.n}, {verdict} ({r.seconds:.2f} s)")
            for i, checks in r.failures:
                print(f"  space {i}: {','.join(checks)}")
        print(f"total {sum(r.spaces for r in results)} spaces, {'ok' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_enumerate(args) -> int:
    rows = list(census_rows(args.n, allow_large=args.allow_large, posets_only=args.posets))
    if args.json:
        print(json.dumps(summarize(rows), sort_keys=True))
    else:
        sys.stdout.write(rows_to_csv(rows))
    return EXIT_OK


def cmd_bench(args) -> int:
    report = bench.run(args.points, args.edges, args.seed, max_elements=args.max_elements)
    if args.json:
        payload = {line.split("=")[0]: int(line.split("=")[1]) for line in report.lines()}
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(report.lines()))
    # wall time varies run to run, so it stays off stdout
    print(f"height computed in {report.seconds:.3f} s", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alexdim", description="Krull dimension and height of finite spaces."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def space_command(name: str, func, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("input", help="JSON space document, or - for stdin")
        sp.add_argument("--close", action="store_true",
                        help="take the reflexive-transitive closure of the leq pairs")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = space_command("dim", cmd_dim, "Krull dimension of a space")
    sp.add_argument("--mode", choices=("fast", "bruteforce", "both"), default="both")
    space_command("height", cmd_height, "height of the specialisation preorder")
    sp = space_command("quotient", cmd_quotient, "Kolmogorov quotient")
    sp.add_argument("--dot", action="store_true", help="print the Hasse diagram as DOT")
    space_command("irreducibles", cmd_irreducibles, "irreducible closed sets")

    sp = sub.add_parser("verify", help="check every space on up to K points")
    sp.add_argument("--max-n", type=int, default=4, metavar="K")
    sp.add_argument("--allow-large", action="store_true", help="permit K = 6")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("enumerate", help="census of all spaces on N points")
    sp.add_argument("n", type=int)
    sp.add_argument("--posets", action="store_true", help="only T0 spaces")
    sp.add_argument("--allow-large", action="store_true", help="permit N = 6")
    sp.add_argument("--json", action="store_true", help="print the summary instead of CSV rows")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("bench", help="time the height computation on a random preorder")
    sp.add_argument("--points", type=int, required=True)
    sp.add_argument("--edges", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-elements", type=int, default=bench.DEFAULT_MAX_ELEMENTS)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except TheoremViolation as exc:
        print(f"disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (ResourceGuard, CarrierTooLarge) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
