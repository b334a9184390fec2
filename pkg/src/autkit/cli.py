"""Command-line frontend: graph generation, automorphism groups, canonical
forms, isomorphism testing, figure rendering, and the Petersen/S5 check.

Exit codes: 0 success (or VERIFIED), 1 negative mathematical result
(non-isomorphic / FALSIFIED), 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .graphs import (
    Graph,
    Graph6Error,
    graph6_decode,
    graph6_encode,
    johnson_general,
    kneser,
    petersen_classic,
    petersen_layout,
    petersen_subsets,
    to_dot,
)
from .perms import schreier_sims
from .search import are_isomorphic, automorphism_group, canonical_form
from .verify import verify_petersen


def _read_graph(path: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    return graph6_decode(text)


def _emit(g: Graph, fmt: str) -> None:
    if fmt == "graph6":
        print(graph6_encode(g))
    else:
        sys.stdout.write(to_dot(g))


def cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    given = {flag for flag, value in (("-n", args.n), ("-k", args.k), ("-t", args.t)) if value is not None}
    if family == "johnson":
        if given != {"-n", "-k", "-t"}:
            raise ValueError("johnson requires -n, -k and -t")
        g = johnson_general(args.n, args.k, args.t)
    elif family == "kneser":
        if given != {"-n", "-k"}:
            raise ValueError("kneser requires -n and -k (and no -t)")
        g = kneser(args.n, args.k)
    elif family == "petersen-subsets":
        if given:
            raise ValueError("petersen-subsets takes no parameters")
        g = petersen_subsets()
    else:
        if given:
            raise ValueError("petersen-classic takes no parameters")
        g = petersen_classic()
    _emit(g, args.format)
    return 0


def cmd_aut(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    gens = automorphism_group(g)
    for gen in gens:
        print(gen.cycle_string())
    print(f"order {schreier_sims(gens).order()}")
    return 0


def cmd_canon(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    print(canonical_form(g).text())
    return 0


def cmd_iso(args: argparse.Namespace) -> int:
    g1 = _read_graph(args.input_a)
    g2 = _read_graph(args.input_b)
    sigma = are_isomorphic(g1, g2)
    if sigma is None:
        print("non-isomorphic")
        return 1
    print(" ".join(f"{v + 1}->{sigma(v) + 1}" for v in range(sigma.degree)))
    return 0


def cmd_verify_petersen(args: argparse.Namespace) -> int:
    report = verify_petersen(run_brute=args.brute)
    stats = report.graph_stats
    print(
        "graph: n={n} edges={edges} regular_degree={regular_degree} "
        "girth={girth} diameter={diameter}".format(**stats)
    )
    for source, image in report.phi_generator_images.items():
        print(f"phi[{source}] = {image}")
    print(f"homomorphism pairs checked: {report.homomorphism_checked}")
    print(f"kernel trivial: {'yes' if report.kernel_trivial else 'no'}")
    print(f"image order {report.image_order}")
    print(f"search order {report.aut_order_search}")
    if report.aut_order_brute is not None:
        print(f"brute order {report.aut_order_brute}")
    print(report.verdict)
    if args.json is not None:
        with open(args.json, "w", encoding="ascii") as fh:
            fh.write(report.to_json())
    return 0 if report.verdict == "VERIFIED" else 1


def cmd_render(args: argparse.Namespace) -> int:
    layout = petersen_layout() if args.layout == "default" else None
    dot = to_dot(petersen_subsets(), layout)
    if args.output is None:
        sys.stdout.write(dot)
    else:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(dot)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autkit",
        description="Permutation-group and graph-automorphism toolkit for small graphs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph family")
    p_gen.add_argument("family", choices=["johnson", "kneser", "petersen-subsets", "petersen-classic"])
    p_gen.add_argument("-n", type=int, default=None)
    p_gen.add_argument("-k", type=int, default=None)
    p_gen.add_argument("-t", type=int, default=None)
    p_gen.add_argument("--format", choices=["graph6", "dot"], default="graph6")
    p_gen.set_defaults(func=cmd_gen)

    p_aut = sub.add_parser("aut", help="automorphism generators and group order")
    p_aut.add_argument("input", nargs="?", default="-", help="graph6 file, or - for stdin")
    p_aut.set_defaults(func=cmd_aut)

    p_canon = sub.add_parser("canon", help="canonical certificate")
    p_canon.add_argument("input", nargs="?", default="-", help="graph6 file, or - for stdin")
    p_canon.set_defaults(func=cmd_canon)

    p_iso = sub.add_parser("iso", help="explicit isomorphism between two graphs")
    p_iso.add_argument("input_a", help="graph6 file, or - for stdin")
    p_iso.add_argument("input_b", help="graph6 file, or - for stdin")
    p_iso.set_defaults(func=cmd_iso)

    p_verify = sub.add_parser("verify-petersen", help="certify Aut(Petersen) is S5")
    p_verify.add_argument("--brute", action="store_true", help="also run the exhaustive 10! scan")
    p_verify.add_argument("--json", metavar="PATH", default=None, help="write the JSON report here")
    p_verify.set_defaults(func=cmd_verify_petersen)

    p_render = sub.add_parser("render", help="DOT drawing of the subset-model Petersen graph")
    p_render.add_argument("--layout", choices=["default", "none"], default="default")
    p_render.add_argument("-o", "--output", metavar="PATH", default=None)
    p_render.set_defaults(func=cmd_render)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
