"""Command-line surface: reproducible enumeration, theorem sweeps, and
one-shot queries against single graphs.

Exit codes: 0 success, 2 usage or malformed input, 3 search budget
exceeded.  Every run with identical inputs produces byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .constructions import (
    CockadeRecipe,
    build_cockade,
    cockade,
    exceptional_graph,
    k10_catalog,
    random_cockade_recipe,
)
from .corpus import enumerate_graphs, ingest, parse_filter
from .graphs import (
    Graph,
    complete_graph,
    complete_multipartite,
    graph6_decode,
    graph6_encode,
)
from .minors import (
    SearchBudgetExceeded,
    find_minor,
    hadwiger_number,
    petersen_family,
)
from .planarity import apex_embedding, apex_vertices, phi
from .verifier import (
    THEOREM_IDS,
    exists_triangle_free_preimage,
    run_theorem,
)

BUDGET_EXIT = 3


def _parse_graph(text: str) -> Graph:
    """Accept a graph6 string or a named graph: Kn, K{a,b,...}, petersen."""
    t = text.strip()
    if t == "petersen":
        from .minors import petersen_graph

        return petersen_graph()
    if t.startswith("K"):
        body = t[1:]
        try:
            if "," in body:
                return complete_multipartite([int(x) for x in body.split(",")])
            return complete_graph(int(body))
        except ValueError:
            pass
    return graph6_decode(t)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="minorbounds",
        description="verify extremal edge bounds for graphs with excluded minors",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="non-isomorphic graphs as graph6 lines")
    p_enum.add_argument("-n", type=int, required=True, help="vertex count (1..10)")
    p_enum.add_argument(
        "--filter",
        action="append",
        default=[],
        help="triangle-free | connected | all | min-vertices=K | no-Kp-minor",
    )
    p_enum.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="sweep a theorem over a corpus")
    p_verify.add_argument("theorem", choices=sorted(set(THEOREM_IDS)))
    p_verify.add_argument("--p", type=int, default=None, help="clique order parameter")
    p_verify.add_argument("--n-max", type=int, default=7)
    p_verify.add_argument("--n-min", type=int, default=1)
    p_verify.add_argument("--corpus", default=None, help="graph6 file instead of builtin")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--out", default=None)

    p_had = sub.add_parser("hadwiger", help="largest p with a K_p-minor")
    p_had.add_argument("graph", help="graph6 or named graph")
    p_had.add_argument("--budget", type=int, default=None)

    p_minor = sub.add_parser("minor", help="branch-set certificate or null")
    p_minor.add_argument("host", help="graph6 or named graph")
    p_minor.add_argument("pattern", help="graph6 or named graph (K5, K3,3, petersen)")
    p_minor.add_argument("--budget", type=int, default=None)

    p_apex = sub.add_parser("apex", help="vertices whose removal leaves a planar graph")
    p_apex.add_argument("graph")

    p_phi = sub.add_parser("phi", help="exact face potential for an apex choice")
    p_phi.add_argument("graph")
    p_phi.add_argument("apex", type=int)
    p_phi.add_argument("--embedding", action="store_true", help="also print the rotation system")

    p_cock = sub.add_parser("cockade", help="build a cockade and print graph6")
    p_cock.add_argument("base", help="graph6 or named graph, e.g. K2,2,2,2,2")
    p_cock.add_argument("--k", type=int, required=True)
    p_cock.add_argument("--pieces", type=int, required=True)
    p_cock.add_argument("--seed", type=int, default=None, help="randomize the gluing recipe")
    p_cock.add_argument("--out", default=None)

    p_cat = sub.add_parser("catalog", help="named graph families")
    p_cat.add_argument("which", choices=["k10", "petersen", "exceptional"])
    p_cat.add_argument("--v", type=int, default=None, help="order for exceptional graphs")
    p_cat.add_argument("--out", default=None)

    p_pre = sub.add_parser("preimage", help="triangle-free contraction preimage test")
    p_pre.add_argument("graph")
    p_pre.add_argument("k", type=int)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _dispatch(args)
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BUDGET_EXIT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "enumerate":
        filters = [parse_filter(f) for f in args.filter]
        lines = [
            graph6_encode(g).decode("ascii")
            for g in enumerate_graphs(args.n, filters)
        ]
        _emit("\n".join(lines), args.out)
        return 0

    if args.command == "verify":
        if args.corpus is not None:
            graphs = list(ingest(args.corpus))
            report = run_theorem(
                args.theorem, p=args.p, graphs=graphs, corpus=args.corpus
            )
        else:
            report = run_theorem(
                args.theorem,
                p=args.p,
                n_max=args.n_max,
                n_min=args.n_min,
                jobs=args.jobs,
            )
        _emit(report.to_json(), args.out)
        return 0

    if args.command == "hadwiger":
        g = _parse_graph(args.graph)
        print(hadwiger_number(g, budget=args.budget))
        return 0

    if args.command == "minor":
        host = _parse_graph(args.host)
        pattern = _parse_graph(args.pattern)
        model = find_minor(host, pattern, budget=args.budget)
        print(json.dumps(model.to_dict() if model is not None else None))
        return 0

    if args.command == "apex":
        g = _parse_graph(args.graph)
        print(json.dumps(apex_vertices(g)))
        return 0

    if args.command == "phi":
        g = _parse_graph(args.graph)
        emb = apex_embedding(g, args.apex)
        value: Fraction = phi(g, args.apex, emb)
        if args.embedding:
            print(
                json.dumps(
                    {
                        "phi": f"{value.numerator}/{value.denominator}",
                        "rotation": emb.to_rotation_dict(),
                        "face_sizes": emb.face_sizes(),
                    },
                    indent=2,
                )
            )
        else:
            print(f"{value.numerator}/{value.denominator}")
        return 0

    if args.command == "cockade":
        base = _parse_graph(args.base)
        if args.seed is None:
            g = cockade(base, args.k, args.pieces)
        else:
            recipe: CockadeRecipe = random_cockade_recipe(
                base, args.k, args.pieces, seed=args.seed
            )
            g = build_cockade(recipe)
        _emit(graph6_encode(g).decode("ascii"), args.out)
        return 0

    if args.command == "catalog":
        if args.which == "petersen":
            lines = [graph6_encode(g).decode("ascii") for g in petersen_family()]
        elif args.which == "k10":
            lines = [
                f"{name}\t{graph6_encode(g).decode('ascii')}"
                for name, g in k10_catalog()
            ]
        else:
            v = args.v if args.v is not None else 7
            lines = []
            from itertools import combinations as _comb

            for r in range(v - 3):
                for subset in _comb(range(1, v - 3), r):
                    g = exceptional_graph(v, subset)
                    lines.append(graph6_encode(g).decode("ascii"))
        _emit("\n".join(lines), args.out)
        return 0

    if args.command == "preimage":
        g = _parse_graph(args.graph)
        print("true" if exists_triangle_free_preimage(g, args.k) else "false")
        return 0

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    raise SystemExit(main())
