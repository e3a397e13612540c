"""Command-line front end: flag parsing, report emission, deterministic bytes.

One verb per library capability; every report is a single JSON document with
sorted keys (JSONL for node streams), so identical invocations give identical
bytes.  Exit codes: 0 success, 2 invalid input, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import domains, mutations, necklaces, octahedron
from .cliques import Collection, purity_report
from .ground import Subset, is_chord_separated, is_weakly_separated

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3


def emit_report(result: Any, fmt: str = "json") -> bytes:
    """Serialize a report deterministically: sorted keys, canonical order, one newline."""
    if fmt == "json":
        return (json.dumps(result, sort_keys=True, separators=(",", ":")) + "\n").encode()
    if fmt == "jsonl":
        lines = [json.dumps(row, sort_keys=True, separators=(",", ":")) for row in result]
        return ("\n".join(lines) + "\n").encode() if lines else b""
    if fmt == "csv":
        rows = result if isinstance(result, list) else sorted(result.items())
        out = []
        for key, value in rows:
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True, separators=(",", ":"))
            out.append(f"{key},{value}")
        return ("\n".join(out) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")


def _parse_subset(text: str, n: int) -> Subset:
    return Subset.parse(text, n)


def _threads(value: str | None) -> int:
    if value is None:
        value = os.environ.get("THREADS", "1")
    count = int(value)
    if count < 1:
        raise ValueError("thread count must be at least 1")
    return count


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weaksep",
        description="Weakly separated collections: purity, distances, necklaces, moves",
    )
    parser.add_argument("--threads", help="worker count (engine is sequential; accepted for compatibility)")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check", help="separation predicates for one pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("domain", help="all same-size subsets compatible with a pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", required=True)
    p.add_argument("--j", required=True)
    p.add_argument("--format", default="json", choices=["json", "jsonl"])

    p = sub.add_parser("purity", help="maximal-clique size census of a domain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i")
    p.add_argument("--j")
    p.add_argument("--k", type=int)
    p.add_argument("--powerset", action="store_true")
    p.add_argument("--relation", default="weak", choices=["weak", "chord"])
    p.add_argument("--stream", action="store_true")
    p.add_argument("--format", default="json", choices=["json", "jsonl"])

    p = sub.add_parser("distance", help="cluster distance of a pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", required=True)
    p.add_argument("--j", required=True)
    p.add_argument("--method", default="exact", choices=["exact", "formula"])

    p = sub.add_parser("mutdist", help="mutation distance by bidirectional search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", required=True)
    p.add_argument("--j", required=True)
    p.add_argument("--budget", type=int, default=mutations.DEFAULT_BUDGET)
    p.add_argument("--big", action="store_true")

    p = sub.add_parser("necklace", help="necklace of a permutation or of a half-size set")
    p.add_argument("--n", type=int)
    p.add_argument("--perm")
    p.add_argument("--k", type=int)
    p.add_argument("--colors", default="")
    p.add_argument("--a")

    p = sub.add_parser("lr", help="purity of the left/right domain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--chains", action="store_true")

    p = sub.add_parser("chord", help="chord-separation census of the power set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--u")
    p.add_argument("--v")
    p.add_argument("--stream", action="store_true")

    p = sub.add_parser("octahedron", help="lattice counts of a four-run pair")
    p.add_argument("--n", type=int)
    p.add_argument("--a")
    p.add_argument("--p")

    p = sub.add_parser("explore", help="breadth-first closure under square moves")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed")
    p.add_argument("--budget", type=int, default=mutations.DEFAULT_BUDGET)
    p.add_argument("--format", default="json", choices=["json", "jsonl"])
    p.add_argument("--split", help="verify the projection laws under this 4-way split")

    return parser


def _cmd_check(args) -> tuple[int, bytes]:
    a = _parse_subset(args.a, args.n)
    b = _parse_subset(args.b, args.n)
    report = {
        "weakly_separated": is_weakly_separated(a, b),
        "chord_separated": is_chord_separated(a, b),
    }
    return EXIT_OK, emit_report(report)


def _cmd_domain(args) -> tuple[int, bytes]:
    i = _parse_subset(args.i, args.n)
    j = _parse_subset(args.j, args.n)
    dom = domains.build_domain_AIJ(i, j)
    if args.format == "jsonl":
        return EXIT_OK, emit_report(dom.to_json(), "jsonl")
    report = {"n": args.n, "i": i.to_json(), "j": j.to_json(), "size": len(dom), "sets": dom.to_json()}
    return EXIT_OK, emit_report(report)


def _purity_domain(args) -> Collection:
    import itertools

    chosen = [args.i is not None or args.j is not None, args.k is not None, args.powerset]
    if sum(chosen) != 1:
        raise ValueError("choose exactly one of --i/--j, --k, or --powerset")
    if args.powerset:
        return Collection.from_masks(range(1 << args.n), args.n)
    if args.k is not None:
        masks = []
        for combo in itertools.combinations(range(args.n), args.k):
            m = 0
            for bit in combo:
                m |= 1 << bit
            masks.append(m)
        return Collection.from_masks(masks, args.n)
    if args.i is None or args.j is None:
        raise ValueError("--i and --j must be given together")
    return domains.build_domain_AIJ(
        _parse_subset(args.i, args.n), _parse_subset(args.j, args.n)
    )


def _cmd_purity(args) -> tuple[int, bytes]:
    domain = _purity_domain(args)
    if args.format == "jsonl":
        from .cliques import build_compat_graph, enumerate_maximal_cliques

        cliques = enumerate_maximal_cliques(build_compat_graph(domain, args.relation))
        return EXIT_OK, emit_report([c.to_json() for c in cliques], "jsonl")
    report = purity_report(domain, args.relation, stream=args.stream)
    return EXIT_OK, emit_report(report.to_json())


def _cmd_distance(args) -> tuple[int, bytes]:
    i = _parse_subset(args.i, args.n)
    j = _parse_subset(args.j, args.n)
    result = domains.cluster_distance(i, j, args.method)
    report: dict[str, Any] = {"d": result.value}
    if not result.exact:
        report["upper_bound_only"] = True
    return EXIT_OK, emit_report(report)


def _cmd_mutdist(args) -> tuple[int, bytes]:
    i = _parse_subset(args.i, args.n)
    j = _parse_subset(args.j, args.n)
    result = mutations.mutation_distance(i, j, budget=args.budget, big=args.big)
    code = EXIT_BUDGET if result.budget_exhausted else EXIT_OK
    return code, emit_report(result.to_json())


def _cmd_necklace(args) -> tuple[int, bytes]:
    if args.perm is not None:
        if args.k is None:
            raise ValueError("--perm needs --k")
        images = [int(x) for x in args.perm.split(",")]
        colors = {}
        if args.colors:
            for piece in args.colors.split(","):
                key, _, val = piece.partition(":")
                colors[int(key)] = int(val)
        perm = necklaces.DecoratedPermutation.make(images, colors)
        k = args.k
        extra: dict[str, Any] = {}
    elif args.a is not None:
        if args.n is None:
            raise ValueError("--a needs --n")
        a = _parse_subset(args.a, args.n)
        part = domains.circle_partition(a)
        perm = necklaces.canonical_permutation(a)
        k = part.k
        extra = {"tau_a": list(necklaces.block_reversal_permutation(part.lengths))}
    else:
        raise ValueError("give either --perm with --k, or --a with --n")
    nk = necklaces.necklace_from_perm(perm, k)
    al, length = necklaces.length_of(perm, k)
    report = {
        "necklace": nk.to_json(),
        "connected": nk.connected,
        "alignments": al,
        "length": length,
        "k": k,
        **perm.to_json(),
        **extra,
    }
    return EXIT_OK, emit_report(report)


def _cmd_lr(args) -> tuple[int, bytes]:
    dom = domains.lr_domain(args.n)
    report = purity_report(dom, "weak").to_json()
    if args.chains:
        from .cliques import build_compat_graph, enumerate_maximal_cliques

        cliques = enumerate_maximal_cliques(build_compat_graph(dom, "weak"))
        report["chains"] = [
            [list(s) for s in domains.lr_chain(w, args.n).sets] for w in cliques
        ]
    return EXIT_OK, emit_report(report)


def _cmd_chord(args) -> tuple[int, bytes]:
    from math import comb

    dom = Collection.from_masks(range(1 << args.n), args.n)
    report = purity_report(dom, "chord", stream=args.stream).to_json()
    report["expected_size"] = sum(comb(args.n, t) for t in range(4))
    if (args.u is None) != (args.v is None):
        raise ValueError("--u and --v must be given together")
    if args.u is not None:
        u = _parse_subset(args.u, args.n)
        v = _parse_subset(args.v, args.n)
        from .cliques import build_compat_graph, enumerate_maximal_cliques

        lo, hi = 1 << 0, 1 << (args.n - 1)
        needed = []
        for base in (u.mask, v.mask):
            needed += [base, base | lo, base | hi, base | lo | hi]
        for w in enumerate_maximal_cliques(build_compat_graph(dom, "chord")):
            have = set(w.masks)
            if all(m in have for m in needed):
                chain = domains.chord_chain(w, u, v)
                report["chain"] = [s.to_json() for s in chain]
                report["witness_collection"] = w.to_json()
                break
        else:
            raise ValueError("no maximal chord separated collection holds the eight required sets")
    return EXIT_OK, emit_report(report)


def _cmd_octahedron(args) -> tuple[int, bytes]:
    if args.a is not None:
        if args.n is None:
            raise ValueError("--a needs --n")
        a = _parse_subset(args.a, args.n)
    elif args.p is not None:
        p = tuple(int(x) for x in args.p.split(","))
        if len(p) != 4:
            raise ValueError("--p needs four comma-separated lengths")
        if p[0] + p[2] != p[1] + p[3]:
            raise ValueError("run lengths must satisfy p1+p3 = p2+p4")
        elements = []
        pos = 1
        for idx, length in enumerate(p):
            if idx % 2 == 0:
                elements.extend(range(pos, pos + length))
            pos += length
        a = Subset.of(elements, sum(p))
    else:
        raise ValueError("give either --a with --n, or --p")
    return EXIT_OK, emit_report(octahedron.p4_counts(a).to_json())


def _cmd_explore(args) -> tuple[int, bytes]:
    if args.seed:
        seed = Collection(Subset.parse(part, args.n) for part in args.seed.split(";"))
    else:
        seed = mutations._grid_completion(
            Subset.of(range(1, args.k + 1), args.n), Subset.of(range(1, args.k + 1), args.n)
        )
    graph = mutations.explore_mutation_graph(seed, budget=args.budget)
    if args.format == "jsonl":
        rows = [
            [Subset(m, args.n).to_json() for m in node] for node in (graph.nodes or ())
        ]
        return EXIT_OK, emit_report(rows, "jsonl")
    report = graph.to_json()
    if args.split:
        split = tuple(int(x) for x in args.split.split(","))
        checked = 0
        consistent = True
        for node in graph.node_collections():
            if not octahedron.check_no_interior(node, split).ok:
                consistent = False
            for move in mutations.find_square_moves(node):
                checked += 1
                effect = octahedron.move_projection_effect(node, move, split)
                before = {v.coords for v in octahedron.phi(node, split)}
                child = mutations.apply_square_move(node, move)
                after = {v.coords for v in octahedron.phi(child, split)}
                if effect.kind == "unchanged":
                    consistent = consistent and before == after
                else:
                    src = octahedron.phi_subset(move.removed, split).coords
                    dst = octahedron.phi_subset(move.added, split).coords
                    consistent = consistent and effect.vector == tuple(
                        dst[t] - src[t] for t in range(4)
                    )
        report["projection_laws"] = {"moves_checked": checked, "consistent": consistent}
    return EXIT_OK, emit_report(report)


_COMMANDS = {
    "check": _cmd_check,
    "domain": _cmd_domain,
    "purity": _cmd_purity,
    "distance": _cmd_distance,
    "mutdist": _cmd_mutdist,
    "necklace": _cmd_necklace,
    "lr": _cmd_lr,
    "chord": _cmd_chord,
    "octahedron": _cmd_octahedron,
    "explore": _cmd_explore,
}


def run(argv: list[str]) -> int:
    """Parse, dispatch, and print one report; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    try:
        _threads(args.threads)
        code, payload = _COMMANDS[args.verb](args)
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BAD_INPUT
    sys.stdout.buffer.write(payload)
    sys.stdout.buffer.flush()
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
