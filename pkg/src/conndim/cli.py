"""Command-line front end.

All subcommands emit a single JSON object on stdout (compact and
key-sorted, so identical invocations are byte-identical), except `gen`,
which emits a bare graph6 line so it can be piped straight into the other
subcommands.  Exit codes: 0 success, 1 bad input, 2 inconclusive solve.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .connectivity import kappa_matrix, local_connectivity, value_to_json
from .families import (ThresholdSequence, standard_graph, threshold_cdim_routed,
                       threshold_graph, triangle_chain, triangle_chain_cdim)
from .graphs import (EmptyGraphError, Graph, GraphFormatError, block_cut_tree,
                     parse_edge_list, parse_graph6, to_graph6)
from .resolver import is_resolving
from .satreduce import build_reduction, decide_sat, parse_dimacs
from .solver import (DEFAULT_BUDGET, BudgetExceeded, cdim_decompose,
                     cdim_exact, cdim_greedy, lower_bounds, mdim_exact)


def _emit(obj, pretty: bool) -> None:
    if pretty:
        out = json.dumps(obj, sort_keys=True, indent=2)
    else:
        out = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    sys.stdout.write(out + "\n")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graph(text: str, fmt: str) -> Graph:
    if fmt == "dimacs":
        raise ValueError("dimacs input only makes sense for reduce/sat")
    if fmt == "auto":
        stripped = text.strip()
        first = stripped.splitlines()[0].split() if stripped else []
        fmt = "edgelist" if first and first[0] == "n" else "graph6"
    if fmt == "edgelist":
        return parse_edge_list(text)
    return parse_graph6(text.strip())


def _parse_int_list(spec: str, flag: str) -> list[int]:
    try:
        return [int(tok) for tok in spec.split(",") if tok != ""]
    except ValueError:
        raise ValueError(f"{flag} expects comma-separated integers, "
                         f"got {spec!r}") from None


def _add_common(p: argparse.ArgumentParser, *, graph_input: bool = True,
                threads: bool = False) -> None:
    if graph_input:
        p.add_argument("input", nargs="?", default="-",
                       help="input file, or - for stdin (default)")
        p.add_argument("--format", choices=("auto", "graph6", "edgelist",
                                            "dimacs"), default="auto")
    p.add_argument("--pretty", action="store_true",
                   help="indent the JSON output")
    if threads:
        p.add_argument("--threads", type=int,
                       default=max(1, os.cpu_count() or 1),
                       help="worker threads (performance only; output is "
                            "identical at any setting)")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="conndim",
        description="local-connectivity landmark toolkit")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("kappa", help="local connectivity matrix (or one pair)")
    _add_common(p, threads=True)
    p.add_argument("--pair", help="single pair U,V instead of the matrix")

    p = sub.add_parser("check", help="is a landmark set resolving?")
    _add_common(p, threads=True)
    p.add_argument("--set", required=True, dest="landmarks",
                   help="comma-separated vertex list, e.g. 0,3,7")

    p = sub.add_parser("cdim", help="connectivity dimension")
    _add_common(p, threads=True)
    p.add_argument("--method", choices=("exact", "greedy", "decompose"),
                   default="exact")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="search node budget before giving up (exit 2)")

    p = sub.add_parser("mdim", help="metric (shortest-path) dimension")
    _add_common(p, threads=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("bounds", help="lower bounds and greedy upper bound")
    _add_common(p, threads=True)

    p = sub.add_parser("blocks", help="block-cut tree")
    _add_common(p)

    p = sub.add_parser("gen", help="generate a named graph (graph6 on stdout)")
    p.add_argument("kind", help="threshold | triangles | path | cycle | "
                                "complete | star | house | figure1 | figure5")
    p.add_argument("args", nargs="*",
                   help="size or bit sequence, e.g. 'threshold 1,1,0,1,1'")
    p.add_argument("--sidecar", metavar="FILE",
                   help="also write a JSON file with the predicted dimension")

    p = sub.add_parser("reduce", help="3-CNF to gadget graph (DIMACS input)")
    _add_common(p)

    p = sub.add_parser("sat", help="decide 3-SAT via the dimension criterion")
    _add_common(p, threads=True)
    return ap


def _cmd_kappa(ns) -> int:
    g = _load_graph(_read_input(ns.input), ns.format)
    if ns.pair is not None:
        u, v = _parse_int_list(ns.pair, "--pair")
        k = local_connectivity(g, u, v)
        _emit({"pair": [u, v], "kappa": value_to_json(k)}, ns.pretty)
        return 0
    km = kappa_matrix(g, threads=ns.threads)
    _emit(km.to_json_obj(), ns.pretty)
    return 0


def _cmd_check(ns) -> int:
    g = _load_graph(_read_input(ns.input), ns.format)
    landmarks = _parse_int_list(ns.landmarks, "--set")
    km = kappa_matrix(g, threads=ns.threads)
    verdict = is_resolving(km, landmarks)
    if verdict:
        _emit({"resolving": True}, ns.pretty)
    else:
        _emit({"resolving": False, "witness": list(verdict.witness)},
              ns.pretty)
    return 0


def _cmd_cdim(ns) -> int:
    g = _load_graph(_read_input(ns.input), ns.format)
    if ns.method == "greedy":
        result = cdim_greedy(g, threads=ns.threads)
    elif ns.method == "decompose":
        result = cdim_decompose(g, budget=ns.budget)
    else:
        result = cdim_exact(g, budget=ns.budget, threads=ns.threads)
    _emit(result.to_json_obj(), ns.pretty)
    return 0 if result.conclusive else 2


def _cmd_mdim(ns) -> int:
    g = _load_graph(_read_input(ns.input), ns.format)
    result = mdim_exact(g, budget=ns.budget, threads=ns.threads)
    _emit(result.to_json_obj(), ns.pretty)
    return 0 if result.conclusive else 2


def _cmd_bounds(ns) -> int:
    g = _load_graph(_read_input(ns.input), ns.format)
    _emit(lower_bounds(g, threads=ns.threads).to_json_obj(), ns.pretty)
    return 0


def _cmd_blocks(ns) -> int:
    g = _load_graph(_read_input(ns.input), ns.format)
    tree = block_cut_tree(g)
    _emit({
        "block_count": tree.block_count,
        "blocks": [list(b) for b in tree.blocks],
        "cut_vertices": list(tree.cut_vertices),
    }, ns.pretty)
    return 0


def _cmd_gen(ns) -> int:
    kind = ns.kind
    args = ns.args
    sized = {"triangles", "path", "cycle", "complete", "star"}
    if kind == "threshold":
        if len(args) != 1:
            raise ValueError("gen threshold needs one bit-sequence argument, "
                             "e.g. 1,1,0,1,1")
        seq = ThresholdSequence(_parse_int_list(args[0], "threshold bits"))
        g = threshold_graph(seq)
        predicted = threshold_cdim_routed(seq)
    elif kind in sized:
        if len(args) != 1:
            raise ValueError(f"gen {kind} needs one integer argument")
        try:
            size = int(args[0])
        except ValueError:
            raise ValueError(f"gen {kind}: size must be an integer, "
                             f"got {args[0]!r}") from None
        if kind == "triangles":
            g = triangle_chain(size)
            predicted = triangle_chain_cdim(size)
        else:
            g = standard_graph(kind, size)
            # path, cycle, complete and star all sit at n-1
            predicted = max(g.n - 1, 0)
    elif kind in ("house", "figure1", "figure5"):
        if args:
            raise ValueError(f"gen {kind} takes no arguments")
        g = standard_graph(kind)
        predicted = {"house": 2, "figure1": 2, "figure5": 7}[kind]
    else:
        raise ValueError(f"unknown gen kind {kind!r}")
    sys.stdout.write(to_graph6(g) + "\n")
    if ns.sidecar:
        payload = json.dumps({"kind": kind, "n": g.n,
                              "predicted_cdim": predicted},
                             sort_keys=True, separators=(",", ":"))
        with open(ns.sidecar, "w", encoding="ascii") as fh:
            fh.write(payload + "\n")
    return 0


def _cmd_reduce(ns) -> int:
    if ns.format not in ("auto", "dimacs"):
        raise ValueError("reduce reads DIMACS CNF input")
    f = parse_dimacs(_read_input(ns.input))
    g, gmap = build_reduction(f)
    _emit({
        "graph6": to_graph6(g),
        "n_vars": gmap.n_vars,
        "n_clauses": gmap.n_clauses,
        "alpha": list(gmap.alpha),
        "beta": list(gmap.beta),
        "labels": [gmap.label_of(v) for v in range(g.n)],
        "warnings": list(f.warnings),
    }, ns.pretty)
    return 0


def _cmd_sat(ns) -> int:
    if ns.format not in ("auto", "dimacs"):
        raise ValueError("sat reads DIMACS CNF input")
    f = parse_dimacs(_read_input(ns.input))
    result = decide_sat(f, threads=ns.threads)
    _emit(result.to_json_obj(), ns.pretty)
    return 0


_HANDLERS = {
    "kappa": _cmd_kappa,
    "check": _cmd_check,
    "cdim": _cmd_cdim,
    "mdim": _cmd_mdim,
    "bounds": _cmd_bounds,
    "blocks": _cmd_blocks,
    "gen": _cmd_gen,
    "reduce": _cmd_reduce,
    "sat": _cmd_sat,
}


def main(argv=None) -> int:
    ns = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[ns.cmd](ns)
    except BudgetExceeded as exc:
        sys.stderr.write(f"inconclusive: {exc}\n")
        return 2
    except (GraphFormatError, EmptyGraphError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
