"""Command-line surface: one verb per capability, text or JSON output."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .automorphisms import enumerate_automorphisms
from .config import RunConfig, load_config
from .constructive import (
    corona_edge_labeling,
    corona_vertex_labeling,
    friendship_splitting_labeling,
    splitting_edge_labeling,
    splitting_vertex_labeling,
)
from .corona import neighbourhood_corona, splitting_graph
from .distinguishing import (
    distinguishing_index,
    distinguishing_number,
    is_distinguishing_edge,
    is_distinguishing_vertex,
)
from .families import FAMILY_BUILDERS, friendship
from .formats import encode_graph6, parse_graph
from .graphs import EdgeLabeling, Graph, VertexLabeling, edge_labeling
from .harness import default_corpus, Corpus, run_theorem_harness

SCHEMA = "corona-sym/1"


def _read_graph(arg: str, fmt: str) -> Graph:
    if arg == "-":
        return parse_graph(sys.stdin.read(), fmt)
    if os.path.exists(arg):
        with open(arg) as fh:
            return parse_graph(fh.read(), fmt)
    return parse_graph(arg, fmt)


def _emit(payload: dict, config: RunConfig, text_lines: list[str]) -> None:
    if config.output_format == "json":
        payload = {"schema": SCHEMA, "config": config.as_dict(), **payload}
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _graph_payload(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges], "graph6": encode_graph6(g)}


def cmd_family(args, config: RunConfig) -> int:
    g = FAMILY_BUILDERS[args.name](args.n)
    _emit({"graph": _graph_payload(g)}, config, [encode_graph6(g)])
    return 0


def cmd_corona(args, config: RunConfig) -> int:
    g1 = _read_graph(args.g1, args.input_format)
    g2 = _read_graph(args.g2, args.input_format)
    cor = neighbourhood_corona(g1, g2)
    index_map = {
        str(v): (
            {"role": "base", "i": v}
            if v < g1.n
            else {
                "role": "copy",
                "i": (v - g1.n) // g2.n,
                "j": (v - g1.n) % g2.n,
            }
        )
        for v in range(cor.n)
    }
    payload = {"corona": _graph_payload(cor.graph), "index": index_map}
    _emit(payload, config, [encode_graph6(cor.graph), json.dumps(index_map, sort_keys=True)])
    return 0


def cmd_aut(args, config: RunConfig) -> int:
    g = _read_graph(args.graph, args.input_format)
    group = enumerate_automorphisms(g, config.vertex_cap, config.group_cap)
    lines = [f"order {group.order}"]
    payload = {"order": group.order}
    if args.elements:
        cycles = [p.cycle_notation() for p in group.elements]
        lines += cycles
        payload["elements"] = cycles
    _emit(payload, config, lines)
    return 0


def _report_payload(rep) -> dict:
    if isinstance(rep.witness, VertexLabeling):
        witness = list(rep.witness.labels)
    else:
        witness = {f"{u},{v}": lab for (u, v), lab in sorted(rep.witness.labels.items())}
    return {
        "value": rep.value,
        "witness": witness,
        "group_order": rep.group_order,
        "labelings_tested": rep.labelings_tested,
    }


def cmd_dnum(args, config: RunConfig) -> int:
    g = _read_graph(args.graph, args.input_format)
    rep = distinguishing_number(g, config.vertex_cap, config.group_cap, config.labeling_cap)
    _emit(_report_payload(rep), config, [f"D = {rep.value}"])
    return 0


def cmd_dindex(args, config: RunConfig) -> int:
    g = _read_graph(args.graph, args.input_format)
    rep = distinguishing_index(g, config.vertex_cap, config.group_cap, config.labeling_cap)
    _emit(_report_payload(rep), config, [f"D' = {rep.value}"])
    return 0


def cmd_label(args, config: RunConfig) -> int:
    caps = (config.vertex_cap, config.group_cap, config.labeling_cap)
    if args.scheme == "friendship":
        n = int(args.args[0])
        cor = splitting_graph(friendship(n))
        lab = friendship_splitting_labeling(n)
    elif args.scheme in ("splitting-vertex", "splitting-edge"):
        g = _read_graph(args.args[0], args.input_format)
        cor = splitting_graph(g)
        if args.scheme == "splitting-vertex":
            lab = splitting_vertex_labeling(g, distinguishing_number(g, *caps).witness)
        else:
            lab = splitting_edge_labeling(g, distinguishing_index(g, *caps).witness)
    elif args.scheme in ("corona-vertex", "corona-edge"):
        g1 = _read_graph(args.args[0], args.input_format)
        g2 = _read_graph(args.args[1], args.input_format)
        cor = neighbourhood_corona(g1, g2)
        if args.scheme == "corona-vertex":
            lab = corona_vertex_labeling(
                g1, g2, distinguishing_number(g1, *caps).witness,
                distinguishing_number(g2, *caps).witness,
            )
        else:
            base2 = (
                distinguishing_index(g2, *caps).witness if g2.m else EdgeLabeling({})
            )
            lab = corona_edge_labeling(g1, g2, distinguishing_index(g1, *caps).witness, base2)
    else:
        raise SystemExit(f"unknown labeling scheme {args.scheme!r}")
    group = enumerate_automorphisms(cor.graph, config.vertex_cap, config.group_cap)
    if isinstance(lab, VertexLabeling):
        ok = is_distinguishing_vertex(cor.graph, group, lab)
        out = list(lab.labels)
    else:
        ok = is_distinguishing_edge(cor.graph, group, lab)
        out = {f"{u},{v}": l for (u, v), l in sorted(lab.labels.items())}
    payload = {
        "scheme": args.scheme,
        "graph": _graph_payload(cor.graph),
        "labeling": out,
        "label_count": lab.label_count,
        "distinguishing": ok,
    }
    _emit(payload, config, [json.dumps(out), f"distinguishing: {ok}"])
    return 0 if ok else 1


def cmd_verify(args, config: RunConfig) -> int:
    g = _read_graph(args.graph, args.input_format)
    with open(args.labeling) as fh:
        spec = json.load(fh)
    group = enumerate_automorphisms(g, config.vertex_cap, config.group_cap)
    if spec.get("kind") == "edge":
        lab = edge_labeling(g, spec["labels"])
        ok = is_distinguishing_edge(g, group, lab)
    else:
        lab = VertexLabeling(tuple(spec["labels"]))
        ok = is_distinguishing_vertex(g, group, lab)
    _emit({"distinguishing": ok}, config, [f"distinguishing: {ok}"])
    return 0 if ok else 1


def _load_corpus(path: str) -> Corpus:
    with open(path) as fh:
        data = json.load(fh)
    graphs = tuple(
        (f"g[{i}]", parse_graph(s)) for i, s in enumerate(data.get("graphs", []))
    )
    pairs = tuple(
        (f"pair[{i}]", parse_graph(a), parse_graph(b))
        for i, (a, b) in enumerate(data.get("pairs", []))
    )
    return Corpus(graphs, pairs)


def cmd_check_theorems(args, config: RunConfig) -> int:
    corpus = _load_corpus(args.corpus) if args.corpus else default_corpus(config)
    reports = run_theorem_harness(config, corpus)
    lines = []
    for rep in reports:
        status = "pass" if rep.passed else "FAIL"
        lines.append(
            f"{rep.theorem:<24} {status}  instances={rep.instances}"
            f" skipped={rep.skipped} ({rep.seconds:.2f}s)"
        )
        lines.extend(f"  counterexample: {c}" for c in rep.counterexamples)
    _emit({"reports": [r.as_dict() for r in reports]}, config, lines)
    return 0 if all(r.passed for r in reports) else 1


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["text", "json"], default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--vertex-cap", type=int, default=None)
    p.add_argument("--group-cap", type=int, default=None)
    p.add_argument("--labeling-cap", type=int, default=None)
    p.add_argument(
        "--input-format", choices=["auto", "graph6", "edgelist"], default="auto"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corona-sym",
        description="Neighbourhood corona products, automorphism groups, "
        "and distinguishing labelings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="emit a named family graph")
    p.add_argument("name", choices=sorted(FAMILY_BUILDERS))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("corona", help="neighbourhood corona of two graphs")
    p.add_argument("g1")
    p.add_argument("g2")
    p.set_defaults(func=cmd_corona)

    p = sub.add_parser("aut", help="enumerate the automorphism group")
    p.add_argument("graph")
    p.add_argument("--elements", action="store_true", help="print cycle notation")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("dnum", help="exact distinguishing number")
    p.add_argument("graph")
    p.set_defaults(func=cmd_dnum)

    p = sub.add_parser("dindex", help="exact distinguishing index")
    p.add_argument("graph")
    p.set_defaults(func=cmd_dindex)

    p = sub.add_parser("label", help="emit a constructive labeling and verify it")
    p.add_argument(
        "scheme",
        choices=[
            "splitting-vertex",
            "splitting-edge",
            "friendship",
            "corona-vertex",
            "corona-edge",
        ],
    )
    p.add_argument("args", nargs="+")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a labeling against the group")
    p.add_argument("graph")
    p.add_argument("labeling", help="JSON file with kind and labels")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-theorems", help="run the verification harness")
    p.add_argument("--corpus", default=None, help="JSON corpus file")
    p.set_defaults(func=cmd_check_theorems)

    for sp in sub.choices.values():
        _add_common(sp)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    config = load_config(
        vertex_cap=args.vertex_cap,
        group_cap=args.group_cap,
        labeling_cap=args.labeling_cap,
        seed=args.seed,
        worker_count=args.workers,
        output_format=args.format,
    )
    return args.func(args, config)


if __name__ == "__main__":
    sys.exit(main())
