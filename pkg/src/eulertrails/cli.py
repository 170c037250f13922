"""Command line front end.

Exit codes: 0 success, 1 input/parse error, 2 precondition violation,
3 enumeration overflow.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .algebra import UnknownGeneratorError
from .brute import DEFAULT_CAP, EnumerationOverflow, distinct_labels
from .cores import core_partition, extract_all
from .decide import PreconditionError, VerdictKind, decide, normalized_shifting, tree_edges
from .euler import Trail, TrailError, find_trail, trail_exists, trail_label
from .fileformat import ParseError, ParsedInput, format_word, load
from .graph import GraphError
from .witness import find_witness

SCHEMA = 1

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_OVERFLOW = 0, 1, 2, 3


def _trail_text(t: Trail) -> str:
    return t.tokens() if t.arcs else f"(empty at {t.tail})"


def _emit(args: argparse.Namespace, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _require_vertices(p: ParsedInput, *names: str) -> None:
    for x in names:
        if not p.graph.has_vertex(x):
            raise GraphError(f"unknown vertex {x!r}")


def cmd_decide(args: argparse.Namespace, p: ParsedInput) -> int:
    _require_vertices(p, args.source, args.target)
    g, o = p.graph, p.oracle
    verdict = decide(g, o, args.source, args.target)
    ell = g.total_word_length
    word = lambda w: format_word(w, o)
    payload: dict = {"verdict": verdict.kind.value}
    lines = [verdict.kind.value]
    if verdict.kind is VerdictKind.YES:
        shift = {x: word(w) for x, w in sorted(verdict.shifting.words.items())}
        payload["shifting"] = shift
        lines += [f"shift {x} {w}" for x, w in shift.items()]
    elif verdict.kind is VerdictKind.NO:
        v = verdict.violation
        payload["core"] = list(verdict.core)
        payload["violation"] = {
            "reason": v.reason,
            "edges": list(v.edges),
            "labels": [word(w) for w in v.labels],
        }
        lines.append(f"core {' '.join(verdict.core)}")
        if v.reason == "order":
            lines.append(f"not an involution: {v.edges[0]} {word(v.labels[0])}")
        else:
            lines.append(
                f"do not commute: {v.edges[0]} {word(v.labels[0])} and {v.edges[1]} {word(v.labels[1])}"
            )
    payload["cores"] = [dict(r.instance.summary(), ok=r.ok) for r in verdict.reports]
    stats = dict(o.stats.as_dict(), bound_12l=12 * ell, total_word_length=ell, edges=len(g))
    if args.json:
        payload["stats"] = stats
    if args.stats:
        lines += [f"{k} {v}" for k, v in stats.items()]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_witness(args: argparse.Namespace, p: ParsedInput) -> int:
    _require_vertices(p, args.source, args.target)
    g, o = p.graph, p.oracle
    w = find_witness(g, o, args.source, args.target)
    full, flipped = w.trail, w.flipped_trail
    lab1, lab2 = trail_label(g, full), trail_label(g, flipped)
    payload = {
        "L": _trail_text(w.circuit),
        "T1": _trail_text(w.before),
        "T2": _trail_text(w.after),
        "trail": _trail_text(full),
        "flipped_trail": _trail_text(flipped),
        "labels": [format_word(lab1, o), format_word(lab2, o)],
        "decide_calls": w.decide_calls,
    }
    lines = [
        f"L  {payload['L']}",
        f"T1 {payload['T1']}",
        f"T2 {payload['T2']}",
        f"T1 L T2     {payload['trail']}",
        f"  label {payload['labels'][0]}",
        f"T1 L^-1 T2  {payload['flipped_trail']}",
        f"  label {payload['labels'][1]}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_cores(args: argparse.Namespace, p: ParsedInput) -> int:
    g = p.graph
    partition = core_partition(g)
    payload: dict = {"blocks": [list(b) for b in partition.blocks]}
    lines = ["core " + " ".join(b) for b in partition.blocks]
    if args.source is not None or args.target is not None:
        a = args.source if args.source is not None else args.target
        b = args.target if args.target is not None else a
        _require_vertices(p, a, b)
        if not trail_exists(g, a, b):
            raise PreconditionError(f"no Eulerian trail from {a!r} to {b!r}")
        c = find_trail(g, a, b)
        insts = extract_all(g, c, partition)
        payload["instances"] = [i.summary() for i in insts]
        for i in insts:
            s = i.summary()
            lines.append(
                f"instance {' '.join(i.core)}: |V(H)|={s['vertices']} |E(H)|={s['edges']} "
                f"a'={i.start} b'={i.end}"
            )
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, p: ParsedInput) -> int:
    _require_vertices(p, args.source, args.target)
    count, reps = distinct_labels(p.graph, p.oracle, args.source, args.target, args.cap)
    labels = [format_word(w, p.oracle) for w in reps]
    payload = {"trails": count, "distinct_labels": len(reps), "labels": labels}
    lines = [f"trails {count}", f"distinct labels {len(reps)}"] + [f"label {w}" for w in labels]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_normalize(args: argparse.Namespace, p: ParsedInput) -> int:
    _require_vertices(p, args.root)
    g, o = p.graph, p.oracle
    s, normalized = normalized_shifting(g, args.root)
    tree = set(tree_edges(g, args.root))
    payload = {
        "root": args.root,
        "difference": s.difference,
        "total_word_length": g.total_word_length,
        "shifting": {x: format_word(w, o) for x, w in sorted(s.words.items())},
        "edges": [
            {"id": e.id, "u": e.u, "v": e.v, "label": format_word(e.label, o), "tree": e.id in tree}
            for e in normalized.edges
        ],
    }
    lines = [f"difference {s.difference}"]
    lines += [f"shift {x} {w}" for x, w in payload["shifting"].items()]
    lines += [
        f"edge {d['id']} {d['u']} {d['v']} {d['label']}" + ("  # tree" if d["tree"] else "")
        for d in payload["edges"]
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulertrails",
        description="Do all Eulerian trails of a group-labeled graph have the same label?",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, ends: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file")
        if ends:
            sp.add_argument("--from", dest="source", required=True)
            sp.add_argument("--to", dest="target", required=True)
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)
        return sp

    add("decide", cmd_decide, "decide whether all Eulerian trails share a label").add_argument(
        "--stats", action="store_true", help="print oracle query statistics"
    )
    add("witness", cmd_witness, "find two Eulerian trails with different labels")
    sp = add("cores", cmd_cores, "list the 3-cores", ends=False)
    sp.add_argument("--from", dest="source", help="with --to: also summarize each core's instance")
    sp.add_argument("--to", dest="target")
    add("enumerate", cmd_enumerate, "brute-force all Eulerian trails").add_argument(
        "--cap", type=int, default=DEFAULT_CAP
    )
    sp = add("normalize", cmd_normalize, "normalize labels along a BFS tree", ends=False)
    sp.add_argument("--root", required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        parsed = load(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ParseError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, parsed)
    except (GraphError, UnknownGeneratorError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PreconditionError, TrailError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except EnumerationOverflow as exc:
        print(f"enumeration overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
