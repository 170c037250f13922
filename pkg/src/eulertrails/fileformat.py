"""Reading and writing the line-oriented graph file format.

::

    # comment
    group sym 3 gens r=(1,2,3);s=(1,2)
    vertex lonely
    edge e1 u v [ +r -s ]
    edge e2 v v [ ]
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import (
    CyclicOracle,
    ElementaryAbelianOracle,
    FreeAbelianOracle,
    FreeGroupOracle,
    GroupOracle,
    SymmetricGroupOracle,
    TableGroupOracle,
    UnknownGeneratorError,
    Word,
)
from .graph import Edge, GraphError, LabeledGraph


class ParseError(ValueError):
    def __init__(self, line: int, token: str | None, message: str):
        where = f"line {line}" + (f", token {token!r}" if token is not None else "")
        super().__init__(f"{where}: {message}")
        self.line = line
        self.token = token


@dataclass
class ParsedInput:
    oracle: GroupOracle
    graph: LabeledGraph
    edge_lines: dict[str, int] = field(default_factory=dict)
    vertex_lines: dict[str, int] = field(default_factory=dict)


def _positive_int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(lineno, token, "expected an integer") from None
    if value < 1:
        raise ParseError(lineno, token, "expected a positive integer")
    return value


def parse_header(line: str, lineno: int = 1, base_dir: Path | None = None) -> GroupOracle:
    tokens = line.split()
    if len(tokens) < 2 or tokens[0] != "group":
        raise ParseError(lineno, tokens[0] if tokens else None, "first line must be a group header")
    kind, args = tokens[1], tokens[2:]
    try:
        if kind in ("z2", "z", "cyclic", "free"):
            if len(args) != 1:
                raise ParseError(lineno, kind, "expected exactly one size argument")
            size = _positive_int(args[0], lineno)
            cls = {
                "z2": ElementaryAbelianOracle,
                "z": FreeAbelianOracle,
                "cyclic": CyclicOracle,
                "free": FreeGroupOracle,
            }[kind]
            return cls(size)
        if kind == "sym":
            if len(args) < 3 or args[1] != "gens":
                raise ParseError(lineno, kind, "expected 'group sym <n> gens <name>=<cycles>;...'")
            n = _positive_int(args[0], lineno)
            gens_text = " ".join(args[2:])
            gens = []
            for part in filter(None, (p.strip() for p in gens_text.split(";"))):
                name, eq, cycles = part.partition("=")
                if not eq:
                    raise ParseError(lineno, part, "generator must be written name=cycles")
                gens.append((name.strip(), cycles.strip()))
            return SymmetricGroupOracle.from_cycles(n, gens)
        if kind == "table":
            if len(args) != 1:
                raise ParseError(lineno, kind, "expected 'group table <path>'")
            path = Path(args[0])
            if not path.is_absolute() and base_dir is not None:
                path = base_dir / path
            try:
                data = json.loads(path.read_text())
            except (OSError, json.JSONDecodeError) as exc:
                raise ParseError(lineno, args[0], f"cannot read table: {exc}") from None
            return TableGroupOracle(data["table"], data["identity"], data["generators"], source=args[0])
    except ParseError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(lineno, kind, str(exc)) from None
    raise ParseError(lineno, kind, "unknown group kind")


def parse_word(tokens: list[str], oracle: GroupOracle, lineno: int = 0) -> Word:
    index = {name: i for i, name in enumerate(oracle.generator_names, start=1)}
    out = []
    for tok in tokens:
        if len(tok) < 2 or tok[0] not in "+-":
            raise ParseError(lineno, tok, "generator tokens look like +g or -g")
        gen = index.get(tok[1:])
        if gen is None:
            raise ParseError(lineno, tok, "unknown generator")
        out.append(gen if tok[0] == "+" else -gen)
    return tuple(out)


def format_word(w: Word, oracle: GroupOracle) -> str:
    names = oracle.generator_names
    inner = " ".join(("+" if s > 0 else "-") + names[abs(s) - 1] for s in w)
    return f"[ {inner} ]" if inner else "[ ]"


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse(text: str, base_dir: str | Path | None = None) -> ParsedInput:
    base = Path(base_dir) if base_dir is not None else None
    oracle: GroupOracle | None = None
    edges: list[Edge] = []
    edge_lines: dict[str, int] = {}
    vertex_lines: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if oracle is None:
            oracle = parse_header(line, lineno, base)
            continue
        tokens = line.replace("[", " [ ").replace("]", " ] ").split()
        keyword = tokens[0]
        if keyword == "vertex":
            if len(tokens) != 2:
                raise ParseError(lineno, keyword, "expected 'vertex <id>'")
            vertex_lines.setdefault(tokens[1], lineno)
        elif keyword == "edge":
            if len(tokens) < 4:
                raise ParseError(lineno, keyword, "expected 'edge <id> <u> <v> [ <word> ]'")
            eid, u, v = tokens[1:4]
            if eid.endswith("'"):
                raise ParseError(lineno, eid, "edge ids may not end with an apostrophe")
            if eid in edge_lines:
                raise ParseError(lineno, eid, f"duplicate edge id (first on line {edge_lines[eid]})")
            rest = tokens[4:]
            if rest:
                if rest[0] != "[" or rest[-1] != "]" or "[" in rest[1:] or "]" in rest[:-1]:
                    raise ParseError(lineno, " ".join(rest), "label must be one bracketed word")
                rest = rest[1:-1]
            try:
                label = parse_word(rest, oracle, lineno)
            except UnknownGeneratorError as exc:  # pragma: no cover - parse_word checks names
                raise ParseError(lineno, None, str(exc)) from None
            edges.append(Edge(eid, u, v, label))
            edge_lines[eid] = lineno
        else:
            raise ParseError(lineno, keyword, "expected 'vertex' or 'edge'")
    if oracle is None:
        raise ParseError(1, None, "missing group header")
    try:
        graph = LabeledGraph(edges, vertex_lines)
    except GraphError as exc:  # pragma: no cover - duplicates caught above
        raise ParseError(0, None, str(exc)) from None
    return ParsedInput(oracle, graph, edge_lines, vertex_lines)


def load(path: str | Path) -> ParsedInput:
    path = Path(path)
    return parse(path.read_text(), base_dir=path.parent)


def format_input(oracle: GroupOracle, graph: LabeledGraph) -> str:
    lines = [oracle.header()]
    lines += [f"vertex {x}" for x in graph.vertices]
    lines += [f"edge {e.id} {e.u} {e.v} {format_word(e.label, oracle)}" for e in graph.edges]
    return "\n".join(lines) + "\n"
