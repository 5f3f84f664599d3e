"""Line-oriented graph file parsing.

Grammar:

    # comment lines and blank lines are ignored; '#' starts a trailing comment
    graph N [d D] [directed]
    u v
    ...

Vertices are 1-based. Undirected files list unordered pairs; directed files
list edges as "origin target". Self-loops, duplicate pairs and out-of-range
vertices are rejected with the offending line number.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import GraphParseError
from .graphs import OrientedGraph, UndirectedGraph


@dataclass(frozen=True)
class GraphFile:
    graph: object  # UndirectedGraph | OrientedGraph
    levels: int | None
    directed: bool


def _content_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line_no, line


def _parse_header(line_no: int, tokens: list) -> tuple:
    if not tokens or tokens[0] != "graph":
        raise GraphParseError(line_no, "expected header 'graph N [d D] [directed]'")
    rest = tokens[1:]
    if not rest:
        raise GraphParseError(line_no, "header is missing the vertex count")
    try:
        num_vertices = int(rest[0])
    except ValueError:
        raise GraphParseError(line_no, f"vertex count {rest[0]!r} is not an integer") from None
    if num_vertices < 1:
        raise GraphParseError(line_no, "vertex count must be positive")
    rest = rest[1:]
    levels = None
    directed = False
    while rest:
        if rest[0] == "d":
            if levels is not None or len(rest) < 2:
                raise GraphParseError(line_no, "malformed 'd D' clause in header")
            try:
                levels = int(rest[1])
            except ValueError:
                raise GraphParseError(line_no, f"level count {rest[1]!r} is not an integer") from None
            if levels < 2:
                raise GraphParseError(line_no, "level count must be at least 2")
            rest = rest[2:]
        elif rest[0] == "directed":
            if directed:
                raise GraphParseError(line_no, "duplicate 'directed' flag")
            directed = True
            rest = rest[1:]
        else:
            raise GraphParseError(line_no, f"unexpected header token {rest[0]!r}")
    return num_vertices, levels, directed


def parse_graph_file(text: str) -> GraphFile:
    lines = list(_content_lines(text))
    if not lines:
        raise GraphParseError(1, "empty graph file")
    header_no, header = lines[0]
    num_vertices, levels, directed = _parse_header(header_no, header.split())

    edges = []
    seen_pairs = {}
    for line_no, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(line_no, f"non-integer vertex in {line!r}") from None
        if u == v:
            raise GraphParseError(line_no, f"self-loop on vertex {u}")
        for x in (u, v):
            if not 1 <= x <= num_vertices:
                raise GraphParseError(line_no, f"vertex {x} outside [1, {num_vertices}]")
        pair = (min(u, v), max(u, v))
        if pair in seen_pairs:
            raise GraphParseError(
                line_no,
                f"vertices {pair[0]} and {pair[1]} already connected on line {seen_pairs[pair]}",
            )
        seen_pairs[pair] = line_no
        edges.append((u, v))

    if directed:
        if num_vertices < 2:
            raise GraphParseError(header_no, "a directed graph needs at least two vertices")
        graph = OrientedGraph.from_edges(num_vertices, edges)
    else:
        graph = UndirectedGraph.from_edges(num_vertices, edges)
    return GraphFile(graph, levels, directed)


def load_graph_file(path) -> GraphFile:
    return parse_graph_file(Path(path).read_text(encoding="utf-8"))
