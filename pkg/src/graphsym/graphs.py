"""Graph data model: simple undirected graphs, oriented graphs, completeness
testing, exhaustive enumeration, and detection of the two three-vertex
substructures that certify a graph is not complete.

Vertices are numbered 1..N. An h1 witness (u, w, v) is an induced path,
edges {u,w} and {w,v} present and {u,v} absent. An h2 witness (u, w, v) has
edge {u,w} present and v in a different connected component.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, DomainError

#: enumerate_undirected refuses more vertices than this (2**15 graphs at 6).
MAX_ENUMERATION_VERTICES = 6


def _check_vertex(v: int, num_vertices: int) -> None:
    if not 1 <= v <= num_vertices:
        raise DomainError(f"vertex {v} outside [1, {num_vertices}]")


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple undirected graph; edges stored as (a, b) pairs with a < b."""

    num_vertices: int
    edges: frozenset

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[Sequence[int]]) -> "UndirectedGraph":
        if num_vertices < 1:
            raise DomainError("an undirected graph needs at least one vertex")
        normalized = []
        for a, b in edges:
            _check_vertex(a, num_vertices)
            _check_vertex(b, num_vertices)
            if a == b:
                raise DomainError(f"self-loop on vertex {a}")
            normalized.append((min(a, b), max(a, b)))
        if len(set(normalized)) != len(normalized):
            raise DomainError("duplicate edge")
        return cls(num_vertices, frozenset(normalized))

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def neighbors(self, v: int) -> set:
        _check_vertex(v, self.num_vertices)
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def sorted_edges(self) -> list:
        return sorted(self.edges)


@dataclass(frozen=True)
class OrientedGraph:
    """Directed simple graph; each unordered pair carries at most one edge.

    Edges are (origin, target) pairs kept in insertion order. The vertex
    ordering used by state builders is the identity ordering 1..N.
    """

    num_vertices: int
    edges: tuple

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[Sequence[int]]) -> "OrientedGraph":
        if num_vertices < 2:
            raise DomainError("an oriented graph needs at least two vertices")
        seen_pairs = set()
        out = []
        for o, t in edges:
            _check_vertex(o, num_vertices)
            _check_vertex(t, num_vertices)
            if o == t:
                raise DomainError(f"self-loop on vertex {o}")
            pair = (min(o, t), max(o, t))
            if pair in seen_pairs:
                raise DomainError(
                    f"vertices {pair[0]} and {pair[1]} are connected more than once"
                )
            seen_pairs.add(pair)
            out.append((o, t))
        return cls(num_vertices, tuple(out))

    def has_pair(self, a: int, b: int) -> bool:
        """True when an edge joins a and b in either orientation."""
        return any({o, t} == {a, b} for o, t in self.edges)

    def neighbors(self, v: int) -> set:
        """Vertices sharing an edge with v, ignoring orientation."""
        _check_vertex(v, self.num_vertices)
        out = set()
        for o, t in self.edges:
            if o == v:
                out.add(t)
            elif t == v:
                out.add(o)
        return out

    def undirected_pairs(self) -> frozenset:
        return frozenset((min(o, t), max(o, t)) for o, t in self.edges)


@dataclass(frozen=True)
class Witness:
    """A symmetry-breaking substructure with its certifying vertex triple."""

    kind: str  # "h1" or "h2"
    vertices: tuple


def is_complete(g) -> bool:
    """True when every pair of distinct vertices is joined by an edge.

    Accepts either graph type; orientation is ignored. A single vertex
    counts as complete.
    """
    n = g.num_vertices
    if isinstance(g, OrientedGraph):
        return len(g.undirected_pairs()) == n * (n - 1) // 2
    return len(g.edges) == n * (n - 1) // 2


def _bfs_path(g: UndirectedGraph, start: int, goal: int):
    # Shortest path with lowest-index tie breaking; None when disconnected.
    parent = {start: 0}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            path = [cur]
            while path[-1] != start:
                path.append(parent[path[-1]])
            return list(reversed(path))
        for nxt in sorted(g.neighbors(cur)):
            if nxt not in parent:
                parent[nxt] = cur
                queue.append(nxt)
    return None


def find_witness(g: UndirectedGraph):
    """Locate an h1 or h2 substructure in a non-complete graph.

    Returns None exactly when the graph is complete. The scan is
    deterministic: non-adjacent pairs (u, v) in lexicographic order, with
    BFS shortest paths expanded in ascending vertex order. For a connected
    pair the witness is the first three vertices of the shortest path; for
    a disconnected pair it is (x, w, y) with {x,w} an edge and y in another
    component.

    Raises DomainError for graphs with no edges, where neither
    substructure exists.
    """
    if not g.edges:
        raise DomainError("witness search needs a graph with at least one edge")
    if is_complete(g):
        return None
    for u in range(1, g.num_vertices + 1):
        for v in range(u + 1, g.num_vertices + 1):
            if g.has_edge(u, v):
                continue
            path = _bfs_path(g, u, v)
            if path is not None:
                return Witness("h1", (path[0], path[1], path[2]))
            for x, y in ((u, v), (v, u)):
                nbrs = g.neighbors(x)
                if nbrs:
                    return Witness("h2", (x, min(nbrs), y))
    raise AssertionError("non-complete graph with an edge must contain a witness")


def prefix_subgraph(g: OrientedGraph, m: int) -> OrientedGraph:
    """Induced subgraph on vertices 1..m, preserving edge orientation."""
    if not 2 <= m <= g.num_vertices:
        raise DomainError(f"prefix size {m} outside [2, {g.num_vertices}]")
    kept = tuple((o, t) for o, t in g.edges if o <= m and t <= m)
    return OrientedGraph(m, kept)


def enumerate_undirected(n: int) -> Iterator[UndirectedGraph]:
    """All 2**(n(n-1)/2) labeled simple graphs on n vertices, each once."""
    if n < 1:
        raise DomainError("need at least one vertex")
    if n > MAX_ENUMERATION_VERTICES:
        raise CapacityError(
            f"enumeration capped at {MAX_ENUMERATION_VERTICES} vertices, got {n}"
        )
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    for mask in range(1 << len(pairs)):
        chosen = [p for i, p in enumerate(pairs) if mask >> i & 1]
        yield UndirectedGraph(n, frozenset(chosen))


def complete_hierarchical(n: int) -> OrientedGraph:
    """Complete oriented graph with every edge pointing j -> i for j > i."""
    if n < 2:
        raise DomainError("need at least two vertices")
    edges = [(j, i) for j in range(2, n + 1) for i in range(1, j)]
    return OrientedGraph(n, tuple(edges))
