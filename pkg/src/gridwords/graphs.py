"""Simple undirected graphs over hashable vertex labels.

Vertex labels may be any hashable values whose ``str()`` forms are
pairwise distinct; every deterministic ordering in this package sorts
labels by that string form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable


def vertex_key(v: Hashable) -> str:
    """Canonical sort key for vertex labels."""
    return str(v)


def edge(u: Hashable, v: Hashable) -> tuple:
    """The undirected edge {u, v} as a normalized ordered pair."""
    if u == v:
        raise ValueError(f"loop edge at {u!r}")
    return (u, v) if vertex_key(u) <= vertex_key(v) else (v, u)


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph (no loops, no multi-edges)."""

    vertices: frozenset
    edges: frozenset

    @cached_property
    def adjacency(self) -> dict:
        adj: dict = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    @cached_property
    def sorted_vertices(self) -> tuple:
        return tuple(sorted(self.vertices, key=vertex_key))

    @cached_property
    def sorted_edges(self) -> tuple:
        return tuple(sorted(self.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1]))))

    def neighbors(self, v) -> frozenset:
        return self.adjacency[v]

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u, v) -> bool:
        return u != v and edge(u, v) in self.edges

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return 2 * len(self.edges) == n * (n - 1)


def make_graph(vertices: Iterable = (), edges: Iterable[tuple] = ()) -> Graph:
    """Build a Graph; edge endpoints are added to the vertex set."""
    es = frozenset(edge(u, v) for u, v in edges)
    vs = set(vertices)
    for u, v in es:
        vs.add(u)
        vs.add(v)
    return Graph(frozenset(vs), es)


def induced_subgraph(g: Graph, keep: Iterable) -> Graph:
    """The subgraph of g induced by the given vertex subset."""
    keep = frozenset(keep)
    missing = keep - g.vertices
    if missing:
        raise ValueError(f"vertices not in graph: {sorted(missing, key=vertex_key)!r}")
    return Graph(keep, frozenset(e for e in g.edges if e[0] in keep and e[1] in keep))
