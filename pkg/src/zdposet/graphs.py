"""A small immutable undirected-graph value type.

Vertex ids only need to be hashable and mutually comparable (ints for
zero-divisor graphs, anything sortable for ad-hoc test graphs).
"""

from __future__ import annotations

from typing import Hashable, Iterable

from .errors import UnknownVertexError

Vertex = Hashable


class Graph:
    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[tuple[Vertex, Vertex]]):
        self.vertices: tuple[Vertex, ...] = tuple(sorted(set(vertices)))
        known = set(self.vertices)
        adj: dict[Vertex, set[Vertex]] = {v: set() for v in self.vertices}
        for a, b in edges:
            if a not in known or b not in known:
                raise UnknownVertexError(f"edge ({a!r}, {b!r}) uses an unknown vertex")
            if a == b:
                raise ValueError(f"loop at {a!r}: graphs here are simple")
            adj[a].add(b)
            adj[b].add(a)
        self._adj: dict[Vertex, frozenset[Vertex]] = {
            v: frozenset(s) for v, s in adj.items()
        }

    def __repr__(self) -> str:
        return f"Graph({len(self.vertices)} vertices, {len(self.edges())} edges)"

    def neighbors(self, v: Vertex) -> frozenset[Vertex]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    def adjacent(self, v: Vertex, w: Vertex) -> bool:
        return w in self.neighbors(v)

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def edges(self) -> tuple[tuple[Vertex, Vertex], ...]:
        """All edges as (smaller, larger) pairs, sorted."""
        out = []
        for v in self.vertices:
            for w in self._adj[v]:
                if v < w:
                    out.append((v, w))
        return tuple(sorted(out))

    def has_isolated_vertex(self) -> bool:
        return any(not self._adj[v] for v in self.vertices)


def vertex_label(G: Graph, v: Vertex) -> str:
    """Element name for zero-divisor graphs, plain str for ad-hoc graphs."""
    owner = getattr(G, "owner", None)
    return owner.elements[v] if owner is not None else str(v)
