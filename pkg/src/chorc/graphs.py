"""Connection graphs: which processes know each other's names.

Undirected graphs drive the synchronous calculus; directed graphs drive the
asynchronous one, where an introduction can reach its two receivers at
different times. A directed arc (a, b) means "a knows b", i.e. a can address
messages to b and listen for messages from b.

Graphs are immutable; every update returns a new graph. Vertices are process
names or formal list-parameter names (a formal list is a single vertex; it
expands to a product of edges when instantiated with a concrete list).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Optional, Union


def _und(p: str, q: str) -> tuple[str, str]:
    return (p, q) if p <= q else (q, p)


@dataclass(frozen=True)
class Graph:
    mode: str  # "undirected" | "directed"
    vertices: frozenset[str]
    edges: frozenset[tuple[str, str]]  # canonical sorted pairs / (knower, known)

    # ---- construction ----

    @staticmethod
    def empty(mode: str = "undirected", vertices: Iterable[str] = ()) -> "Graph":
        return Graph(mode, frozenset(vertices), frozenset())

    def with_vertices(self, names: Iterable[str]) -> "Graph":
        return Graph(self.mode, self.vertices | frozenset(names), self.edges)

    def connect(self, p: str, q: str, conditional: bool = False) -> "Graph":
        """Add the connection p <-> q (both arcs in directed mode).

        With conditional=True the edge is only added when both endpoints are
        already vertices (the conditional union used by the signature
        fixpoints); otherwise missing vertices are created.
        """
        if p == q:
            return self
        if conditional and not (p in self.vertices and q in self.vertices):
            return self
        vs = self.vertices | {p, q}
        if self.mode == "undirected":
            es = self.edges | {_und(p, q)}
        else:
            es = self.edges | {(p, q), (q, p)}
        return Graph(self.mode, vs, es)

    def connect_arc(self, knower: str, known: str) -> "Graph":
        """Directed mode only: record that knower now knows known."""
        if self.mode != "directed":
            raise ValueError("connect_arc requires a directed graph")
        if knower == known:
            return self
        return Graph(self.mode, self.vertices | {knower, known}, self.edges | {(knower, known)})

    # ---- queries ----

    def knows(self, a: str, b: str) -> bool:
        """Does a know b's name? Symmetric in undirected mode."""
        if a == b:
            return True
        if self.mode == "undirected":
            return _und(a, b) in self.edges
        return (a, b) in self.edges

    def connected(self, p: str, q: str) -> bool:
        return self.knows(p, q)

    def includes(self, other: "Graph") -> bool:
        """Is other a subgraph of self (same mode assumed)?"""
        return other.edges <= self.edges

    def symmetric(self) -> bool:
        if self.mode == "undirected":
            return True
        return all((b, a) in self.edges for a, b in self.edges)

    # ---- lattice operations ----

    def union(self, other: "Graph") -> "Graph":
        if self.mode != other.mode:
            raise ValueError("graph mode mismatch")
        return Graph(self.mode, self.vertices | other.vertices, self.edges | other.edges)

    def intersect(self, other: "Graph") -> "Graph":
        if self.mode != other.mode:
            raise ValueError("graph mode mismatch")
        return Graph(self.mode, self.vertices & other.vertices, self.edges & other.edges)

    def combine(self, other: "Graph", op: str) -> "Graph":
        if op == "union":
            return self.union(other)
        if op == "intersection":
            return self.intersect(other)
        raise ValueError(f"unknown combine op {op!r}")

    # ---- instantiation ----

    def instantiate(self, mapping: Mapping[str, Union[str, tuple[str, ...]]]) -> "Graph":
        """Rename vertices; list-valued vertices expand edges to products.

        The mapping must cover every vertex. Self-pairs arising from the
        product (a vertex list mapped against itself) are dropped.
        """
        def targets(v: str) -> tuple[str, ...]:
            t = mapping[v]
            return (t,) if isinstance(t, str) else tuple(t)

        vs: set[str] = set()
        for v in self.vertices:
            vs |= set(targets(v))
        es: set[tuple[str, str]] = set()
        for a, b in self.edges:
            for x in targets(a):
                for y in targets(b):
                    if x == y:
                        continue
                    es.add(_und(x, y) if self.mode == "undirected" else (x, y))
        return Graph(self.mode, frozenset(vs), frozenset(es))

    def directed_view(self) -> "Graph":
        """The same connections as a directed graph (both arcs per edge)."""
        if self.mode == "directed":
            return self
        es = set()
        for a, b in self.edges:
            es.add((a, b))
            es.add((b, a))
        return Graph("directed", self.vertices, frozenset(es))

    # ---- debugging / golden output ----

    def dump(self) -> str:
        """Deterministic edge-list text (sorted), one edge per line."""
        arrow = "<->" if self.mode == "undirected" else "->"
        lines = [f"{a} {arrow} {b}" for a, b in sorted(self.edges)]
        return "\n".join(lines)

    def __str__(self) -> str:
        sep = "<->" if self.mode == "undirected" else "->"
        inner = ", ".join(f"{a}{sep}{b}" for a, b in sorted(self.edges))
        return "{" + inner + "}"


def full_graph(names: Iterable[str], mode: str = "undirected") -> Graph:
    """The complete graph over the given names (both arcs in directed mode)."""
    g = Graph.empty(mode, names)
    for p, q in combinations(sorted(g.vertices), 2):
        g = g.connect(p, q)
    return g
