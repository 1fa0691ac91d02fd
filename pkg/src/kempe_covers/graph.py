"""Undirected loop-free multigraphs with dart-level incidence.

Vertices are dense integers ``0..n-1``. Edges carry unique integer ids that
are assigned densely at creation and *preserved* by spanning-subgraph
construction, so derived graphs may have gaps in their edge id range. Every
edge stores an ordered endpoint pair ``(u, v)``; the pairs ``(edge, 0)`` and
``(edge, 1)`` are its two darts (half-edges). Darts make walks through
parallel edges and 2-cycles unambiguous, which bi-chromatic cycles need.

Graphs are immutable once constructed; build them through
:class:`MultigraphBuilder` or :meth:`Multigraph.from_edges`.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import (
    GraphStructureError,
    LoopEdgeError,
    UnknownEdgeError,
    UnknownVertexError,
)

VertexId = int
EdgeId = int
#: (edge id, endpoint slot); slot indexes the stored endpoint pair.
Dart = tuple[EdgeId, int]


class Multigraph:
    """Immutable loop-free multigraph with per-vertex dart lists."""

    __slots__ = ("_n", "_edges", "_incidence")

    def __init__(self, vertex_count: int, edges: Mapping[EdgeId, tuple[VertexId, VertexId]]):
        if vertex_count < 0:
            raise GraphStructureError(f"negative vertex count {vertex_count}")
        table: dict[EdgeId, tuple[VertexId, VertexId]] = {}
        incidence: list[list[Dart]] = [[] for _ in range(vertex_count)]
        for eid in sorted(edges):
            u, v = edges[eid]
            if not (0 <= u < vertex_count):
                raise UnknownVertexError(f"edge {eid}: vertex {u} not in graph")
            if not (0 <= v < vertex_count):
                raise UnknownVertexError(f"edge {eid}: vertex {v} not in graph")
            if u == v:
                raise LoopEdgeError(f"edge {eid} would be a loop at vertex {u}")
            table[eid] = (u, v)
            incidence[u].append((eid, 0))
            incidence[v].append((eid, 1))
        self._n = vertex_count
        self._edges = table
        self._incidence = [tuple(darts) for darts in incidence]

    @classmethod
    def from_edges(cls, vertex_count: int, pairs: Iterable[tuple[VertexId, VertexId]]) -> "Multigraph":
        """Build a graph with dense edge ids ``0..len(pairs)-1`` in input order."""
        return cls(vertex_count, {i: (u, v) for i, (u, v) in enumerate(pairs)})

    # -- queries ---------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def edge_ids(self) -> tuple[EdgeId, ...]:
        """Edge ids in increasing order."""
        return tuple(self._edges)

    def has_vertex(self, v: VertexId) -> bool:
        return 0 <= v < self._n

    def has_edge(self, e: EdgeId) -> bool:
        return e in self._edges

    def endpoints(self, e: EdgeId) -> tuple[VertexId, VertexId]:
        """Stored endpoint pair of ``e`` (creation order)."""
        try:
            return self._edges[e]
        except KeyError:
            raise UnknownEdgeError(f"no edge {e}") from None

    def darts_at(self, v: VertexId) -> tuple[Dart, ...]:
        if not self.has_vertex(v):
            raise UnknownVertexError(f"no vertex {v}")
        return self._incidence[v]

    def edges_at(self, v: VertexId) -> tuple[EdgeId, ...]:
        return tuple(e for e, _ in self.darts_at(v))

    def degree(self, v: VertexId) -> int:
        return len(self.darts_at(v))

    def dart_source(self, dart: Dart) -> VertexId:
        e, slot = dart
        return self.endpoints(e)[slot]

    def dart_target(self, dart: Dart) -> VertexId:
        e, slot = dart
        return self.endpoints(e)[1 - slot]

    def other_end(self, e: EdgeId, v: VertexId) -> VertexId:
        u, w = self.endpoints(e)
        if v == u:
            return w
        if v == w:
            return u
        raise UnknownVertexError(f"vertex {v} is not an endpoint of edge {e}")

    def edge_table(self) -> dict[EdgeId, tuple[VertexId, VertexId]]:
        """Copy of the id -> endpoint-pair table."""
        return dict(self._edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):  # pragma: no cover - graphs are not meant to be keys
        return hash((self._n, tuple(sorted(self._edges.items()))))

    def __repr__(self) -> str:
        return f"Multigraph(vertices={self._n}, edges={len(self._edges)})"


class MultigraphBuilder:
    """Accumulates vertices and edges, then freezes into a :class:`Multigraph`."""

    def __init__(self):
        self._n = 0
        self._pairs: dict[EdgeId, tuple[VertexId, VertexId]] = {}
        self._next_edge = 0

    def add_vertex(self) -> VertexId:
        v = self._n
        self._n += 1
        return v

    def add_vertices(self, count: int) -> list[VertexId]:
        return [self.add_vertex() for _ in range(count)]

    def add_edge(self, u: VertexId, v: VertexId) -> EdgeId:
        if not (0 <= u < self._n):
            raise UnknownVertexError(f"no vertex {u}")
        if not (0 <= v < self._n):
            raise UnknownVertexError(f"no vertex {v}")
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u} rejected")
        e = self._next_edge
        self._next_edge += 1
        self._pairs[e] = (u, v)
        return e

    def build(self) -> Multigraph:
        return Multigraph(self._n, self._pairs)


def is_regular(g: Multigraph) -> int | None:
    """The common degree when every vertex has it, else None.

    The empty graph is vacuously regular for no particular d and returns None.
    """
    if g.vertex_count == 0:
        return None
    degrees = {g.degree(v) for v in g.vertices()}
    if len(degrees) == 1:
        return degrees.pop()
    return None


def connected_components(g: Multigraph) -> list[frozenset[VertexId]]:
    """Partition of the vertex set by reachability, ordered by smallest member."""
    seen = [False] * g.vertex_count
    components = []
    for start in g.vertices():
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = {start}
        while stack:
            v = stack.pop()
            for e, slot in g.darts_at(v):
                w = g.endpoints(e)[1 - slot]
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    stack.append(w)
        components.append(frozenset(comp))
    return components


def spanning_subgraph(g: Multigraph, edges: Iterable[EdgeId]) -> Multigraph:
    """Subgraph on all vertices of ``g`` and exactly the given edges.

    Edge ids and stored endpoint order are preserved.
    """
    chosen = set(edges)
    for e in chosen:
        if not g.has_edge(e):
            raise UnknownEdgeError(f"no edge {e}")
    return Multigraph(g.vertex_count, {e: g.endpoints(e) for e in chosen})


def disjoint_union(
    parts: Sequence[Multigraph],
) -> tuple[Multigraph, list[dict[VertexId, VertexId]], list[dict[EdgeId, EdgeId]]]:
    """Disjoint union with per-part injection maps (old id -> new id)."""
    vertex_maps: list[dict[VertexId, VertexId]] = []
    edge_maps: list[dict[EdgeId, EdgeId]] = []
    pairs: dict[EdgeId, tuple[VertexId, VertexId]] = {}
    v_off = 0
    e_next = 0
    for part in parts:
        vmap = {v: v + v_off for v in part.vertices()}
        emap = {}
        for e in part.edge_ids():
            u, w = part.endpoints(e)
            pairs[e_next] = (vmap[u], vmap[w])
            emap[e] = e_next
            e_next += 1
        vertex_maps.append(vmap)
        edge_maps.append(emap)
        v_off += part.vertex_count
    return Multigraph(v_off, pairs), vertex_maps, edge_maps


def disjoint_copies(
    g: Multigraph, m: int
) -> tuple[Multigraph, dict[VertexId, tuple[VertexId, int]], dict[EdgeId, tuple[EdgeId, int]]]:
    """``m`` disjoint copies of ``g``; provenance maps give (original id, copy index)."""
    if m < 1:
        raise GraphStructureError(f"need at least one copy, got {m}")
    union, vmaps, emaps = disjoint_union([g] * m)
    vertex_origin = {new: (old, k) for k, vmap in enumerate(vmaps) for old, new in vmap.items()}
    edge_origin = {new: (old, k) for k, emap in enumerate(emaps) for old, new in emap.items()}
    return union, vertex_origin, edge_origin
