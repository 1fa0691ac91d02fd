"""Covering maps between multigraphs.

A graph map ``p`` from a cover onto a base is a covering when it is
surjective and restricts, at every cover vertex, to a bijection between the
edges there and the edges at the image vertex. Covers of d-regular graphs
are d-regular, and a legal base coloring pulls back to a legal cover
coloring. This module also lifts switches and whole switch sequences through
covers, composes covers, and extends a cover of a spanning subgraph to a
cover of the full graph.

Fiber sizes are required to be constant across all base vertices, even for
disconnected bases; the equivalence construction normalizes every
intermediate cover to a uniform degree, so nothing more general is needed
and composition stays well-defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .coloring import (
    BichromaticCycle,
    EdgeColoring,
    SwitchSequence,
    _validate_switch,
    _walk_cycle,
    is_legal,
    kempe_switch,
)
from .errors import CoveringError
from .graph import EdgeId, Multigraph, VertexId, disjoint_copies


@dataclass(frozen=True)
class Verdict:
    """Boolean check result with a first-violation diagnostic."""

    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


class CoveringMap:
    """Vertex and edge maps from a source graph onto a target graph.

    Construction does not validate; run :func:`verify_covering` explicitly
    (tests need to build broken maps on purpose). ``degree`` validates.
    """

    __slots__ = ("source", "target", "_vmap", "_emap", "_degree")

    def __init__(
        self,
        source: Multigraph,
        target: Multigraph,
        vertex_map: Sequence[VertexId],
        edge_map: Mapping[EdgeId, EdgeId],
    ):
        self.source = source
        self.target = target
        self._vmap = tuple(vertex_map)
        self._emap = dict(edge_map)
        self._degree: int | None = None

    @classmethod
    def identity(cls, g: Multigraph) -> "CoveringMap":
        return cls(g, g, tuple(g.vertices()), {e: e for e in g.edge_ids()})

    def vertex_image(self, v: VertexId) -> VertexId:
        return self._vmap[v]

    def edge_image(self, e: EdgeId) -> EdgeId:
        return self._emap[e]

    @property
    def vertex_map(self) -> tuple[VertexId, ...]:
        return self._vmap

    @property
    def edge_map(self) -> dict[EdgeId, EdgeId]:
        return dict(self._emap)

    def vertex_fiber(self, v: VertexId) -> tuple[VertexId, ...]:
        """Source vertices over ``v``, in increasing id order."""
        return tuple(w for w in self.source.vertices() if self._vmap[w] == v)

    def edge_fiber(self, e: EdgeId) -> tuple[EdgeId, ...]:
        return tuple(sorted(f for f, img in self._emap.items() if img == e))

    @property
    def degree(self) -> int:
        """Common fiber size; raises if fibers are not constant."""
        if self._degree is None:
            sizes = [0] * self.target.vertex_count
            for v in self.source.vertices():
                sizes[self._vmap[v]] += 1
            if not sizes or len(set(sizes)) != 1:
                raise CoveringError(f"fiber sizes not constant: {sorted(set(sizes))}")
            self._degree = sizes[0]
        return self._degree

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoveringMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self._vmap == other._vmap
            and self._emap == other._emap
        )

    def __repr__(self) -> str:
        return f"CoveringMap({self.source!r} -> {self.target!r})"


def verify_covering(p: CoveringMap) -> Verdict:
    """Check totality, incidence, surjectivity, local bijection, constant fibers."""
    src, tgt = p.source, p.target
    if len(p.vertex_map) != src.vertex_count:
        return Verdict(False, "vertex map is not total on the source")
    if set(p.edge_map) != set(src.edge_ids()):
        return Verdict(False, "edge map does not match the source edge set")
    for v in src.vertices():
        if not tgt.has_vertex(p.vertex_image(v)):
            return Verdict(False, f"vertex {v} maps outside the target")
    for e in src.edge_ids():
        img = p.edge_image(e)
        if not tgt.has_edge(img):
            return Verdict(False, f"edge {e} maps outside the target")
        u, w = src.endpoints(e)
        if {p.vertex_image(u), p.vertex_image(w)} != set(tgt.endpoints(img)):
            return Verdict(False, f"edge {e} does not preserve incidence")
    if {p.vertex_image(v) for v in src.vertices()} != set(tgt.vertices()):
        return Verdict(False, "vertex map is not surjective")
    if {p.edge_image(e) for e in src.edge_ids()} != set(tgt.edge_ids()):
        return Verdict(False, "edge map is not surjective")
    for v in src.vertices():
        local = [p.edge_image(e) for e in src.edges_at(v)]
        if len(set(local)) != len(local):
            return Verdict(False, f"local bijection fails at source vertex {v} (collision)")
        if set(local) != set(tgt.edges_at(p.vertex_image(v))):
            return Verdict(False, f"local bijection fails at source vertex {v}")
    sizes = {len(p.vertex_fiber(v)) for v in tgt.vertices()}
    if len(sizes) != 1:
        return Verdict(False, f"fiber sizes not constant: {sorted(sizes)}")
    return Verdict(True)


def require_covering(p: CoveringMap) -> CoveringMap:
    verdict = verify_covering(p)
    if not verdict:
        raise CoveringError(verdict.reason)
    return p


def covering_degree(p: CoveringMap) -> int:
    return p.degree


def pullback_coloring(p: CoveringMap, c: EdgeColoring) -> EdgeColoring:
    """Pull a coloring of the target back through ``p`` (compose with the edge map)."""
    pulled = EdgeColoring(c.degree, {e: c[p.edge_image(e)] for e in p.source.edge_ids()})
    if not is_legal(p.source, pulled):
        raise CoveringError("pull-back of a legal coloring came out illegal; p is not a covering")
    return pulled


def lift_switch(p: CoveringMap, c: EdgeColoring, cycle: BichromaticCycle) -> list[BichromaticCycle]:
    """Components of the cycle's preimage, each bi-chromatic for the pulled-back coloring.

    Applying every returned switch to the pull-back equals pulling back the
    switched base coloring; the components are disjoint, so any order works.
    """
    _validate_switch(p.target, c, cycle)
    member = {e: None for e in sorted(p.edge_map) if p.edge_image(e) in cycle.edges}
    lifted = []
    used: set[EdgeId] = set()
    for e in member:
        if e in used:
            continue
        walk = _walk_cycle(p.source, member, (e, 0))
        used.update(f for f, _ in walk)
        lifted.append(BichromaticCycle(cycle.colors, walk))
    return lifted


def lift_sequence(p: CoveringMap, c: EdgeColoring, sequence: Sequence[BichromaticCycle]) -> SwitchSequence:
    """Lift a replayable sequence switch by switch against the evolving base coloring."""
    out: list[BichromaticCycle] = []
    current = c
    for cycle in sequence:
        out.extend(lift_switch(p, current, cycle))
        current = kempe_switch(p.target, current, cycle)
    return tuple(out)


def compose(p: CoveringMap, q: CoveringMap) -> CoveringMap:
    """The covering ``p`` after ``q`` (q's target must be p's source)."""
    if q.target != p.source:
        raise CoveringError("cannot compose: middle graphs differ")
    r = CoveringMap(
        q.source,
        p.target,
        tuple(p.vertex_image(q.vertex_image(v)) for v in q.source.vertices()),
        {e: p.edge_image(q.edge_image(e)) for e in q.source.edge_ids()},
    )
    return require_covering(r)


def copies_cover(g: Multigraph, m: int) -> CoveringMap:
    """The projection of ``m`` disjoint copies of ``g`` onto ``g``."""
    union, vertex_origin, edge_origin = disjoint_copies(g, m)
    p = CoveringMap(
        union,
        g,
        tuple(vertex_origin[v][0] for v in union.vertices()),
        {e: edge_origin[e][0] for e in union.edge_ids()},
    )
    return require_covering(p)


def extend_subgraph_cover(g: Multigraph, h: Multigraph, p: CoveringMap) -> CoveringMap:
    """Extend a constant-fiber cover of a spanning subgraph to a cover of ``g``.

    ``h`` must be a spanning subgraph of ``g`` and ``p`` a covering of ``h``
    with fiber size ``m`` at every vertex. Each edge of ``g`` missing from
    ``h`` lifts to ``m`` new edges wired between equal fiber labels, where
    label k at a vertex means the k-th smallest source vertex over it. The
    result restricts to ``p`` on the source of ``p`` (ids untouched) and has
    the same degree ``m``.
    """
    if h.vertex_count != g.vertex_count:
        raise CoveringError("subgraph is not spanning: vertex sets differ")
    for e in h.edge_ids():
        if not g.has_edge(e) or g.endpoints(e) != h.endpoints(e):
            raise CoveringError(f"edge {e} of the subgraph is not an edge of the full graph")
    if p.target != h:
        raise CoveringError("cover does not map onto the given subgraph")
    require_covering(p)
    m = p.degree  # raises on non-constant fibers

    fibers = {v: p.vertex_fiber(v) for v in g.vertices()}
    pairs = p.source.edge_table()
    emap = p.edge_map
    next_id = max(pairs, default=-1) + 1
    missing = [e for e in g.edge_ids() if not h.has_edge(e)]
    for e in missing:
        u, w = g.endpoints(e)
        for k in range(m):
            pairs[next_id] = (fibers[u][k], fibers[w][k])
            emap[next_id] = e
            next_id += 1
    extended = Multigraph(p.source.vertex_count, pairs)
    return require_covering(CoveringMap(extended, g, p.vertex_map, emap))
