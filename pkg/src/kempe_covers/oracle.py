"""Brute-force ground truth at desk scale.

Exhaustively enumerates the legal edge colorings of a small graph,
partitions them into Kempe equivalence classes by breadth-first closure
under single switches, and answers equivalence queries (with a shortest
switch path) without passing to any cover. Also provides a seeded random
instance generator for tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .coloring import (
    EdgeColoring,
    SwitchSequence,
    bichromatic_cycles,
    common_degree,
)
from .errors import EnumerationLimitError, GraphStructureError, RegularityError
from .graph import Multigraph, is_regular

DEFAULT_MAX_EDGES = 30
#: above this edge count the instance generator stops sampling the second
#: coloring uniformly and falls back to a color permutation plus switch walk
SAMPLING_MAX_EDGES = 24


@dataclass(frozen=True, eq=False)
class ColoringCensus:
    """All legal colorings of a graph with their Kempe class partition.

    ``classes`` holds index tuples into ``colorings``; the representative of
    a class is its smallest index. ``paths`` maps a coloring index to a
    shortest switch sequence from its class representative.
    """

    graph: Multigraph
    colorings: tuple[EdgeColoring, ...]
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    paths: dict[int, SwitchSequence] = field(repr=False)


def _enumeration_order(g: Multigraph) -> list[int]:
    # vertex-local edge order prunes much earlier than raw id order
    order = []
    taken = set()
    for v in g.vertices():
        for e in g.edges_at(v):
            if e not in taken:
                taken.add(e)
                order.append(e)
    return order


def enumerate_legal_colorings(g: Multigraph, max_edges: int = DEFAULT_MAX_EDGES) -> list[EdgeColoring]:
    """All legal colorings, in increasing edge-id-lexicographic order.

    Backtracks over edges with per-vertex used-color sets. Refuses graphs
    with more than ``max_edges`` edges instead of hanging.
    """
    d = is_regular(g)
    if d is None:
        raise RegularityError("enumeration needs a regular graph")
    if g.edge_count > max_edges:
        raise EnumerationLimitError(
            f"{g.edge_count} edges exceeds the enumeration bound {max_edges}"
        )
    order = _enumeration_order(g)
    used = [set() for _ in range(g.vertex_count)]
    assignment: dict[int, int] = {}
    found: list[EdgeColoring] = []

    def backtrack(k: int) -> None:
        if k == len(order):
            found.append(EdgeColoring(d, dict(assignment)))
            return
        e = order[k]
        u, v = g.endpoints(e)
        for color in range(1, d + 1):
            if color in used[u] or color in used[v]:
                continue
            assignment[e] = color
            used[u].add(color)
            used[v].add(color)
            backtrack(k + 1)
            del assignment[e]
            used[u].discard(color)
            used[v].discard(color)

    backtrack(0)
    ids = g.edge_ids()
    found.sort(key=lambda c: tuple(c[e] for e in ids))
    return found


def _switch_neighbors(g: Multigraph, c: EdgeColoring):
    """All (switch, resulting coloring) pairs one Kempe switch away."""
    for i, j in combinations(range(1, c.degree + 1), 2):
        for cycle in bichromatic_cycles(g, c, i, j):
            flip = {i: j, j: i}
            yield cycle, c.recolored({e: flip[c[e]] for e in cycle.edges})


def kempe_class_partition(g: Multigraph, max_edges: int = DEFAULT_MAX_EDGES) -> ColoringCensus:
    """Partition all legal colorings into Kempe classes by BFS closure."""
    colorings = enumerate_legal_colorings(g, max_edges)
    index_of = {c: k for k, c in enumerate(colorings)}
    paths: dict[int, SwitchSequence] = {}
    classes: list[tuple[int, ...]] = []
    visited = [False] * len(colorings)
    for root in range(len(colorings)):
        if visited[root]:
            continue
        visited[root] = True
        paths[root] = ()
        members = [root]
        frontier = [root]
        while frontier:
            nxt = []
            for idx in frontier:
                for cycle, neighbor in _switch_neighbors(g, colorings[idx]):
                    n_idx = index_of[neighbor]
                    if not visited[n_idx]:
                        visited[n_idx] = True
                        paths[n_idx] = paths[idx] + (cycle,)
                        members.append(n_idx)
                        nxt.append(n_idx)
            frontier = nxt
        classes.append(tuple(sorted(members)))
    return ColoringCensus(
        graph=g,
        colorings=tuple(colorings),
        classes=tuple(classes),
        representatives=tuple(cls[0] for cls in classes),
        paths=paths,
    )


def equivalent_without_cover(
    g: Multigraph,
    c1: EdgeColoring,
    c2: EdgeColoring,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> SwitchSequence | None:
    """A shortest switch sequence from c1 to c2 on the graph itself, if any.

    Returns None when the colorings lie in different Kempe classes (the case
    that forces passing to a cover).
    """
    common_degree(g, c1, c2)
    if g.edge_count > max_edges:
        raise EnumerationLimitError(
            f"{g.edge_count} edges exceeds the enumeration bound {max_edges}"
        )
    if c1 == c2:
        return ()
    seen = {c1: ()}
    frontier = [c1]
    while frontier:
        nxt = []
        for current in frontier:
            for cycle, neighbor in _switch_neighbors(g, current):
                if neighbor in seen:
                    continue
                seen[neighbor] = seen[current] + (cycle,)
                if neighbor == c2:
                    return seen[neighbor]
                nxt.append(neighbor)
        frontier = nxt
    return None


def random_colored_instance(
    seed: int, d: int, n: int
) -> tuple[Multigraph, EdgeColoring, EdgeColoring]:
    """Seeded random d-regular instance with two legal colorings.

    The graph is a union of d uniformly shuffled perfect matchings on n
    vertices (parallel edges across matchings are kept; loops cannot occur),
    and the first coloring colors matching k with color k+1. The second is
    drawn uniformly from all legal colorings when the graph is small enough
    to enumerate, otherwise a random color permutation of the first followed
    by a random switch walk. Identical seeds give identical instances.
    """
    if d < 1:
        raise GraphStructureError(f"degree must be >= 1, got {d}")
    if n < 2 or n % 2:
        raise GraphStructureError(f"vertex count must be even and >= 2, got {n}")
    rng = random.Random(seed)
    pairs = []
    for _ in range(d):
        perm = list(range(n))
        rng.shuffle(perm)
        pairs.extend((perm[t], perm[t + 1]) for t in range(0, n, 2))
    g = Multigraph.from_edges(n, pairs)
    half = n // 2
    c1 = EdgeColoring(d, {e: e // half + 1 for e in g.edge_ids()})

    if g.edge_count <= SAMPLING_MAX_EDGES:
        legal = enumerate_legal_colorings(g)
        c2 = legal[rng.randrange(len(legal))]
    else:
        shuffled = list(range(1, d + 1))
        rng.shuffle(shuffled)
        relabel = {k + 1: shuffled[k] for k in range(d)}
        c2 = EdgeColoring(d, {e: relabel[c1[e]] for e in g.edge_ids()})
        for _ in range(2 * d):
            i, j = rng.sample(range(1, d + 1), 2)
            cycles = bichromatic_cycles(g, c2, min(i, j), max(i, j))
            cycle = cycles[rng.randrange(len(cycles))]
            flip = {min(i, j): max(i, j), max(i, j): min(i, j)}
            c2 = c2.recolored({e: flip[c2[e]] for e in cycle.edges})
    return g, c1, c2
