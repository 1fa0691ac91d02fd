"""Legal edge colorings, bi-chromatic cycles, and Kempe switches.

A legal coloring of a d-regular graph assigns a color from ``{1..d}`` to
every edge so that adjacent edges differ. For any two colors i != j the
edges colored i or j form a disjoint union of cycles; switching the two
colors along one such cycle (a Kempe switch) yields another legal coloring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ColoringError, IllegalColoringError, RegularityError, StaleSwitchError
from .graph import Dart, EdgeId, Multigraph, is_regular, spanning_subgraph

Color = int


class EdgeColoring:
    """Total map edge id -> color in ``{1..degree}``. Immutable and hashable."""

    __slots__ = ("_degree", "_colors", "_key")

    def __init__(self, degree: int, colors: Mapping[EdgeId, Color]):
        if degree < 1:
            raise ColoringError(f"ambient degree must be >= 1, got {degree}")
        for e, c in colors.items():
            if not (1 <= c <= degree):
                raise ColoringError(f"edge {e}: color {c} outside 1..{degree}")
        self._degree = degree
        self._colors = dict(colors)
        self._key = (degree, tuple(sorted(self._colors.items())))

    @property
    def degree(self) -> int:
        return self._degree

    def __getitem__(self, e: EdgeId) -> Color:
        try:
            return self._colors[e]
        except KeyError:
            raise ColoringError(f"edge {e} is not colored") from None

    def __contains__(self, e: EdgeId) -> bool:
        return e in self._colors

    def items(self):
        return self._colors.items()

    def edge_ids(self) -> tuple[EdgeId, ...]:
        return tuple(sorted(self._colors))

    def color_class(self, color: Color) -> frozenset[EdgeId]:
        """Edge set carrying the given color."""
        return frozenset(e for e, c in self._colors.items() if c == color)

    def recolored(self, updates: Mapping[EdgeId, Color]) -> "EdgeColoring":
        merged = dict(self._colors)
        merged.update(updates)
        return EdgeColoring(self._degree, merged)

    def restricted(self, edges: Iterable[EdgeId], degree: int | None = None) -> "EdgeColoring":
        """Restriction to an edge subset, optionally with a smaller ambient degree."""
        return EdgeColoring(
            degree if degree is not None else self._degree,
            {e: self._colors[e] for e in edges},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self) -> str:
        return f"EdgeColoring(degree={self._degree}, edges={len(self._colors)})"


@dataclass(frozen=True)
class BichromaticCycle:
    """A component of the two-color subgraph, as a canonical closed dart walk.

    ``colors`` is the ordered pair (i, j) with i < j. ``darts`` lists one dart
    per edge; dart k exits the walk's k-th vertex, and the walk closes up. The
    canonical form starts at the lexicographically smallest dart of the cycle
    and is therefore unique per component.
    """

    colors: tuple[Color, Color]
    darts: tuple[Dart, ...]

    @property
    def edges(self) -> frozenset[EdgeId]:
        return frozenset(e for e, _ in self.darts)

    def __len__(self) -> int:
        return len(self.darts)


#: A replayable ordered list of switches.
SwitchSequence = tuple[BichromaticCycle, ...]


def _check_total(g: Multigraph, c: EdgeColoring) -> None:
    carrier = set(g.edge_ids())
    colored = set(e for e, _ in c.items())
    if carrier != colored:
        missing = sorted(carrier - colored)[:4]
        extra = sorted(colored - carrier)[:4]
        raise ColoringError(
            f"coloring does not match carrier (missing={missing}, foreign={extra})"
        )


def is_legal(g: Multigraph, c: EdgeColoring) -> bool:
    """True iff no two adjacent edges of ``g`` share a color under ``c``."""
    _check_total(g, c)
    for v in g.vertices():
        seen = set()
        for e, _ in g.darts_at(v):
            col = c[e]
            if col in seen:
                return False
            seen.add(col)
    return True


def require_legal(g: Multigraph, c: EdgeColoring) -> None:
    if not is_legal(g, c):
        raise IllegalColoringError("coloring is not legal on this graph")


def common_degree(g: Multigraph, c1: EdgeColoring, c2: EdgeColoring) -> int:
    """Validate a regular carrier with two legal colorings of its degree; return d."""
    d = is_regular(g)
    if d is None:
        raise RegularityError("graph is not regular")
    if c1.degree != d or c2.degree != d:
        raise ColoringError(
            f"colorings have degrees {c1.degree}, {c2.degree}; graph is {d}-regular"
        )
    require_legal(g, c1)
    require_legal(g, c2)
    return d


def color_class_subgraph(g: Multigraph, c: EdgeColoring, colors: Iterable[Color]) -> Multigraph:
    """Spanning subgraph on the edges whose color lies in ``colors``."""
    chosen = set(colors)
    for col in chosen:
        if not (1 <= col <= c.degree):
            raise ColoringError(f"color {col} outside 1..{c.degree}")
    _check_total(g, c)
    return spanning_subgraph(g, (e for e in g.edge_ids() if c[e] in chosen))


def _walk_cycle(g: Multigraph, member: dict[EdgeId, None], start: Dart) -> tuple[Dart, ...]:
    """Closed walk through ``member`` edges starting at ``start``.

    Assumes every vertex on the support meets exactly two member edges.
    """
    darts = [start]
    e, slot = start
    while True:
        v = g.endpoints(e)[1 - slot]  # arrive here
        nxt = None
        for f, fslot in g.darts_at(v):  # darts_at(v) darts all have source v
            if f != e and f in member:
                nxt = (f, fslot)
                break
        if nxt is None or len(darts) > len(member):
            raise IllegalColoringError("two-color subgraph is not 2-regular on its support")
        if nxt == darts[0]:
            return tuple(darts)
        darts.append(nxt)
        e, slot = nxt


def bichromatic_cycles(g: Multigraph, c: EdgeColoring, i: Color, j: Color) -> list[BichromaticCycle]:
    """The components of the {i, j}-colored subgraph, canonicalized and sorted.

    Requires a legal coloring; raises if the two-color subgraph fails to be
    2-regular on its support (which would mean the coloring was not legal).
    """
    if i == j:
        raise ColoringError(f"need two distinct colors, got {i} twice")
    lo, hi = min(i, j), max(i, j)
    _check_total(g, c)
    member = {e: None for e in g.edge_ids() if c[e] in (lo, hi)}
    cycles = []
    used = set()
    for e in member:  # increasing id order
        if e in used:
            continue
        walk = _walk_cycle(g, member, (e, 0))
        used.update(f for f, _ in walk)
        cycles.append(BichromaticCycle((lo, hi), walk))
    return cycles


def _validate_switch(g: Multigraph, c: EdgeColoring, cycle: BichromaticCycle, index=None) -> None:
    """Raise StaleSwitchError unless ``cycle`` is bi-chromatic for ``c``."""

    def stale(msg):
        at = "" if index is None else f" (sequence position {index})"
        return StaleSwitchError(f"stale switch{at}: {msg}", index=index)

    lo, hi = cycle.colors
    if not (1 <= lo < hi <= c.degree):
        raise stale(f"color pair {cycle.colors} invalid for degree {c.degree}")
    if not cycle.darts:
        raise stale("empty cycle")
    edges = [e for e, _ in cycle.darts]
    if len(set(edges)) != len(edges):
        raise stale("repeated edge in walk")
    # closed walk, colors alternating
    prev_color = None
    for k, (e, slot) in enumerate(cycle.darts):
        if not g.has_edge(e):
            raise stale(f"edge {e} not in graph")
        col = c[e]
        if col not in (lo, hi):
            raise stale(f"edge {e} has color {col}, not in {cycle.colors}")
        if col == prev_color:
            raise stale(f"colors do not alternate at edge {e}")
        prev_color = col
        nxt_e, nxt_slot = cycle.darts[(k + 1) % len(cycle.darts)]
        if g.endpoints(e)[1 - slot] != g.endpoints(nxt_e)[nxt_slot]:
            raise stale(f"walk breaks between edges {e} and {nxt_e}")
    if c[cycle.darts[-1][0]] == c[cycle.darts[0][0]] and len(cycle.darts) > 1:
        raise stale("colors do not alternate around the closing edge")
    # full component: at every visited vertex the {lo, hi}-edges are the
    # cycle's own two edges, nothing more
    cycle_edges = cycle.edges
    for e, slot in cycle.darts:
        v = g.endpoints(e)[slot]
        local = [f for f, _ in g.darts_at(v) if c[f] in (lo, hi)]
        if len(local) != 2 or any(f not in cycle_edges for f in local):
            raise stale(f"cycle is not a full two-color component at vertex {v}")


def kempe_switch(g: Multigraph, c: EdgeColoring, cycle: BichromaticCycle) -> EdgeColoring:
    """Transpose the cycle's two colors along it; all other edges unchanged."""
    _validate_switch(g, c, cycle)
    lo, hi = cycle.colors
    flip = {lo: hi, hi: lo}
    return c.recolored({e: flip[c[e]] for e in cycle.edges})


def apply_sequence(g: Multigraph, c: EdgeColoring, sequence: Sequence[BichromaticCycle]) -> EdgeColoring:
    """Left-to-right replay of switches; fails on the first stale switch."""
    current = c
    for k, cycle in enumerate(sequence):
        _validate_switch(g, current, cycle, index=k)
        lo, hi = cycle.colors
        flip = {lo: hi, hi: lo}
        current = current.recolored({e: flip[current[e]] for e in cycle.edges})
    return current
