"""Constructive Kempe equivalence of pulled-back colorings on a finite cover.

Any two legal colorings of a finite d-regular graph become Kempe equivalent
after pulling back through a suitable finite cover, and the covering degree
is bounded by ``beta(d)`` with beta(1) = beta(2) = 1 and
beta(d) = (d-1) * beta(d-1)^2. The construction is a recursion on d:

* d <= 2: no cover is needed. A 2-regular graph is a union of even cycles,
  each a single bi-chromatic cycle; switching the cycles where the two
  colorings differ transforms one into the other.
* top-color classes already equal: drop the top color. The remaining edges
  form a spanning (d-1)-regular subgraph carrying both colorings; recurse
  there, extend the resulting cover to the full graph (the top-color edges
  lift along equal fiber labels), and replay the same switches.
* otherwise: align the top color first with the degree-(d-1) alignment
  cover, then run the aligned case twice, once from the pulled-back first
  coloring to the shifted coloring and once from the aligned coloring to
  the pulled-back second coloring. Composing the three covers multiplies
  the degrees to (d-1) * beta(d-1)^2 exactly.

Every result is normalized to degree exactly beta(d) by padding with
disjoint copies (the switch sequence lifts through the copy projection),
except the trivial short-circuit for identical inputs, which keeps the
identity cover. Padding keeps fibers constant across disconnected
intermediate subgraphs, which is what lets cover extension stay in the
constant-fiber case throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alignment import align_color
from .coloring import (
    BichromaticCycle,
    EdgeColoring,
    SwitchSequence,
    bichromatic_cycles,
    common_degree,
    is_legal,
    kempe_switch,
)
from .covering import (
    CoveringMap,
    Verdict,
    compose,
    copies_cover,
    extend_subgraph_cover,
    lift_sequence,
    pullback_coloring,
    require_covering,
    verify_covering,
)
from .errors import ColoringError, CoveringError, GraphStructureError, KempeCoversError
from .graph import (
    EdgeId,
    Multigraph,
    VertexId,
    connected_components,
    disjoint_union,
    is_regular,
    spanning_subgraph,
)


def beta(d: int) -> int:
    """Covering-degree bound: beta(1) = beta(2) = 1, beta(d) = (d-1)*beta(d-1)^2."""
    if d < 1:
        raise GraphStructureError(f"beta needs d >= 1, got {d}")
    value = 1
    for k in range(3, d + 1):
        value = (k - 1) * value * value
    return value


@dataclass(frozen=True)
class EquivalenceWitness:
    """A cover and a switch sequence carrying one pull-back to the other.

    Replaying ``switches`` on the cover, starting from the pull-back of
    ``start``, must end at the pull-back of ``goal`` edge for edge.
    """

    graph: Multigraph
    start: EdgeColoring
    goal: EdgeColoring
    cover: CoveringMap
    switches: SwitchSequence


def verify_witness(w: EquivalenceWitness) -> Verdict:
    """Machine-check a witness: cover axioms, replay equality, degree bound."""
    try:
        if w.cover.target != w.graph:
            return Verdict(False, "cover does not map onto the witness graph")
        verdict = verify_covering(w.cover)
        if not verdict:
            return verdict
        d = is_regular(w.graph)
        if d is None:
            return Verdict(False, "witness graph is not regular")
        if w.start.degree != d or w.goal.degree != d:
            return Verdict(False, "coloring degree does not match the graph")
        if not is_legal(w.graph, w.start):
            return Verdict(False, "start coloring is not legal")
        if not is_legal(w.graph, w.goal):
            return Verdict(False, "goal coloring is not legal")
        current = pullback_coloring(w.cover, w.start)
        goal = pullback_coloring(w.cover, w.goal)
        for k, cycle in enumerate(w.switches):
            current = kempe_switch(w.cover.source, current, cycle)
            if not is_legal(w.cover.source, current):
                return Verdict(False, f"coloring illegal after switch {k}")
        if current != goal:
            for e in w.cover.source.edge_ids():
                if current[e] != goal[e]:
                    return Verdict(
                        False,
                        f"replay mismatch at cover edge {e}: got {current[e]}, want {goal[e]}",
                    )
            return Verdict(False, "replay mismatch")
        if w.cover.degree > beta(d):
            return Verdict(False, f"covering degree {w.cover.degree} exceeds beta({d}) = {beta(d)}")
        return Verdict(True)
    except KempeCoversError as exc:
        return Verdict(False, str(exc))


def _pad_to_degree(
    cover: CoveringMap,
    switches: SwitchSequence,
    start: EdgeColoring,
    target_degree: int,
) -> tuple[CoveringMap, SwitchSequence]:
    """Pad a witness cover with disjoint copies up to an exact degree.

    ``start`` is the base coloring the switches replay from; the sequence is
    lifted through the copy projection so it replays on every copy.
    """
    factor, remainder = divmod(target_degree, cover.degree)
    if remainder:
        raise CoveringError(
            f"cannot normalize degree {cover.degree} to {target_degree}: not a divisor"
        )
    if factor == 1:
        return cover, tuple(switches)
    projection = copies_cover(cover.source, factor)
    lifted = lift_sequence(projection, pullback_coloring(cover, start), switches)
    return compose(cover, projection), lifted


def _base_two_witness(
    g: Multigraph, c1: EdgeColoring, c2: EdgeColoring
) -> tuple[CoveringMap, SwitchSequence]:
    """d = 2: switch exactly the cycles on which the colorings differ."""
    switches = []
    for cycle in bichromatic_cycles(g, c1, 1, 2):
        agree = [c1[e] == c2[e] for e in sorted(cycle.edges)]
        if all(agree):
            continue
        if any(agree):
            raise ColoringError("legal 2-colorings of a cycle must agree fully or swap fully")
        switches.append(cycle)
    return CoveringMap.identity(g), tuple(switches)


def _aligned_witness(
    g: Multigraph, c1: EdgeColoring, c2: EdgeColoring
) -> tuple[CoveringMap, SwitchSequence]:
    """Equal top-color classes: recurse on the spanning (d-1)-regular subgraph.

    The sub-witness cover extends to the full graph by lifting each
    top-colored edge along equal fiber labels, and its switch sequence is
    reused verbatim (no switch touches the top color). Result degree is
    exactly beta(d-1).
    """
    d = common_degree(g, c1, c2)
    top = c1.color_class(d)
    if top != c2.color_class(d):
        raise ColoringError("aligned recursion needs equal top-color classes")
    rest = sorted(set(g.edge_ids()) - top)
    h = spanning_subgraph(g, rest)
    sub = kempe_cover_witness(h, c1.restricted(rest, d - 1), c2.restricted(rest, d - 1))
    extended = extend_subgraph_cover(g, h, sub.cover)
    return _pad_to_degree(extended, sub.switches, c1, beta(d - 1))


def _misaligned_witness(
    g: Multigraph, c1: EdgeColoring, c2: EdgeColoring, d: int
) -> tuple[CoveringMap, SwitchSequence]:
    """Align the top color, then run the aligned recursion on both sides."""
    ar = align_color(g, c1, c2)
    p = ar.cover
    c1_up = pullback_coloring(p, c1)
    c2_up = pullback_coloring(p, c2)

    r1, s1 = _aligned_witness(p.source, c1_up, ar.start_coloring)
    aligned_up = pullback_coloring(r1, ar.aligned_coloring)
    c2_up_up = pullback_coloring(r1, c2_up)
    r2, s2 = _aligned_witness(r1.source, aligned_up, c2_up_up)

    r12 = compose(r1, r2)
    cover = compose(p, r12)
    switches = (
        lift_sequence(r2, pullback_coloring(r1, c1_up), s1)
        + lift_sequence(r12, ar.start_coloring, ar.switches)
        + s2
    )
    return cover, switches


def _induced_component(
    g: Multigraph, vertices: frozenset[VertexId]
) -> tuple[Multigraph, tuple[VertexId, ...], dict[EdgeId, EdgeId]]:
    """Component as a fresh dense graph plus maps back into ``g``."""
    ordered = sorted(vertices)
    to_sub = {v: k for k, v in enumerate(ordered)}
    edge_ids = [e for e in g.edge_ids() if g.endpoints(e)[0] in vertices]
    pairs = []
    for e in edge_ids:
        u, w = g.endpoints(e)
        pairs.append((to_sub[u], to_sub[w]))
    sub = Multigraph.from_edges(len(ordered), pairs)
    return sub, tuple(ordered), dict(enumerate(edge_ids))


def _per_component_witness(
    g: Multigraph, c1: EdgeColoring, c2: EdgeColoring, d: int
) -> tuple[CoveringMap, SwitchSequence]:
    """Witness each component separately, pad to beta(d), take the union."""
    target = beta(d)
    parts = []
    for comp in connected_components(g):
        sub, vback, eback = _induced_component(g, comp)
        sub_c1 = EdgeColoring(d, {e: c1[eback[e]] for e in sub.edge_ids()})
        sub_c2 = EdgeColoring(d, {e: c2[eback[e]] for e in sub.edge_ids()})
        w = kempe_cover_witness(sub, sub_c1, sub_c2)
        cover, switches = _pad_to_degree(w.cover, w.switches, sub_c1, target)
        parts.append((cover, switches, vback, eback))

    union, vmaps, emaps = disjoint_union([cover.source for cover, _, _, _ in parts])
    vertex_map = [0] * union.vertex_count
    edge_map: dict[EdgeId, EdgeId] = {}
    all_switches: list[BichromaticCycle] = []
    for idx, (cover, switches, vback, eback) in enumerate(parts):
        for old_v, new_v in vmaps[idx].items():
            vertex_map[new_v] = vback[cover.vertex_image(old_v)]
        for old_e, new_e in emaps[idx].items():
            edge_map[new_e] = eback[cover.edge_image(old_e)]
        for cyc in switches:
            all_switches.append(
                BichromaticCycle(cyc.colors, tuple((emaps[idx][e], slot) for e, slot in cyc.darts))
            )
    combined = require_covering(CoveringMap(union, g, vertex_map, edge_map))
    return combined, tuple(all_switches)


def kempe_cover_witness(g: Multigraph, c1: EdgeColoring, c2: EdgeColoring) -> EquivalenceWitness:
    """Build a verified witness that the two pull-backs are Kempe equivalent.

    The covering degree is exactly beta(d), except for literally identical
    inputs where the identity cover (degree 1) is returned.
    """
    d = common_degree(g, c1, c2)
    if c1 == c2:
        return EquivalenceWitness(g, c1, c2, CoveringMap.identity(g), ())
    # d = 1 forces c1 == c2 (the only color is 1), so d >= 2 from here on.
    if d == 2:
        cover, switches = _base_two_witness(g, c1, c2)
        return EquivalenceWitness(g, c1, c2, cover, switches)

    components = connected_components(g)
    if len(components) > 1:
        cover, switches = _per_component_witness(g, c1, c2, d)
    elif c1.color_class(d) == c2.color_class(d):
        raw_cover, raw_switches = _aligned_witness(g, c1, c2)
        cover, switches = _pad_to_degree(raw_cover, raw_switches, c1, beta(d))
    else:
        cover, switches = _misaligned_witness(g, c1, c2, d)
    return EquivalenceWitness(g, c1, c2, cover, switches)
