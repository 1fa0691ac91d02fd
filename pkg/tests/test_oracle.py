import pytest

from kempe_covers import (
    EdgeColoring,
    EnumerationLimitError,
    Multigraph,
    apply_sequence,
    enumerate_legal_colorings,
    equivalent_without_cover,
    is_legal,
    kempe_class_partition,
    random_colored_instance,
)

from conftest import make_k33, make_theta


def make_k4():
    return Multigraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def test_theta_has_six_colorings(theta):
    assert len(enumerate_legal_colorings(theta)) == 6


def test_k33_has_twelve_colorings(k33):
    # cross-check: equals the number of 3x3 Latin squares
    colorings = enumerate_legal_colorings(k33)
    assert len(colorings) == 12
    assert len(set(colorings)) == 12
    assert all(is_legal(k33, c) for c in colorings)


def test_enumeration_is_sorted_and_canonical(k33):
    colorings = enumerate_legal_colorings(k33)
    vectors = [tuple(c[e] for e in k33.edge_ids()) for c in colorings]
    assert vectors == sorted(vectors)


def test_petersen_has_no_coloring(petersen):
    assert enumerate_legal_colorings(petersen) == []


def test_enumeration_refuses_large_graphs():
    big = Multigraph.from_edges(32, [(i, (i + 1) % 32) for i in range(32)])
    with pytest.raises(EnumerationLimitError):
        enumerate_legal_colorings(big)
    assert len(enumerate_legal_colorings(big, max_edges=32)) == 2


def test_theta_single_class_of_six(theta):
    census = kempe_class_partition(theta)
    assert len(census.colorings) == 6
    assert len(census.classes) == 1
    assert len(census.classes[0]) == 6


def test_k33_two_classes(k33):
    census = kempe_class_partition(k33)
    assert len(census.classes) == 2
    assert sorted(len(cls) for cls in census.classes) == [6, 6]
    assert census.representatives == (0, 1)


def test_k4_single_class_of_six():
    census = kempe_class_partition(make_k4())
    assert len(census.colorings) == 6
    assert len(census.classes) == 1


def test_census_paths_replay(k33):
    census = kempe_class_partition(k33)
    for cls in census.classes:
        rep = census.colorings[cls[0]]
        for idx in cls:
            replayed = apply_sequence(k33, rep, census.paths[idx])
            assert replayed == census.colorings[idx]


def test_class_count_stable_under_edge_relabeling():
    # same graph with edges created in a different order
    k33 = make_k33()
    reordered = Multigraph.from_edges(6, [(i, j) for j in range(3, 6) for i in range(3)])
    assert len(kempe_class_partition(k33).classes) == len(
        kempe_class_partition(reordered).classes
    )


def test_equivalent_without_cover_trivial(k33, k33_pair):
    c1, _ = k33_pair
    assert equivalent_without_cover(k33, c1, c1) == ()


def test_equivalent_without_cover_negative(k33, k33_pair):
    c1, c2 = k33_pair
    assert equivalent_without_cover(k33, c1, c2) is None


def test_equivalent_without_cover_one_transposition(theta, theta_coloring):
    goal = EdgeColoring(3, {0: 2, 1: 1, 2: 3})
    path = equivalent_without_cover(theta, theta_coloring, goal)
    assert path is not None
    assert len(path) == 1
    assert apply_sequence(theta, theta_coloring, path) == goal


def test_shortest_path_property(theta, theta_coloring):
    census = kempe_class_partition(make_theta())
    # every coloring of the single class reachable, path lengths at most 2
    # (transpositions generate the symmetric group on three edges)
    assert max(len(p) for p in census.paths.values()) <= 2


def test_random_instance_deterministic():
    a = random_colored_instance(123, 3, 8)
    b = random_colored_instance(123, 3, 8)
    assert a[0] == b[0] and a[1] == b[1] and a[2] == b[2]
    c = random_colored_instance(124, 3, 8)
    assert (a[0], a[1], a[2]) != (c[0], c[1], c[2])


def test_random_instances_are_legal():
    for seed in range(30):
        g, c1, c2 = random_colored_instance(seed, 3, 6)
        assert is_legal(g, c1)
        assert is_legal(g, c2)


def test_random_two_regular_instances():
    g, c1, c2 = random_colored_instance(5, 2, 8)
    assert all(g.degree(v) == 2 for v in g.vertices())
    assert is_legal(g, c1) and is_legal(g, c2)


def test_random_instance_rejects_bad_parameters():
    from kempe_covers import GraphStructureError

    with pytest.raises(GraphStructureError):
        random_colored_instance(0, 3, 7)
    with pytest.raises(GraphStructureError):
        random_colored_instance(0, 0, 8)


def test_large_instance_uses_walk_fallback():
    # 3-regular on 18 vertices -> 27 edges, beyond the uniform-sampling cap
    g, c1, c2 = random_colored_instance(9, 3, 18)
    assert g.edge_count == 27
    assert is_legal(g, c1) and is_legal(g, c2)
