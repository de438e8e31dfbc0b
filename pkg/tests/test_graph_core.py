"""Graph primitives: graph6 codec, BFS partitions, generators, enumeration."""

import numpy as np
import pytest

from pdrkit import (
    ConnectivityError,
    Graph,
    Graph6Error,
    UnsupportedSizeError,
    adjacency_powers,
    bfs,
    bipartition,
    distance_matrices,
    enumerate_connected,
    generate_named,
    parse_graph6,
    serialize_graph6,
)


def reference_decode(s: str) -> set[tuple[int, int]]:
    # Independent bit-string decoder: no shared code with the library path.
    n = ord(s[0]) - 63
    stream = "".join(format(ord(ch) - 63, "06b") for ch in s[1:])
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if stream[k] == "1":
                edges.add((i, j))
            k += 1
    return edges


def graph_edges(g: Graph) -> set[tuple[int, int]]:
    return {(int(i), int(j)) for i, j in zip(*np.nonzero(np.triu(g.adjacency)))}


# --- graph6 parsing -------------------------------------------------------


def test_parse_k2():
    g = parse_graph6("A_")
    assert g.n == 2 and g.edge_count == 1
    assert graph_edges(g) == {(0, 1)}


def test_parse_k3():
    g = parse_graph6("Bw")
    assert g.n == 3 and graph_edges(g) == {(0, 1), (0, 2), (1, 2)}


def test_parse_path3():
    g = parse_graph6("Bg")
    assert graph_edges(g) == {(0, 1), (1, 2)}


def test_parse_accepts_bytes():
    assert parse_graph6(b"Bw") == parse_graph6("Bw")


def test_parse_matches_reference_decoder():
    for s in ["A_", "Bw", "Bg", "DQc", "E?~o", "C]"]:
        assert graph_edges(parse_graph6(s)) == reference_decode(s)


def test_parse_matches_networkx():
    nx = pytest.importorskip("networkx")
    rng = np.random.default_rng(7)
    for n in [1, 2, 5, 13, 30, 62]:
        adj = np.zeros((n, n), dtype=bool)
        iu = np.triu_indices(n, 1)
        bits = rng.random(len(iu[0])) < 0.4
        adj[iu] = bits
        adj |= adj.T
        g = Graph.from_adjacency(adj)
        s = serialize_graph6(g)
        h = nx.from_graph6_bytes(s.encode("ascii"))
        assert h.number_of_nodes() == n
        assert {tuple(sorted(e)) for e in h.edges()} == graph_edges(g)


@pytest.mark.parametrize(
    "data, offset",
    [
        ("", 0),
        ("~??", 0),  # long form prefix
        ("?", 0),  # zero vertices
        ("B", 1),  # payload too short
        ("A__", 2),  # payload too long
        ("B\x20w", 1),  # byte below 63
        ("B\x7fw", 1),  # byte above 126
    ],
)
def test_parse_errors_carry_offsets(data, offset):
    with pytest.raises(Graph6Error) as exc:
        parse_graph6(data)
    assert exc.value.offset == offset


# --- graph6 serialization -------------------------------------------------


def test_serialize_known_strings():
    assert serialize_graph6(generate_named("complete", 2)) == "A_"
    assert serialize_graph6(generate_named("complete", 3)) == "Bw"
    assert serialize_graph6(generate_named("complete", 1)) == "@"


def test_serialize_rejects_large_graphs():
    with pytest.raises(UnsupportedSizeError):
        serialize_graph6(generate_named("complete_bipartite", 31, 32))


def test_round_trip_exhaustive_small():
    for n in range(1, 6):
        for g in enumerate_connected(n):
            assert parse_graph6(serialize_graph6(g)) == g


def test_round_trip_random_up_to_62():
    rng = np.random.default_rng(2024)
    for _ in range(40):
        n = int(rng.integers(1, 63))
        adj = np.zeros((n, n), dtype=bool)
        iu = np.triu_indices(n, 1)
        adj[iu] = rng.random(len(iu[0])) < 0.3
        adj |= adj.T
        g = Graph.from_adjacency(adj)
        assert parse_graph6(serialize_graph6(g)) == g


def test_round_trip_seven_vertex_sample():
    # Codec round trips need no connectivity: stride through the 2^21 edge
    # subsets on 7 vertices directly, independent of the enumerator.
    from itertools import combinations

    pairs = list(combinations(range(7), 2))
    for mask in range(0, 1 << 21, 997):
        adj = np.zeros((7, 7), dtype=bool)
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                adj[i, j] = adj[j, i] = True
        g = Graph.from_adjacency(adj)
        again = parse_graph6(serialize_graph6(g))
        assert again == g


def test_errors_survive_pickling():
    # Worker processes hand exceptions back through pickle.
    import pickle

    try:
        parse_graph6("B")
    except Graph6Error as exc:
        clone = pickle.loads(pickle.dumps(exc))
        assert clone.offset == 1 and str(clone) == str(exc)
    try:
        bfs(Graph.from_edges(3, [(0, 1)]), 0)
    except ConnectivityError as exc:
        clone = pickle.loads(pickle.dumps(exc))
        assert clone.unreachable == 2 and str(clone) == str(exc)


# --- Graph invariants -----------------------------------------------------


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph.from_adjacency(np.ones((2, 2), dtype=bool))  # diagonal set
    asym = np.zeros((2, 2), dtype=bool)
    asym[0, 1] = True
    with pytest.raises(ValueError):
        Graph(n=2, adjacency=asym, edge_count=1)
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_adjacency_is_frozen():
    g = generate_named("cycle", 4)
    with pytest.raises(ValueError):
        g.adjacency[0, 1] = False


# --- BFS and distance matrices --------------------------------------------


def test_bfs_petersen():
    g = generate_named("petersen")
    for u in range(10):
        info = bfs(g, u)
        assert [len(c) for c in info.cells] == [1, 3, 6]
        assert info.eccentricity == 2


def test_bfs_cycle4_and_k3():
    info = bfs(generate_named("cycle", 4), 2)
    assert [len(c) for c in info.cells] == [1, 2, 1]
    info = bfs(generate_named("complete", 3), 0)
    assert [len(c) for c in info.cells] == [1, 2] and info.eccentricity == 1


def test_bfs_cell_structure():
    # Every cell member at level i+1 has a neighbor at level i; cells partition V.
    for n in range(1, 6):
        for g in enumerate_connected(n):
            for u in range(g.n):
                info = bfs(g, u)
                assert sum(len(c) for c in info.cells) == g.n
                if info.eccentricity >= 1:
                    assert len(info.cells[1]) == g.degree(u)
                for i in range(1, info.eccentricity + 1):
                    prev = np.zeros(g.n, dtype=bool)
                    prev[info.cells[i - 1]] = True
                    for v in info.cells[i]:
                        assert (g.adjacency[v] & prev).any()


def test_bfs_disconnected_names_unreachable_vertex():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(ConnectivityError) as exc:
        bfs(g, 0)
    assert exc.value.unreachable == 2
    assert "2" in str(exc.value)


def test_distance_matrices_basics():
    g = generate_named("complete", 3)
    mats = distance_matrices(g)
    assert len(mats) == 2
    assert np.array_equal(mats[0], np.eye(3, dtype=np.int8))
    assert np.array_equal(mats[1], np.ones((3, 3), dtype=np.int8) - np.eye(3, dtype=np.int8))

    c4 = distance_matrices(generate_named("cycle", 4))
    assert np.array_equal(c4[2].sum(axis=1), np.ones(4))

    pet = distance_matrices(generate_named("petersen"))
    assert np.array_equal(pet[2].sum(axis=1), np.full(10, 6))
    assert np.array_equal(sum(pet), np.ones((10, 10), dtype=np.int8))
    assert np.array_equal(pet[1].astype(bool), generate_named("petersen").adjacency)


# --- named generators ------------------------------------------------------


def test_generate_named_catalog():
    pet = generate_named("petersen")
    assert pet.n == 10 and pet.edge_count == 15
    assert set(pet.degrees) == {3}

    k23 = generate_named("complete_bipartite", 2, 3)
    assert sorted(k23.degrees) == [2, 2, 2, 3, 3]

    c4 = generate_named("cycle", 4)
    assert c4.n == 4 and set(c4.degrees) == {2}

    q3 = generate_named("hypercube", 3)
    assert q3.n == 8 and set(q3.degrees) == {3}

    p1 = generate_named("path", 1)
    assert p1.n == 1 and p1.edge_count == 0


def test_generate_named_errors():
    with pytest.raises(ValueError):
        generate_named("moebius", 5)
    with pytest.raises(ValueError):
        generate_named("cycle", 2)
    with pytest.raises(ValueError):
        generate_named("petersen", 5)
    with pytest.raises(ValueError):
        generate_named("complete_bipartite", 3)


# --- enumeration -----------------------------------------------------------


def connected_by_union_find(n: int) -> int:
    # Independent count: union-find over the same bitmask space.
    from itertools import combinations

    pairs = list(combinations(range(n), 2))
    count = 0
    for mask in range(1 << len(pairs)):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                parent[find(i)] = find(j)
        if len({find(v) for v in range(n)}) == 1:
            count += 1
    return count


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 4), (4, 38)])
def test_enumeration_counts(n, expected):
    graphs = list(enumerate_connected(n))
    assert len(graphs) == expected
    assert connected_by_union_find(n) == expected


def test_enumeration_n3_members():
    edge_sets = [graph_edges(g) for g in enumerate_connected(3)]
    assert edge_sets == [
        {(0, 1), (0, 2)},
        {(0, 1), (1, 2)},
        {(0, 2), (1, 2)},
        {(0, 1), (0, 2), (1, 2)},
    ]


def test_enumeration_range_guard():
    with pytest.raises(ValueError):
        list(enumerate_connected(0))
    with pytest.raises(ValueError):
        list(enumerate_connected(8))


# --- bipartiteness ---------------------------------------------------------


def test_bipartition_examples():
    assert bipartition(generate_named("cycle", 5)) is None

    bp = bipartition(generate_named("complete_bipartite", 2, 3))
    assert tuple(len(p) for p in bp.parts) == (2, 3)
    assert bp.biregular and bp.part_degrees == (3, 2)

    bp = bipartition(generate_named("path", 4))
    assert tuple(len(p) for p in bp.parts) == (2, 2)
    assert bp.degrees == ((1, 2), (1, 2))
    assert not bp.biregular and bp.part_degrees is None


def test_bipartition_part_zero_first():
    bp = bipartition(generate_named("path", 3))
    assert 0 in bp.parts[0]


def test_bipartition_matches_odd_walk_criterion():
    # Bipartite iff every odd power of the adjacency has zero diagonal.
    for n in range(1, 6):
        for g in enumerate_connected(n):
            powers = adjacency_powers(g, 7)
            has_odd_closed = any(np.trace(powers[k]) > 0 for k in (1, 3, 5, 7))
            assert (bipartition(g) is None) == has_odd_closed
            if bipartition(g) is not None:
                bp = bipartition(g)
                cross = g.adjacency.copy()
                for part in bp.parts:
                    cross[np.ix_(part, part)] = False
                assert cross.sum() == 2 * g.edge_count
