"""Graph core: named catalog, BFS distances, subgraphs, graph6 codec."""

import random

import pytest

from specgraph.graphs import (
    DisconnectedError,
    Graph,
    Graph6Error,
    GraphError,
    contains_induced,
    diameter,
    distance_matrix,
    find_induced_embedding,
    from_graph6,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    named_graph,
    partition_by_attachment,
    principal_submatrix,
    to_graph6,
)


def random_graph(n, p, rng):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(n, p, rng):
    while True:
        g = random_graph(n, p, rng)
        if is_connected(g):
            return g


class TestGraphType:
    def test_rejects_asymmetric_rows(self):
        with pytest.raises(GraphError):
            Graph(2, (0b10, 0b00))

    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            Graph(1, (0b1,))

    def test_rejects_out_of_range_bits(self):
        with pytest.raises(GraphError):
            Graph(2, (0b100, 0b001))

    def test_vertex_cap(self):
        with pytest.raises(GraphError):
            Graph(65, tuple([0] * 65))


class TestNamedGraphs:
    def test_t11_shape(self):
        g = named_graph("T", 1, 1)
        assert g.n == 5
        assert g.edge_count() == 4
        assert g.degree_sequence() == (1, 1, 2, 2, 2)

    @pytest.mark.parametrize("a", range(0, 5))
    @pytest.mark.parametrize("b", range(0, 5))
    def test_tab_vertex_count(self, a, b):
        assert named_graph("T", a, b).n == a + b + 3

    def test_h1_as_drawn(self):
        g = named_graph("H1")
        assert g.n == 6 and g.edge_count() == 9
        assert all(g.adjacent(v, 5) for v in range(5))

    def test_h_family_edge_counts(self):
        sizes = {"H1": 9, "H2": 8, "H3": 7, "H4": 7, "H5": 6, "H6": 6, "H7": 5}
        for fam, m in sizes.items():
            g = named_graph(fam)
            assert g.n == 6 and g.edge_count() == m

    def test_f_family_shapes(self):
        assert named_graph("F1").edge_count() == 7
        assert named_graph("F2").edge_count() == 6
        assert named_graph("F3").edge_count() == 5
        f4 = named_graph("F4")
        assert f4.n == 10 and f4.edge_count() == 15
        assert named_graph("K4").edge_count() == 6

    def test_p6_is_path(self):
        g = named_graph("P6")
        assert is_isomorphic(g, named_graph("P", 6))

    def test_bad_parameters(self):
        with pytest.raises(GraphError):
            named_graph("C", 2)
        with pytest.raises(GraphError):
            named_graph("T", -1, 2)
        with pytest.raises(GraphError):
            named_graph("Q", 3)


class TestDistances:
    def test_p3(self):
        d = distance_matrix(named_graph("P", 3))
        assert d == ((0, 1, 2), (1, 0, 1), (2, 1, 0))

    def test_t11_block_layout(self):
        # golden matrix written out from the canonical labeling
        # (center1, middle, center2, a-leaf, b-leaf)
        d = distance_matrix(named_graph("T", 1, 1))
        assert d == (
            (0, 1, 2, 1, 3),
            (1, 0, 1, 2, 2),
            (2, 1, 0, 3, 1),
            (1, 2, 3, 0, 4),
            (3, 2, 1, 4, 0),
        )

    def test_tab_block_layout_general(self):
        # block structure: leaves of one side are mutually at distance 2,
        # opposite leaves at distance 4
        a, b = 3, 2
        d = distance_matrix(named_graph("T", a, b))
        for i in range(a):
            for j in range(b):
                assert d[3 + i][3 + a + j] == 4
        for i in range(a):
            for j in range(a):
                assert d[3 + i][3 + j] == (0 if i == j else 2)

    def test_k4_is_j_minus_i(self):
        d = distance_matrix(named_graph("K", 4))
        assert all(d[i][j] == (0 if i == j else 1)
                   for i in range(4) for j in range(4))

    def test_disconnected_raises(self):
        g = Graph.from_edges(3, [(0, 1)])
        with pytest.raises(DisconnectedError):
            distance_matrix(g)
        with pytest.raises(DisconnectedError):
            diameter(g)

    def test_diameter_examples(self):
        assert diameter(named_graph("T", 1, 1)) == 4
        assert diameter(named_graph("K", 5)) == 1
        assert diameter(named_graph("P", 6)) == 5

    def test_tab_diameter_always_4(self):
        for a in range(1, 9):
            for b in range(1, 9):
                assert diameter(named_graph("T", a, b)) == 4

    def test_distance_matrix_invariants_random(self):
        rng = random.Random(2024)
        graphs = [random_connected_graph(rng.randint(2, 10), 0.45, rng)
                  for _ in range(40)]
        graphs += [named_graph(f) for f in
                   ("H1", "H2", "H3", "H4", "H5", "H6", "H7", "F1", "F2",
                    "F3", "F4", "K4", "P6")]
        graphs += [named_graph("T", 2, 3), named_graph("C", 7)]
        for g in graphs:
            d = distance_matrix(g)
            n = g.n
            for i in range(n):
                assert d[i][i] == 0
                for j in range(n):
                    assert d[i][j] == d[j][i]
                    if i != j:
                        assert d[i][j] >= 1
                        assert (d[i][j] == 1) == g.adjacent(i, j)
                    for k in range(n):
                        assert d[i][k] <= d[i][j] + d[j][k]


class TestSubgraphs:
    def test_induced_identity(self):
        g = named_graph("C", 5)
        assert induced_subgraph(g, range(5)) == g

    def test_induced_spine_of_t22(self):
        g = named_graph("T", 2, 2)
        h = induced_subgraph(g, [0, 1, 2])
        assert is_isomorphic(h, named_graph("P", 3))

    def test_induced_triangle_in_k4(self):
        h = induced_subgraph(named_graph("K", 4), [0, 2, 3])
        assert is_isomorphic(h, named_graph("K", 3))

    def test_induced_bad_vertex(self):
        with pytest.raises(GraphError):
            induced_subgraph(named_graph("P", 3), [0, 5])

    def test_principal_submatrix(self):
        d = distance_matrix(named_graph("P", 4))
        assert principal_submatrix(d, [0, 3]) == ((0, 3), (3, 0))
        assert principal_submatrix(d, range(4)) == d

    def test_principal_submatrix_t11_leaf_dropped(self):
        d = distance_matrix(named_graph("T", 1, 1))
        sub = principal_submatrix(d, [0, 1, 2, 3])
        assert sub == ((0, 1, 2, 1), (1, 0, 1, 2), (2, 1, 0, 3), (1, 2, 3, 0))

    def test_principal_submatrix_is_not_induced_distance(self):
        # endpoints of P4 keep distance 3 in the submatrix even though the
        # induced subgraph on them has no path at all
        d = distance_matrix(named_graph("P", 4))
        assert principal_submatrix(d, [0, 3])[0][1] == 3


class TestConnectivity:
    def test_examples(self):
        assert is_connected(named_graph("T", 3, 5))
        assert is_connected(named_graph("C", 7))
        assert not is_connected(Graph(2, (0, 0)))


class TestAttachmentPartition:
    def test_t11_all_empty(self):
        g = named_graph("T", 1, 1)
        # diametral path: a-leaf, center1, middle, center2, b-leaf
        parts = partition_by_attachment(g, [3, 0, 1, 2, 4])
        assert all(not p for p in parts)

    def test_t21_single_v1(self):
        g = named_graph("T", 2, 1)
        # leaves 3,4 on center 0; leaf 5 on center 2
        parts = partition_by_attachment(g, [3, 0, 1, 2, 5])
        assert parts[1] == frozenset({4})
        assert all(not parts[i] for i in (0, 2, 3, 4, 5))

    def test_apex_lands_in_v5(self):
        g = named_graph("H1")
        parts = partition_by_attachment(g, [0, 1, 2, 3, 4])
        assert parts[5] == frozenset({5})

    def test_rejects_non_path(self):
        with pytest.raises(GraphError):
            partition_by_attachment(named_graph("C", 5), [0, 1, 2, 3, 4])

    def test_partition_covers_everything(self):
        rng = random.Random(7)
        checked = 0
        while checked < 25:
            g = random_connected_graph(rng.randint(5, 9), 0.35, rng)
            # hunt for an induced path of length 3..4
            emb = find_induced_embedding(g, named_graph("P", 4))
            if emb is None:
                continue
            X = [emb[i] for i in range(4)]
            parts = partition_by_attachment(g, X)
            union = set().union(*parts)
            assert union == set(range(g.n)) - set(X)
            assert sum(len(p) for p in parts) == g.n - 4
            checked += 1


class TestInducedContainment:
    def test_t33_has_no_p6(self):
        assert not contains_induced(named_graph("T", 3, 3), named_graph("P6"))

    def test_c6_contains_itself(self):
        assert contains_induced(named_graph("C", 6), named_graph("C", 6))

    def test_k4_has_no_c4(self):
        assert not contains_induced(named_graph("K", 4), named_graph("C", 4))

    def test_agrees_with_subset_bruteforce(self):
        from itertools import combinations
        rng = random.Random(99)
        patterns = [named_graph("P", 3), named_graph("C", 4),
                    named_graph("K", 3), named_graph("P", 4)]
        for _ in range(30):
            g = random_graph(rng.randint(4, 8), 0.4, rng)
            for h in patterns:
                brute = any(
                    is_isomorphic(induced_subgraph(g, s), h)
                    for s in combinations(range(g.n), h.n))
                assert contains_induced(g, h) == brute


class TestGraph6:
    def test_decode_star(self):
        g = from_graph6("D?{")
        assert g.n == 5
        assert sorted(g.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]

    def test_single_vertex(self):
        assert from_graph6("@").n == 1
        assert to_graph6(Graph(1, (0,))) == "@"

    def test_encode_p2(self):
        assert to_graph6(named_graph("P", 2)) == "A_"

    def test_non_printable_byte(self):
        with pytest.raises(Graph6Error):
            from_graph6("D?\x07")

    def test_error_carries_offset(self):
        with pytest.raises(Graph6Error) as err:
            from_graph6("D?\x07")
        assert err.value.offset == 2

    def test_truncated_body(self):
        with pytest.raises(Graph6Error):
            from_graph6("D?")

    def test_trailing_garbage(self):
        with pytest.raises(Graph6Error):
            from_graph6("D?{{")

    def test_nonzero_padding(self):
        # P2 body has 1 real bit; force a padding bit on
        with pytest.raises(Graph6Error):
            from_graph6("A" + chr(63 + 0b100001))

    def test_roundtrip_random(self):
        rng = random.Random(1234)
        for _ in range(500):
            g = random_connected_graph(rng.randint(1, 12), 0.4, rng) \
                if rng.random() < 0.8 else random_graph(rng.randint(1, 12), 0.3, rng)
            assert from_graph6(to_graph6(g)) == g

    def test_roundtrip_large_header(self):
        g = Graph.from_edges(63, [(i, i + 1) for i in range(62)])
        s = to_graph6(g)
        assert s.startswith(chr(126))
        assert from_graph6(s) == g
        g64 = Graph.from_edges(64, [(i, i + 1) for i in range(63)])
        assert from_graph6(to_graph6(g64)) == g64


class TestIsomorphism:
    def test_relabeled_pair(self):
        rng = random.Random(5)
        for _ in range(40):
            g = random_graph(rng.randint(2, 9), 0.45, rng)
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
            assert is_isomorphic(g, h)

    def test_distinguishes(self):
        assert not is_isomorphic(named_graph("P", 5), named_graph("C", 5))
        assert not is_isomorphic(named_graph("T", 2, 2), named_graph("S", 2, 3))
