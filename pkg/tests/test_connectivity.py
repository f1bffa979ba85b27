"""Local-connectivity computations against an independent path-packing oracle,
plus the infinity sentinel, distance matrices, and uniformity queries."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conndim import (
    INF,
    EmptyGraphError,
    connected_components,
    disjoint_union,
    distance_matrix,
    kappa_matrix,
    local_connectivity,
    make_graph,
    standard_graph,
    uniform_connectivity,
    uniformly_connected_vertices,
    value_to_json,
)
from oracles import brute_kappa

HOUSE_KAPPA = (
    (0, 3, 2, 3, 3),
    (3, 0, 2, 3, 3),
    (2, 2, 0, 2, 2),
    (3, 3, 2, 0, 4),
    (3, 3, 2, 4, 0),
)


def random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return make_graph(n, edges)


class TestInfinitySentinel:
    def test_identity_and_equality(self):
        assert INF == INF
        assert not (INF == 5)
        assert INF != 7

    def test_ordering_against_ints(self):
        assert INF > 10**9
        assert INF >= 10**9
        assert not (INF < 0)
        assert 3 < INF
        assert INF <= INF
        assert sorted([INF, 2, 0, INF, 1])[:3] == [0, 1, 2]

    def test_json_form(self):
        assert value_to_json(INF) == "inf"
        assert value_to_json(3) == 3
        assert value_to_json(0) == 0

    def test_repr(self):
        assert repr(INF) == "inf"


class TestLocalConnectivity:
    def test_diagonal_is_infinite(self):
        g = standard_graph("house")
        for v in range(g.n):
            assert local_connectivity(g, v, v) == INF

    def test_house_values(self):
        g = standard_graph("house")
        for u in range(5):
            for v in range(5):
                if u != v:
                    assert local_connectivity(g, u, v) == HOUSE_KAPPA[u][v]

    def test_vertex_out_of_range(self):
        g = standard_graph("path", 3)
        with pytest.raises(IndexError, match="out of range"):
            local_connectivity(g, 0, 3)
        with pytest.raises(IndexError, match="out of range"):
            local_connectivity(g, -1, 2)

    def test_zero_exactly_across_components(self):
        g = disjoint_union([standard_graph("cycle", 3),
                            standard_graph("path", 2),
                            make_graph(1, [])])
        comp_of = {}
        for idx, comp in enumerate(connected_components(g)):
            for v in comp:
                comp_of[v] = idx
        for u in range(g.n):
            for v in range(u + 1, g.n):
                k = local_connectivity(g, u, v)
                if comp_of[u] == comp_of[v]:
                    assert k >= 1
                else:
                    assert k == 0

    def test_matches_oracle_on_all_small_connected_graphs(self, corpus):
        for n in (2, 3, 4, 5):
            for g in corpus[n]:
                km = kappa_matrix(g)
                for u in range(n):
                    for v in range(u + 1, n):
                        expect = brute_kappa(n, g.sorted_edges, u, v)
                        assert km.table[u][v] == expect, (g.sorted_edges, u, v)

    @pytest.mark.parametrize("n,p,seed", [(6, 0.3, 1), (6, 0.6, 2),
                                          (7, 0.3, 3), (7, 0.5, 4)])
    def test_matches_oracle_on_random_graphs(self, n, p, seed):
        rng = random.Random(seed)
        for _ in range(12):
            g = random_graph(rng, n, p)
            km = kappa_matrix(g)
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            for u, v in rng.sample(pairs, 8):
                assert km.table[u][v] == brute_kappa(n, g.sorted_edges, u, v)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=2, max_value=6), st.data())
    def test_symmetry_and_degree_bound(self, n, data):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        picks = data.draw(st.lists(st.booleans(), min_size=len(pairs),
                                   max_size=len(pairs)))
        g = make_graph(n, [p for p, keep in zip(pairs, picks) if keep])
        km = kappa_matrix(g)
        for u in range(n):
            for v in range(u + 1, n):
                assert km.table[u][v] == km.table[v][u]
                assert km.table[u][v] <= min(g.degree(u), g.degree(v))


class TestKappaMatrix:
    def test_value_accessor(self):
        km = kappa_matrix(standard_graph("house"))
        assert km.value(1, 1) == INF
        assert km.value(3, 4) == 4
        assert km.value(4, 3) == 4

    def test_json_object(self):
        km = kappa_matrix(standard_graph("path", 3))
        obj = km.to_json_obj()
        assert obj["n"] == 3
        assert obj["kappa"][0][0] == "inf"
        assert obj["kappa"][0][1] == 1
        assert obj["kappa"] == [["inf", 1, 1], [1, "inf", 1], [1, 1, "inf"]]

    def test_threads_do_not_change_output(self):
        rng = random.Random(99)
        g = random_graph(rng, 14, 0.4)
        assert g.n * (g.n - 1) // 2 >= 64
        km1 = kappa_matrix(g, threads=1)
        km4 = kappa_matrix(g, threads=4)
        assert km1 == km4


class TestDistanceMatrix:
    def test_path_distances(self):
        dm = distance_matrix(standard_graph("path", 4))
        assert dm.table == ((0, 1, 2, 3), (1, 0, 1, 2),
                            (2, 1, 0, 1), (3, 2, 1, 0))

    def test_value_duck_typing(self):
        dm = distance_matrix(standard_graph("cycle", 5))
        assert dm.value(0, 0) == 0
        assert dm.value(0, 2) == 2
        assert dm.value(0, 3) == 2

    def test_disconnected_rejected(self):
        g = make_graph(4, [(0, 1)])
        with pytest.raises(ValueError, match="disconnected"):
            distance_matrix(g)

    def test_empty_rejected(self):
        with pytest.raises(EmptyGraphError):
            distance_matrix(make_graph(0, []))

    def test_single_vertex(self):
        assert distance_matrix(make_graph(1, [])).table == ((0,),)


class TestUniformity:
    @pytest.mark.parametrize("kind,n,expect", [
        ("cycle", 5, 2), ("complete", 4, 3), ("path", 4, 1),
    ])
    def test_uniform_families(self, kind, n, expect):
        assert uniform_connectivity(kappa_matrix(standard_graph(kind, n))) == expect

    def test_house_not_uniform(self):
        assert uniform_connectivity(kappa_matrix(standard_graph("house"))) is None

    def test_needs_two_vertices(self):
        km = kappa_matrix(make_graph(1, []))
        with pytest.raises(ValueError):
            uniform_connectivity(km)
        with pytest.raises(ValueError):
            uniformly_connected_vertices(km)

    def test_per_vertex_on_house(self):
        km = kappa_matrix(standard_graph("house"))
        assert uniformly_connected_vertices(km) == {
            0: None, 1: None, 2: 2, 3: None, 4: None}

    def test_per_vertex_on_cycle(self):
        km = kappa_matrix(standard_graph("cycle", 4))
        assert uniformly_connected_vertices(km) == {0: 2, 1: 2, 2: 2, 3: 2}
