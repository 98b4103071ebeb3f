from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplicia import build_flag_complex, boundary, coboundaries_table, local_coboundaries
from simplicia.complexes import IndexOutOfRange
from simplicia.graph import DirectedGraph, generate_er

from conftest import small_digraphs


def oracle_layer(g, d):
    """Every ordered (d+1)-tuple with all forward edges (straight off the
    definition)."""
    out = []
    for tup in permutations(range(g.n), d + 1):
        if all(g.has_edge(tup[i], tup[j]) for i in range(d + 1) for j in range(i + 1, d + 1)):
            out.append(tup)
    return sorted(out)


class TestBuild:
    def test_g4_two_simplices(self, g4):
        fc = build_flag_complex(g4)
        assert fc.layer(2) == ((0, 1, 2), (1, 3, 2))
        assert fc.dimension == 2

    def test_g6_double_simplex(self, g6):
        fc = build_flag_complex(g6)
        assert fc.layer(2) == ((0, 1, 2), (0, 2, 1))

    def test_cycle_has_no_two_simplices(self, g2):
        fc = build_flag_complex(g2)
        assert fc.dimension == 1 and fc.layer(2) == ()

    def test_empty_graph(self):
        fc = build_flag_complex(DirectedGraph(0))
        assert fc.dimension == -1 and fc.layer(0) == ()

    def test_layers_lexicographic_and_duplicate_free(self):
        g = generate_er(7, 25, seed=3)
        fc = build_flag_complex(g)
        for layer in fc.layers:
            assert list(layer) == sorted(set(layer))

    @given(small_digraphs())
    @settings(max_examples=40, deadline=None)
    def test_matches_definition_oracle(self, g):
        fc = build_flag_complex(g)
        for d in range(1, max(fc.dimension + 2, 2)):
            assert list(fc.layer(d)) == oracle_layer(g, d)

    def test_cap_semantics(self, g1):
        fc = build_flag_complex(g1, max_dim=1)
        assert fc.truncated
        assert len(fc.layers) == 2
        assert fc.layer(1) == ((0, 1), (0, 2), (1, 2))
        full = build_flag_complex(g1, max_dim=5)
        assert not full.truncated and full.dimension == 2

    def test_boundary_closure(self):
        g = generate_er(8, 30, seed=11)
        fc = build_flag_complex(g)
        for d in range(2, fc.dimension + 1):
            prev = set(fc.layer(d - 1))
            for simplex in fc.layer(d):
                for i in range(d + 1):
                    assert boundary(simplex, i) in prev

    def test_thread_count_does_not_change_layers(self):
        g = generate_er(60, 500, seed=5)
        assert build_flag_complex(g, threads=1).layers == build_flag_complex(g, threads=4).layers


class TestBoundary:
    def test_examples(self):
        assert boundary((0, 1, 2), 1) == (0, 2)
        assert boundary((0, 1, 2), 0) == (1, 2)

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            boundary((0, 1, 2), 3)

    @given(st.lists(st.integers(0, 50), min_size=3, max_size=8, unique=True))
    def test_deletion_order_commutes(self, vertices):
        simplex = tuple(vertices)
        k = len(simplex)
        for i in range(k):
            for j in range(i + 1, k):
                # delete positions {i, j} in either order
                assert boundary(boundary(simplex, j), i) == boundary(boundary(simplex, i), j - 1)


class TestCoboundaries:
    def test_table_on_triangle(self, g1):
        fc = build_flag_complex(g1)
        table = coboundaries_table(fc.layer(2), fc.layer(1))
        assert table[(0, 1)] == [((0, 1, 2), 2, 2)]
        assert table[(1, 2)] == [((0, 1, 2), 0, 0)]
        assert table[(0, 2)] == [((0, 1, 2), 1, 1)]

    @given(small_digraphs())
    @settings(max_examples=30, deadline=None)
    def test_table_total_size(self, g):
        fc = build_flag_complex(g)
        for d in range(1, fc.dimension + 1):
            table = coboundaries_table(fc.layer(d), fc.layer(d - 1))
            assert sum(len(v) for v in table.values()) == (d + 1) * len(fc.layer(d))

    def test_local_examples(self, g1, g3):
        assert local_coboundaries(g1, (0, 1)) == [(2, 2)]
        assert local_coboundaries(g1, (0, 2)) == [(1, 1)]
        assert local_coboundaries(g3, (0, 1)) == []

    @given(small_digraphs())
    @settings(max_examples=30, deadline=None)
    def test_local_agrees_with_table(self, g):
        fc = build_flag_complex(g)
        for d in range(1, fc.dimension + 1):
            table = coboundaries_table(fc.layer(d), fc.layer(d - 1))
            for tau in fc.layer(d - 1):
                from_table = sorted((i, v) for _, i, v in table[tau])
                assert sorted(local_coboundaries(g, tau)) == from_table
