from math import comb

import pytest
from hypothesis import given, settings

from simplicia import (
    AlmostSimplex,
    ads_enumerator,
    brute_force_census,
    build_flag_complex,
    complete,
    count_all_ads,
    is_completed,
    sub_almost_simplices,
)
from simplicia.almost import DimensionOutOfRange, GraphTooLarge, enumerate_almost_1
from simplicia.graph import DirectedGraph, generate_er

from conftest import census_tuples, small_digraphs


def enumerate_all(g):
    fc = build_flag_complex(g)
    out = {1: enumerate_almost_1(g)}
    for d in range(2, fc.dimension + 2):
        out[d] = ads_enumerator(d, fc.layer(d - 1), fc.layer(d - 2))
    return out


class TestEnumerator:
    def test_g5_single_almost_3(self, g5):
        fc = build_flag_complex(g5)
        found = ads_enumerator(3, fc.layer(2), fc.layer(1))
        assert len(found) == 1
        a = found[0]
        assert {a.sigma, a.sigma_prime} == {(0, 1, 2), (1, 2, 3)}
        assert a.missing_edge == (0, 3)
        assert not is_completed(g5, a)

    def test_g3_both_orientations(self, g3):
        fc = build_flag_complex(g3)
        found = ads_enumerator(2, fc.layer(1), fc.layer(0))
        assert {a.missing_edge for a in found} == {(1, 2), (2, 1)}
        assert all({a.sigma, a.sigma_prime} == {(0, 1), (0, 2)} for a in found)

    def test_cycle_three_open(self, g2):
        fc = build_flag_complex(g2)
        found = ads_enumerator(2, fc.layer(1), fc.layer(0))
        assert len(found) == 3
        assert not any(is_completed(g2, a) for a in found)
        by_edge = {a.missing_edge: a for a in found}
        shared_zero = by_edge[(2, 1)]
        assert {shared_zero.sigma, shared_zero.sigma_prime} == {(0, 1), (2, 0)}

    def test_g6_eight_and_six(self, g6):
        fc = build_flag_complex(g6)
        found = ads_enumerator(2, fc.layer(1), fc.layer(0))
        assert len(found) == 8
        assert sum(is_completed(g6, a) for a in found) == 6

    @given(small_digraphs(max_n=6))
    @settings(max_examples=40, deadline=None)
    def test_no_duplicates_and_valid(self, g):
        for d, found in enumerate_all(g).items():
            keys = {a.key() for a in found}
            assert len(keys) == len(found)
            for a in found:
                a.validate()
                assert a.dimension == d

    def test_size_guard(self):
        g = generate_er(8, 40, seed=2)
        fc = build_flag_complex(g)
        with pytest.raises(GraphTooLarge):
            ads_enumerator(2, fc.layer(1), fc.layer(0), limit=3)


class TestCounting:
    def test_g1_counts(self, g1):
        counts = count_all_ads(g1)
        assert census_tuples(counts) == [(1, 3, 6, 3, 0), (2, 1, 5, 3, 0), (3, 0, 0, 0, 0)]

    def test_g3_counts(self, g3):
        counts = count_all_ads(g3)
        assert census_tuples(counts) == [(1, 2, 6, 2, 0), (2, 0, 2, 0, 0)]

    def test_g2_counts(self, g2):
        counts = count_all_ads(g2)
        assert census_tuples(counts) == [(1, 3, 6, 3, 0), (2, 0, 3, 0, 0)]

    def test_empty_graph(self):
        counts = count_all_ads(DirectedGraph(0))
        assert census_tuples(counts) == [(1, 0, 0, 0, 0)]

    def test_counts_match_enumeration(self, all_fixtures):
        for g in all_fixtures.values():
            counts = count_all_ads(g)
            enum = enumerate_all(g)
            for row in counts.rows:
                found = enum.get(row.dimension, [])
                assert row.almost == len(found)
                assert row.completed == sum(is_completed(g, a) for a in found)

    @given(small_digraphs())
    @settings(max_examples=60, deadline=None)
    def test_oracle_equivalence(self, g):
        assert count_all_ads(g).rows == brute_force_census(g).rows

    @given(small_digraphs())
    @settings(max_examples=40, deadline=None)
    def test_identities(self, g):
        counts = count_all_ads(g)
        rows = {r.dimension: r for r in counts.rows}
        for d, row in rows.items():
            assert row.completed == comb(d + 1, 2) * row.simplices
            assert row.completed <= row.almost
            assert row.almost >= comb(d + 1, 2) * row.simplices
            if d >= 2:
                prev = rows[d - 1].simplices if d - 1 in rows else len(
                    build_flag_complex(g).layer(d - 1)
                )
                assert row.rejected_pairs <= d * d * prev

    def test_truncated_census(self, g5):
        fc = build_flag_complex(g5, max_dim=1)
        counts = count_all_ads(g5, fc)
        assert counts.truncated
        rows = census_tuples(counts)
        # dimension 2 is the cap-adjacent row: simplices still counted exactly
        assert rows == [(1, 5, 12, 5, 0), (2, 2, 12, 6, 0)]
        assert counts.rows[1].cap_adjacent

    def test_thread_invariance(self):
        g = generate_er(40, 180, seed=9)
        assert count_all_ads(g, threads=1).rows == count_all_ads(g, threads=3).rows

    def test_oracle_bound(self):
        with pytest.raises(GraphTooLarge):
            brute_force_census(DirectedGraph(11))


class TestCompletion:
    def test_is_completed_examples(self, g1, g3):
        a = AlmostSimplex((0, 1), 1, (0, 2), 1, (1, 2))
        assert is_completed(g1, a)
        assert not is_completed(g3, a)

    def test_complete_interleaves(self):
        a = AlmostSimplex((0, 1, 2), 0, (1, 2, 3), 2, (0, 3))
        assert complete(a) == (0, 1, 2, 3)
        b = AlmostSimplex((0, 1), 1, (0, 2), 1, (1, 2))
        assert complete(b) == (0, 1, 2)
        c = AlmostSimplex((0, 2), 1, (0, 1), 1, (2, 1))
        assert complete(c) == (0, 2, 1)

    @given(small_digraphs(max_n=6))
    @settings(max_examples=30, deadline=None)
    def test_completion_is_simplex_of_augmented_graph(self, g):
        for d, found in enumerate_all(g).items():
            for a in found:
                full = complete(a)
                assert len(full) == d + 1
                edges = set(g.edges()) | {a.missing_edge}
                for i in range(d + 1):
                    for j in range(i + 1, d + 1):
                        edge = (full[i], full[j])
                        covered = edge in edges or edge in {
                            (a.sigma[p], a.sigma[q])
                            for p in range(d)
                            for q in range(p + 1, d)
                        } or edge in {
                            (a.sigma_prime[p], a.sigma_prime[q])
                            for p in range(d)
                            for q in range(p + 1, d)
                        }
                        assert covered


class TestSubAlmost:
    def fig1_almost(self):
        return AlmostSimplex((0, 1, 2, 3), 3, (0, 1, 2, 4), 3, (3, 4))

    @pytest.mark.parametrize("i,count", [(1, 1), (2, 3), (3, 3), (4, 1)])
    def test_counts(self, i, count):
        subs = sub_almost_simplices(self.fig1_almost(), i)
        assert len(subs) == count == comb(3, i - 1)

    def test_same_edge_and_validity(self):
        a = self.fig1_almost()
        for i in range(1, 5):
            for sub in sub_almost_simplices(a, i):
                sub.validate()
                assert sub.missing_edge == a.missing_edge
                assert sub.dimension == i

    def test_dimension_guard(self):
        with pytest.raises(DimensionOutOfRange):
            sub_almost_simplices(self.fig1_almost(), 5)

    @given(small_digraphs(max_n=6))
    @settings(max_examples=20, deadline=None)
    def test_counts_on_harvested(self, g):
        for d, found in enumerate_all(g).items():
            for a in found[:8]:
                for i in range(1, d + 1):
                    assert len(sub_almost_simplices(a, i)) == comb(d - 1, i - 1)
