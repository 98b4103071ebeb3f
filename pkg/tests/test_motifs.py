from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from simplicia import DirectedGraph, census_motifs, chance_level, count_all_ads
from simplicia.motifs import OutOfRange

from conftest import small_digraphs


def oracle_motifs(g):
    """Triple-loop census straight off the shape definitions."""
    totals = {k: [0, 0, 0, 0] for k in ("divergent", "chain", "convergent")}

    def closed(a, b):
        return g.has_edge(a, b) or g.has_edge(b, a)

    for c in range(g.n):
        others = [v for v in range(g.n) if v != c]
        for a, b in combinations(others, 2):
            if g.has_edge(c, a) and g.has_edge(c, b):
                _bump(totals["divergent"], closed(a, b), not (g.has_edge(a, c) or g.has_edge(b, c)))
            if g.has_edge(a, c) and g.has_edge(b, c):
                _bump(totals["convergent"], closed(a, b), not (g.has_edge(c, a) or g.has_edge(c, b)))
        # chain instances are ordered tail -> centre -> head
        for a in others:
            for b in others:
                if a != b and g.has_edge(a, c) and g.has_edge(c, b):
                    _bump(totals["chain"], closed(a, b), not (g.has_edge(c, a) or g.has_edge(b, c)))
    return totals


def _bump(acc, completed, strict):
    acc[0] += 1
    acc[1] += completed
    if strict:
        acc[2] += 1
        acc[3] += completed


class TestChanceLevel:
    def test_boundaries(self):
        assert chance_level(Fraction(0)) == 0
        assert chance_level(Fraction(1)) == 1

    def test_q_density(self):
        assert chance_level(Fraction(26, 100)) == Fraction(1131, 2500)

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            chance_level(Fraction(3, 2))


class TestCensus:
    def test_g3(self, g3):
        rep = census_motifs(g3)
        assert (rep.divergent.total, rep.divergent.completed) == (1, 0)
        assert rep.chain.total == 0
        assert rep.convergent.total == 0

    def test_g1_all_closed(self, g1):
        rep = census_motifs(g1)
        for kind in ("divergent", "chain", "convergent"):
            counts = rep.kind(kind)
            assert counts.total == 1 and counts.ratio == 1
        assert rep.chance == Fraction(3, 4)

    def test_cycle_chains(self, g2):
        rep = census_motifs(g2)
        assert rep.divergent.total == 0
        assert rep.convergent.total == 0
        assert (rep.chain.total, rep.chain.completed) == (3, 3)

    def test_empty(self):
        rep = census_motifs(DirectedGraph(3))
        assert rep.divergent.total == 0 and rep.divergent.ratio is None

    def test_strict_excludes_reciprocated_arms(self):
        # divergent at 0 over {1,2}; the 0->1 arm is reciprocated
        g = DirectedGraph(3, [(0, 1), (0, 2), (1, 0)])
        rep = census_motifs(g)
        assert rep.divergent.total == 1
        assert rep.divergent.strict_total == 0

    @given(small_digraphs(max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_matches_oracle(self, g):
        rep = census_motifs(g)
        oracle = oracle_motifs(g)
        for kind in ("divergent", "chain", "convergent"):
            counts = rep.kind(kind)
            assert [
                counts.total,
                counts.completed,
                counts.strict_total,
                counts.strict_completed,
            ] == oracle[kind]

    @given(small_digraphs(max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_almost_two_decomposition(self, g):
        # each divergent/convergent instance carries both orientations of the
        # missing edge, each ordered chain exactly one
        rep = census_motifs(g)
        rows = {r.dimension: r for r in count_all_ads(g).rows}
        almost2 = rows[2].almost if 2 in rows else 0
        assert rep.almost_two_count == almost2

    def test_thread_invariance(self, g4):
        assert census_motifs(g4, threads=1) == census_motifs(g4, threads=3)
