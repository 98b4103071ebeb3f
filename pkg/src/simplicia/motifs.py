"""Census of the three shapes an almost-2-simplex can take.

An instance is a centre vertex plus two distinct endpoints: divergent
(centre points at both), chain (path through the centre, counted per
ordered in/out endpoint pair), convergent (both point at the centre).  An
instance is completed when either edge between the endpoints exists; a
strict instance additionally has neither defining edge reciprocated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import DirectedGraph, GraphError
from .parallel import map_chunks

KINDS = ("divergent", "chain", "convergent")


class OutOfRange(GraphError):
    pass


def chance_level(p_e: Fraction) -> Fraction:
    """Probability that a motif closes in a random digraph with edge density
    p_e: one or both of the two possible closing edges, 2*p_e - p_e**2."""
    if not 0 <= p_e <= 1:
        raise OutOfRange(f"edge density {p_e} outside [0, 1]")
    return 2 * p_e - p_e * p_e


@dataclass(frozen=True)
class MotifKindCounts:
    total: int
    completed: int
    strict_total: int
    strict_completed: int

    @property
    def ratio(self) -> Fraction | None:
        return Fraction(self.completed, self.total) if self.total else None

    @property
    def strict_ratio(self) -> Fraction | None:
        return Fraction(self.strict_completed, self.strict_total) if self.strict_total else None


@dataclass(frozen=True)
class MotifReport:
    divergent: MotifKindCounts
    chain: MotifKindCounts
    convergent: MotifKindCounts
    edge_density: Fraction | None

    @property
    def chance(self) -> Fraction | None:
        return chance_level(self.edge_density) if self.edge_density is not None else None

    def kind(self, name: str) -> MotifKindCounts:
        return getattr(self, name)

    @property
    def almost_two_count(self) -> int:
        """Almost-2-simplices implied by the census: divergent and convergent
        instances carry both missing-edge orientations, chains one each."""
        return 2 * self.divergent.total + self.chain.total + 2 * self.convergent.total


def _pair_counts(g, members: int) -> tuple[int, int]:
    """(total unordered pairs, completed pairs) among ``members``; a pair is
    completed when some edge joins it."""
    completed = 0
    k = members.bit_count()
    total = k * (k - 1) // 2
    row = members
    while row:
        low = row & -row
        a = low.bit_length() - 1
        row ^= low
        link = (g.out_rows[a] | g.in_rows[a]) & members
        completed += (link >> (a + 1)).bit_count()
    return total, completed


def _chain_counts(g, tails: int, heads: int) -> tuple[int, int]:
    """(ordered pairs tail!=head, completed) for chain instances."""
    t, h = tails.bit_count(), heads.bit_count()
    total = t * h - (tails & heads).bit_count()
    completed = 0
    row = tails
    while row:
        low = row & -row
        a = low.bit_length() - 1
        row ^= low
        completed += ((g.out_rows[a] | g.in_rows[a]) & heads).bit_count()
    return total, completed


def _motif_chunk(args) -> tuple[int, ...]:
    g, chunk = args
    acc = [0] * 12
    for c in chunk:
        out_c, in_c = g.out_rows[c], g.in_rows[c]
        out_only, in_only = out_c & ~in_c, in_c & ~out_c
        for base, members, strict_members in (
            (0, out_c, out_only),
            (8, in_c, in_only),
        ):
            t, comp = _pair_counts(g, members)
            st, scomp = _pair_counts(g, strict_members)
            acc[base] += t
            acc[base + 1] += comp
            acc[base + 2] += st
            acc[base + 3] += scomp
        t, comp = _chain_counts(g, in_c, out_c)
        st, scomp = _chain_counts(g, in_only, out_only)
        acc[4] += t
        acc[5] += comp
        acc[6] += st
        acc[7] += scomp
    return tuple(acc)


def census_motifs(g: DirectedGraph, threads: int = 1) -> MotifReport:
    """Count all divergent/chain/convergent instances with completion and
    strictness, sharded by centre vertex."""
    shards = map_chunks(_motif_chunk, range(g.n), threads, g)
    acc = [0] * 12
    for shard in shards:
        for i, v in enumerate(shard):
            acc[i] += v
    density = Fraction(g.edge_count, g.n * (g.n - 1)) if g.n > 1 else None
    return MotifReport(
        divergent=MotifKindCounts(*acc[0:4]),
        chain=MotifKindCounts(*acc[4:8]),
        convergent=MotifKindCounts(*acc[8:12]),
        edge_density=density,
    )
