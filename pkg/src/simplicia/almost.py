"""Almost-simplex enumeration and counting, plus the brute-force oracle.

An almost-d-simplex is a pair of (d-1)-simplices sharing a (d-2)-face,
together with one designated missing edge between the two non-shared
vertices.  The edge (v_i, v'_i') is admissible when i <= i', its reverse
when i' <= i; when i == i' both orientations count separately.  The
degenerate d=1 form is a pair of distinct vertices with a designated
ordered edge, so there are n(n-1) almost-1-simplices.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .complexes import (
    FlagComplex,
    Simplex,
    boundary,
    build_flag_complex,
    coboundaries_table,
    count_next_layer,
    local_coboundaries,
)
from .graph import DirectedGraph, GraphError
from .parallel import map_chunks


class GraphTooLarge(GraphError):
    pass


class DimensionOutOfRange(GraphError):
    pass


class InternalConsistencyError(RuntimeError):
    """A structural identity the engine guarantees by construction failed."""


@dataclass(frozen=True)
class AlmostSimplex:
    """Canonical form: missing_edge runs from sigma[position] to
    sigma_prime[position_prime] and position <= position_prime."""

    sigma: Simplex
    position: int
    sigma_prime: Simplex
    position_prime: int
    missing_edge: tuple[int, int]

    @property
    def dimension(self) -> int:
        return len(self.sigma)

    def key(self):
        """Identity per the definition: the unordered pair plus the edge."""
        pair = (self.sigma, self.sigma_prime)
        return (min(pair), max(pair), self.missing_edge)

    def validate(self) -> None:
        i, ip = self.position, self.position_prime
        if not (0 <= i <= ip < len(self.sigma)):
            raise InternalConsistencyError(f"bad positions in {self}")
        if self.dimension > 1 and boundary(self.sigma, i) != boundary(self.sigma_prime, ip):
            raise InternalConsistencyError(f"faces differ in {self}")
        if self.dimension == 1 and (self.sigma == self.sigma_prime):
            raise InternalConsistencyError(f"degenerate pair in {self}")
        if self.missing_edge != (self.sigma[i], self.sigma_prime[ip]):
            raise InternalConsistencyError(f"edge/position mismatch in {self}")
        if self.sigma[i] == self.sigma_prime[ip]:
            raise InternalConsistencyError(f"missing edge is a loop in {self}")


def complete(a: AlmostSimplex) -> Simplex:
    """The unique d-simplex obtained by adding the missing edge.

    Inserting sigma_prime's extra vertex right after position_prime in sigma
    covers every required edge: pairs avoiding the insertion point come from
    sigma, pairs avoiding position i come from sigma_prime, and the one
    remaining pair is the missing edge itself.
    """
    ip = a.position_prime
    return a.sigma[: ip + 1] + (a.sigma_prime[ip],) + a.sigma[ip + 1 :]


def is_completed(g: DirectedGraph, a: AlmostSimplex) -> bool:
    u, v = a.missing_edge
    return bool((g.out_rows[u] >> v) & 1)


def _make_almost(sigma, i, v, sigma_prime, ip, vp) -> AlmostSimplex:
    return AlmostSimplex(sigma, i, sigma_prime, ip, (v, vp))


def ads_enumerator(
    d: int,
    s_prev: tuple[Simplex, ...],
    s_shared: tuple[Simplex, ...],
    limit: int | None = 5_000_000,
) -> list[AlmostSimplex]:
    """Materialize every almost-d-simplex exactly once (d >= 2).

    Pairs of coboundaries of each shared (d-2)-simplex are scanned in
    (position, vertex) order; both orientations are emitted when the
    insertion positions coincide.  ``limit`` guards against runaway
    materialization; counting never materializes.
    """
    if d < 2:
        raise DimensionOutOfRange("enumeration starts at dimension 2")
    table = coboundaries_table(s_prev, s_shared)
    out: list[AlmostSimplex] = []
    for shared in s_shared:
        entries = sorted(table[shared], key=lambda e: (e[1], e[2]))
        for k in range(len(entries)):
            sigma, i, v = entries[k]
            for l in range(k + 1, len(entries)):
                sigma_p, ip, vp = entries[l]
                if v == vp:
                    continue
                if i <= ip:
                    out.append(_make_almost(sigma, i, v, sigma_p, ip, vp))
                if ip <= i:
                    out.append(_make_almost(sigma_p, ip, vp, sigma, i, v))
                if limit is not None and len(out) > limit:
                    raise GraphTooLarge(f"almost-simplex materialization exceeds {limit}")
    return out


def enumerate_almost_1(g: DirectedGraph) -> list[AlmostSimplex]:
    """The n(n-1) degenerate almost-1-simplices, one per ordered vertex pair."""
    return [
        AlmostSimplex((u,), 0, (v,), 0, (u, v))
        for u in range(g.n)
        for v in range(g.n)
        if u != v
    ]


def sub_almost_simplices(a: AlmostSimplex, i: int) -> list[AlmostSimplex]:
    """The C(d-1, i-1) almost-i-simplices closable by the same missing edge.

    Every (i-1)-subset of the shared face, together with the two endpoints
    of the missing edge, inherits its order from the host pair.
    """
    from itertools import combinations

    d = a.dimension
    if not (1 <= i <= d):
        raise DimensionOutOfRange(f"sub-dimension {i} outside 1..{d}")
    e1, e2 = a.missing_edge
    shared = boundary(a.sigma, a.position) if d > 1 else ()
    out = []
    for picked in combinations(shared, i - 1):
        keep = set(picked)
        s1 = tuple(v for v in a.sigma if v in keep or v == e1)
        s2 = tuple(v for v in a.sigma_prime if v in keep or v == e2)
        sub = AlmostSimplex(s1, s1.index(e1), s2, s2.index(e2), (e1, e2))
        sub.validate()
        out.append(sub)
    return out


@dataclass(frozen=True)
class CensusRow:
    dimension: int
    simplices: int
    almost: int
    completed: int
    rejected_pairs: int
    cap_adjacent: bool = False


@dataclass(frozen=True)
class CensusCounts:
    """Per-dimension counters for d = 1..D+1 (or K+1 under a cap)."""

    vertex_count: int
    edge_count: int
    truncated: bool
    rows: tuple[CensusRow, ...]

    def row(self, d: int) -> CensusRow:
        return self.rows[d - 1]


def _dim2_chunk(args) -> tuple[int, int, int]:
    g, chunk = args
    almost = completed = rejected = 0
    out_rows, in_rows = g.out_rows, g.in_rows
    for (v,) in chunk:
        out_v, in_v = out_rows[v], in_rows[v]
        k_out, k_in = out_v.bit_count(), in_v.bit_count()
        recip = (out_v & in_v).bit_count()
        almost += k_out * (k_out - 1) + k_in * (k_in - 1) + k_in * k_out - recip
        rejected += recip
        row = out_v
        while row:
            low = row & -row
            w = low.bit_length() - 1
            row ^= low
            completed += (out_rows[w] & out_v).bit_count()
        row = in_v
        while row:
            low = row & -row
            u = low.bit_length() - 1
            row ^= low
            completed += (out_rows[u] & in_v).bit_count()
            completed += (out_rows[u] & out_v).bit_count()
    return almost, completed, rejected


def _dimd_chunk(args) -> tuple[int, int, int]:
    g, chunk = args
    almost = completed = rejected = 0
    out_rows = g.out_rows
    for shared in chunk:
        entries = local_coboundaries(g, shared)
        for k in range(len(entries)):
            i, v = entries[k]
            out_v = out_rows[v]
            for l in range(k + 1, len(entries)):
                ip, vp = entries[l]
                if v == vp:
                    rejected += 1
                    continue
                if i < ip:
                    almost += 1
                    completed += (out_v >> vp) & 1
                elif ip < i:
                    almost += 1
                    completed += (out_rows[vp] >> v) & 1
                else:
                    almost += 2
                    completed += ((out_v >> vp) & 1) + ((out_rows[vp] >> v) & 1)
    return almost, completed, rejected


def count_all_ads(
    g: DirectedGraph, complex: FlagComplex | None = None, threads: int = 1
) -> CensusCounts:
    """Count simplices, almost-simplices, completions and rejected coboundary
    pairs for every dimension 1..D+1, without materializing anything.

    Dimension 2 uses closed-form neighbourhood popcounts per centre vertex;
    higher dimensions scan coboundary pairs of each shared simplex.  Work is
    sharded over shared simplices, so totals are exact integer sums
    independent of the worker count.
    """
    if complex is None:
        complex = build_flag_complex(g, threads=threads)
    layers = complex.layers
    top = complex.dimension
    rows: list[CensusRow] = []
    rows.append(
        CensusRow(
            1,
            g.edge_count,
            g.n * (g.n - 1),
            g.edge_count,
            0,
            cap_adjacent=complex.truncated and top == 0,
        )
    )
    for d in range(2, top + 2):
        if d <= top:
            n_d = len(layers[d])
        elif complex.truncated:
            n_d = count_next_layer(g, layers[top], threads)
        else:
            n_d = 0
        worker = _dim2_chunk if d == 2 else _dimd_chunk
        shards = map_chunks(worker, layers[d - 2], threads, g)
        almost = sum(s[0] for s in shards)
        completed = sum(s[1] for s in shards)
        rejected = sum(s[2] for s in shards)
        if completed != comb(d + 1, 2) * n_d:
            raise InternalConsistencyError(
                f"dimension {d}: completed={completed} but "
                f"C({d + 1},2)*N_{d}={comb(d + 1, 2) * n_d}"
            )
        rows.append(
            CensusRow(d, n_d, almost, completed, rejected, cap_adjacent=complex.truncated and d == top + 1)
        )
    return CensusCounts(g.n, g.edge_count, complex.truncated, tuple(rows))


def brute_force_census(g: DirectedGraph, bound: int = 10) -> CensusCounts:
    """Independent oracle computing the same counters straight from the
    definitions: simplices by testing every ordered vertex tuple for all
    forward edges, almost-simplices by testing every pair of (d-1)-simplices
    for a shared face and an admissible missing edge.
    """
    from itertools import permutations

    if g.n > bound:
        raise GraphTooLarge(f"oracle limited to {bound} vertices")
    layers: list[list[Simplex]] = [[(v,) for v in range(g.n)]]
    while layers[-1]:
        size = len(layers)
        nxt = [
            tup
            for tup in permutations(range(g.n), size + 1)
            if all(
                g.has_edge(tup[i], tup[j])
                for i in range(size + 1)
                for j in range(i + 1, size + 1)
            )
        ]
        if not nxt:
            break
        layers.append(nxt)
    top = len(layers) - 1 if layers[0] else -1
    rows = [CensusRow(1, len(layers[1]) if top >= 1 else 0, g.n * (g.n - 1), g.edge_count, 0)]
    for d in range(2, top + 2):
        prev = layers[d - 1]
        n_d = len(layers[d]) if d <= top else 0
        almost = completed = 0
        for a_idx in range(len(prev)):
            for b_idx in range(a_idx + 1, len(prev)):
                sa, sb = prev[a_idx], prev[b_idx]
                for i in range(d):
                    for ip in range(d):
                        if boundary(sa, i) != boundary(sb, ip) or sa[i] == sb[ip]:
                            continue
                        candidates = []
                        if i <= ip:
                            candidates.append((sa[i], sb[ip]))
                        if ip <= i:
                            candidates.append((sb[ip], sa[i]))
                        for e in candidates:
                            almost += 1
                            completed += g.has_edge(*e)
        rejected = 0
        for shared in layers[d - 2]:
            entries = [
                (s, i)
                for s in prev
                for i in range(d)
                if boundary(s, i) == shared
            ]
            for a_idx in range(len(entries)):
                for b_idx in range(a_idx + 1, len(entries)):
                    if entries[a_idx][0][entries[a_idx][1]] == entries[b_idx][0][entries[b_idx][1]]:
                        rejected += 1
        rows.append(CensusRow(d, n_d, almost, completed, rejected))
    return CensusCounts(g.n, g.edge_count, False, tuple(rows))
