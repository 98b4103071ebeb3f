"""Constructing graphs whose completion-probability signature matches a
prescribed rational vector exactly.

Two construction regimes share the work:

* sparse/medium targets: disjoint reciprocal blow-ups of complete
  multipartite blocks solve dimensions D..2 top-down (a block with k parts
  contributes nothing above dimension k), then a final scan over vertex
  pads (reciprocal, single-edge, and empty pairs plus isolated vertices)
  lands the dimension-1 density equation;
* dense targets, where any disjoint assembly starves the quadratic
  dimension-1 denominator: a seeded annealing search over reciprocal
  blow-ups of a single undirected graph with the edge count pinned by the
  density target and integer objectives per dimension.

Every returned graph is re-measured with the census engine; the target must
match exactly, restricted to its own dimensions (the graph may carry
structure in higher dimensions).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd

from .almost import count_all_ads, InternalConsistencyError
from .closing import compute_p
from .graph import DirectedGraph, GraphError


class InvalidTarget(GraphError):
    pass


class Infeasible(GraphError):
    def __init__(self, bound: int, message: str):
        self.bound = bound
        super().__init__(f"{message} (search bound {bound})")


class DimensionOutOfRange(GraphError):
    pass


@dataclass(frozen=True)
class SynthesisTarget:
    """Prescribed completion probabilities p*_1..p*_D, each strictly inside (0,1)."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values:
            raise InvalidTarget("target needs at least dimension 1")
        for d, value in enumerate(self.values, start=1):
            if not (0 < value < 1):
                raise InvalidTarget(f"target p_{d}={value} outside the open interval (0,1)")

    @property
    def dimension(self) -> int:
        return len(self.values)

    @classmethod
    def parse(cls, text: str) -> "SynthesisTarget":
        try:
            values = tuple(Fraction(part.strip()) for part in text.split(",") if part.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidTarget(f"cannot parse target {text!r}: {exc}") from None
        return cls(values)


# ---------------------------------------------------------------------------
# gadgets


def gadget(kind: str, d: int) -> DirectedGraph:
    """The two primitive pieces: ``closed_d`` is the complete loop-free
    digraph on d+1 vertices (every almost-d-simplex in it is completed);
    ``open_d`` is a single directed d-simplex missing the source-to-sink
    edge, carrying exactly one (uncompleted) almost-d-simplex."""
    if d < 2:
        raise DimensionOutOfRange("gadgets start at dimension 2")
    if kind == "closed":
        edges = [(u, v) for u in range(d + 1) for v in range(d + 1) if u != v]
    elif kind == "open":
        edges = [(u, v) for u in range(d + 1) for v in range(u + 1, d + 1) if (u, v) != (0, d)]
    else:
        raise GraphError(f"unknown gadget kind {kind!r}")
    return DirectedGraph(d + 1, edges)


@dataclass(frozen=True)
class GadgetStats:
    kind: str
    dimension: int
    vertex_count: int
    edge_count: int
    contributions: tuple[tuple[int, int, int], ...]  # (dim, completed, total)


def measure_gadget(kind: str, d: int) -> GadgetStats:
    """Census a gadget and report its per-dimension (completed, total)
    almost-simplex contributions, computed rather than assumed."""
    g = gadget(kind, d)
    counts = count_all_ads(g)
    contributions = tuple(
        (row.dimension, row.completed, row.almost) for row in counts.rows
    )
    return GadgetStats(kind, d, g.n, g.edge_count, contributions)


# ---------------------------------------------------------------------------
# multipartite block algebra (reciprocal blow-ups of complete multipartite
# graphs; a block with k parts is invisible above dimension k)


def _elementary(sizes: tuple[int, ...], r: int) -> int:
    if r < 0:
        return 0
    acc = [0] * (r + 1)
    acc[0] = 1
    for s in sizes:
        for j in range(min(r, len(sizes)), 0, -1):
            acc[j] += acc[j - 1] * s
    return acc[r]


def block_kappa(sizes: tuple[int, ...], r: int) -> int:
    """Number of r-cliques of the complete multipartite graph."""
    return _elementary(sizes, r)


def block_mu(sizes: tuple[int, ...], r: int) -> int:
    """Number of r-sets inducing a clique minus exactly one edge."""
    total = 0
    for i, s in enumerate(sizes):
        if s >= 2:
            rest = sizes[:i] + sizes[i + 1 :]
            total += comb(s, 2) * _elementary(rest, r - 2)
    return total


def block_vertices(sizes: tuple[int, ...]) -> int:
    return sum(sizes)


def block_edges_undirected(sizes: tuple[int, ...]) -> int:
    return _elementary(sizes, 2)


def _anti_mass(a: int, b: int) -> int:
    return comb(a, 2) * b + comb(b, 2) * a


def _anti_blocks(d: int, mass: int) -> list[tuple[int, ...]]:
    """Disjoint d-part blocks (a, b, 1, ..., 1) whose near-clique counts at
    dimension d sum exactly to ``mass``; greedy with an exact-fit scan."""
    ones = (1,) * (d - 2)
    out: list[tuple[int, ...]] = []
    while mass > 0:
        best: tuple[int, int] | None = None
        exact: tuple[int, int] | None = None
        a = 2
        while _anti_mass(a, 1) <= mass:
            b = a
            while b >= 1:
                m = _anti_mass(a, b)
                if m <= mass:
                    if m == mass:
                        exact = (a, b)
                    if best is None or m > _anti_mass(*best):
                        best = (a, b)
                    break
                b -= 1
            if exact:
                break
            a += 1
        pick = exact or best or (2, 1)
        out.append((pick[0], pick[1]) + ones)
        mass -= _anti_mass(*pick)
    return out


def _build_blocks_graph(
    blocks: list[tuple[int, ...]], recip_pairs: int, edge_pairs: int, singles: int
) -> DirectedGraph:
    edges: list[tuple[int, int]] = []
    base = 0
    for sizes in blocks:
        offsets = []
        start = base
        for s in sizes:
            offsets.append(range(start, start + s))
            start += s
        for i in range(len(sizes)):
            for j in range(i + 1, len(sizes)):
                for u in offsets[i]:
                    for v in offsets[j]:
                        edges.append((u, v))
                        edges.append((v, u))
        base = start
    for _ in range(recip_pairs):
        edges.extend([(base, base + 1), (base + 1, base)])
        base += 2
    for _ in range(edge_pairs):
        edges.append((base, base + 1))
        base += 2
    base += singles
    return DirectedGraph(base, edges)


def _dim1_pads(n_base: int, m_base: int, x: int, y: int, scan: int):
    """Find pads making the directed edge density exactly x/y: scan final
    vertex counts; pads supply 0..pad_vertices edges."""
    for n in range(max(n_base, 2), n_base + scan + 1):
        num = x * n * (n - 1)
        if num % y:
            continue
        delta = num // y - m_base
        if delta < 0:
            continue
        pad_v = n - n_base
        used = delta + (delta & 1)
        if used > pad_v:
            continue
        recip, single = delta // 2, delta & 1
        return recip, single, pad_v - used
    return None


def _route_blocks(target: SynthesisTarget, bound: int) -> DirectedGraph | None:
    """Top-down disjoint-block construction; None when the final density
    equation cannot be landed by dilution (dense targets)."""
    depth = target.dimension
    scan = 4 * bound
    if depth == 1:
        x, y = target.values[0].numerator, target.values[0].denominator
        pads = _dim1_pads(0, 0, x, y, scan)
        if pads is None:
            return None
        recip, single, free = pads
        return _build_blocks_graph([], recip, single, free)
    for q_top in range(depth + 1, depth + 2 + bound // 8):
        for copies in range(1, 1 + bound // 16):
            blocks: list[tuple[int, ...]] = [(1,) * q_top] * copies
            feasible = True
            for d in range(depth, 1, -1):
                c2 = comb(d + 1, 2)
                x = target.values[d - 1].numerator
                y = target.values[d - 1].denominator
                kappa = sum(block_kappa(b, d + 1) for b in blocks)
                mu = sum(block_mu(b, d + 1) for b in blocks)
                step = x // gcd(x, c2)
                extra = (-kappa) % step
                while True:
                    kp = kappa + extra
                    if kp > 0:
                        mu_needed = c2 * kp * (y - x) // x
                        if mu_needed >= mu:
                            break
                    extra += max(step, 1)
                    if extra > kappa + 10 * bound * step + 10:
                        feasible = False
                        break
                if not feasible:
                    break
                blocks.extend([(1,) * (d + 1)] * extra)
                blocks.extend(_anti_blocks(d, mu_needed - mu))
            if not feasible:
                continue
            n_base = sum(block_vertices(b) for b in blocks)
            m_base = 2 * sum(block_edges_undirected(b) for b in blocks)
            pads = _dim1_pads(n_base, m_base, target.values[0].numerator, target.values[0].denominator, scan)
            if pads is None:
                continue
            recip, single, free = pads
            return _build_blocks_graph(blocks, recip, single, free)
    return None


# ---------------------------------------------------------------------------
# dense regime: annealing over reciprocal blow-ups at pinned edge count


def _undirected_stats(n: int, rows: list[int], want_dim3: bool):
    tri = p2 = k4 = w4 = 0
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            com = ru & rows[v]
            edge = (ru >> v) & 1
            if edge:
                tri += (com >> (v + 1)).bit_count()
            else:
                p2 += com.bit_count()
            if want_dim3:
                inner = 0
                c = com
                while c:
                    low = c & -c
                    a = low.bit_length() - 1
                    c ^= low
                    inner += ((rows[a] & com) >> (a + 1)).bit_count()
                if edge:
                    k4 += inner
                else:
                    w4 += inner
    return tri, p2, k4 // 6, w4


def _dense_energy(target: SynthesisTarget, stats) -> int:
    tri, p2, k4, w4 = stats
    energy = 0
    x2, y2 = target.values[1].numerator, target.values[1].denominator
    energy += abs(y2 * 3 * tri - x2 * (3 * tri + p2))
    if tri == 0:
        energy += 1_000
    if target.dimension >= 3:
        x3, y3 = target.values[2].numerator, target.values[2].denominator
        energy += abs(y3 * 6 * k4 - x3 * (6 * k4 + w4))
        if k4 == 0:
            energy += 1_000
    return energy


def _lex_fill(n: int, m: int) -> DirectedGraph:
    edges = []
    for u in range(n):
        for v in range(n):
            if u != v and len(edges) < m:
                edges.append((u, v))
    return DirectedGraph(n, edges)


def _route_dense(target: SynthesisTarget, bound: int) -> DirectedGraph | None:
    depth = target.dimension
    if depth > 3:
        return None
    x1, y1 = target.values[0].numerator, target.values[0].denominator
    if depth == 1:
        # any edge count hitting the density works; fill ordered pairs in order
        for n in range(2, 2 + 4 * y1):
            if (x1 * n * (n - 1)) % y1 == 0:
                return _lex_fill(n, x1 * n * (n - 1) // y1)
        return None
    want3 = depth >= 3
    candidates = []
    for n in range(depth + 2, depth + 26 + bound // 4):
        m_dir = x1 * n * (n - 1)
        if m_dir % y1:
            continue
        m_dir //= y1
        if m_dir % 2 or m_dir == 0:
            continue
        candidates.append((n, m_dir // 2))
    for seed in range(4 + bound // 16):
        for n, m_und in candidates:
            rows = _anneal(target, n, m_und, seed, iters=400 * bound, want3=want3)
            if rows is not None:
                edges = [
                    (u, v)
                    for u in range(n)
                    for v in range(n)
                    if u != v and (rows[u] >> v) & 1
                ]
                return DirectedGraph(n, edges)
    return None


def _anneal(target, n, m_und, seed, iters, want3):
    rng = random.Random((seed << 16) ^ n ^ (m_und << 1))
    pairs = list(combinations(range(n), 2))
    if m_und > len(pairs):
        return None
    rng.shuffle(pairs)
    rows = [0] * n
    edges = set(pairs[:m_und])
    non = set(pairs[m_und:])
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    energy = _dense_energy(target, _undirected_stats(n, rows, want3))
    temperature = 30.0
    best = energy
    stall = 0
    patience = 2_500 + 40 * n * n
    for _ in range(iters):
        if energy == 0:
            return rows
        if stall > patience:
            return None
        if not edges or not non:
            return None
        rm = rng.choice(tuple(edges))
        ad = rng.choice(tuple(non))
        for u, v in (rm, ad):
            rows[u] ^= 1 << v
            rows[v] ^= 1 << u
        candidate = _dense_energy(target, _undirected_stats(n, rows, want3))
        temperature = max(0.25, temperature * 0.9995)
        if candidate <= energy or rng.random() < 2.718281828 ** ((energy - candidate) / temperature):
            edges.remove(rm)
            edges.add(ad)
            non.remove(ad)
            non.add(rm)
            energy = candidate
            if energy < best:
                best = energy
                stall = 0
            else:
                stall += 1
        else:
            for u, v in (rm, ad):
                rows[u] ^= 1 << v
                rows[v] ^= 1 << u
            stall += 1
    return None


# ---------------------------------------------------------------------------


def measure_signature(g: DirectedGraph, depth: int, threads: int = 1) -> tuple[Fraction, ...]:
    """The graph's completion probabilities restricted to dimensions 1..depth."""
    counts = count_all_ads(g, threads=threads)
    return compute_p(counts)[:depth]


DEFAULT_BOUND = 64


def synthesize(
    target: SynthesisTarget | tuple | list,
    bound: int = DEFAULT_BOUND,
    threads: int = 1,
) -> DirectedGraph:
    """Construct a graph whose measured p_1..p_D equal the target exactly.

    The result may carry simplices above dimension D; the guarantee is for
    the restriction to the target's dimensions, verified by a full census
    before returning.  Raises Infeasible when every bounded search lane is
    exhausted.
    """
    if not isinstance(target, SynthesisTarget):
        target = SynthesisTarget(tuple(Fraction(v) for v in target))
    g = _route_blocks(target, bound)
    if g is None:
        g = _route_dense(target, bound)
    if g is None:
        raise Infeasible(bound, f"no construction found for target {target.values}")
    measured = measure_signature(g, target.dimension, threads)
    if measured != target.values:
        raise InternalConsistencyError(
            f"synthesized graph re-measures to {measured}, wanted {target.values}"
        )
    return g
