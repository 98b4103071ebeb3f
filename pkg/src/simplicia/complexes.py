"""Directed flag complexes: level-wise construction and (co)boundary machinery.

A d-simplex is an ordered (d+1)-tuple of distinct vertices whose forward
pairs are all edges.  Layers are kept fully in memory; construction extends
each (d-1)-simplex by its common out-neighbourhood, so every d-simplex is
produced exactly once from its front face and layers come out in
lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DirectedGraph, bit_indices
from .parallel import map_chunks

Simplex = tuple[int, ...]


class IndexOutOfRange(IndexError):
    pass


def boundary(simplex: Simplex, i: int) -> Simplex:
    """The (d-1)-face obtained by omitting the i-th vertex."""
    if not (0 <= i < len(simplex)) or len(simplex) < 2:
        raise IndexOutOfRange(f"boundary index {i} invalid for {simplex}")
    return simplex[:i] + simplex[i + 1 :]


@dataclass(frozen=True)
class FlagComplex:
    """Dimension-indexed layers S_0..S_D; ``truncated`` means a cap stopped
    construction while extensions still existed."""

    layers: tuple[tuple[Simplex, ...], ...]
    truncated: bool = False

    @property
    def dimension(self) -> int:
        """Top dimension with a non-empty layer; -1 for the empty graph."""
        for d in range(len(self.layers) - 1, -1, -1):
            if self.layers[d]:
                return d
        return -1

    def layer(self, d: int) -> tuple[Simplex, ...]:
        return self.layers[d] if 0 <= d < len(self.layers) else ()


def _common_out(g: DirectedGraph, simplex: Simplex) -> int:
    row = g.out_rows[simplex[0]]
    for v in simplex[1:]:
        row &= g.out_rows[v]
    return row


def _extend_chunk(args) -> list[Simplex]:
    g, chunk = args
    out = []
    for simplex in chunk:
        row = _common_out(g, simplex)
        out.extend(simplex + (v,) for v in bit_indices(row))
    return out


def build_flag_complex(
    g: DirectedGraph, max_dim: int | None = None, threads: int = 1
) -> FlagComplex:
    """Build all layers of the directed flag complex, optionally capped.

    With a cap K, layers S_0..S_K are complete and ``truncated`` records
    whether any (K+1)-simplex would have existed.  Results are independent
    of ``threads``.
    """
    if max_dim is not None and max_dim < 0:
        raise IndexOutOfRange("max_dim must be non-negative")
    layers: list[tuple[Simplex, ...]] = [tuple((v,) for v in range(g.n))]
    if max_dim != 0 and g.n:
        edges = tuple(g.edges())
        if edges:
            layers.append(edges)
    d = len(layers)
    while layers[-1] and (max_dim is None or d <= max_dim):
        prev = layers[-1]
        chunks = map_chunks(_extend_chunk, prev, threads, g)
        nxt: list[Simplex] = []
        for chunk in chunks:
            nxt.extend(chunk)
        if not nxt:
            break
        layers.append(tuple(nxt))
        d += 1
    truncated = False
    if max_dim is not None and len(layers) - 1 == max_dim and layers[-1]:
        truncated = any(_common_out(g, s) for s in layers[-1])
    return FlagComplex(tuple(layers), truncated)


def count_next_layer(g: DirectedGraph, top_layer: tuple[Simplex, ...], threads: int = 1) -> int:
    """Number of simplices one dimension above ``top_layer`` without storing them."""
    chunks = map_chunks(_count_ext_chunk, top_layer, threads, g)
    return sum(chunks)


def _count_ext_chunk(args) -> int:
    g, chunk = args
    return sum(_common_out(g, s).bit_count() for s in chunk)


def local_coboundaries(g: DirectedGraph, simplex: Simplex) -> list[tuple[int, int]]:
    """All (position, vertex) insertions turning ``simplex`` into a simplex of g.

    A vertex v inserted at position i needs edges from every earlier vertex
    and to every later one; the candidate sets are intersections of
    adjacency rows, swept incrementally position by position.
    """
    k = len(simplex)
    full = (1 << g.n) - 1
    suffix = [full] * (k + 1)
    for j in range(k - 1, -1, -1):
        suffix[j] = suffix[j + 1] & g.in_rows[simplex[j]]
    out: list[tuple[int, int]] = []
    prefix = full
    for i in range(k + 1):
        row = prefix & suffix[i]
        out.extend((i, v) for v in bit_indices(row))
        if i < k:
            prefix &= g.out_rows[simplex[i]]
    return out


def coboundaries_table(
    s_top: tuple[Simplex, ...], s_base: tuple[Simplex, ...]
) -> dict[Simplex, list[tuple[Simplex, int, int]]]:
    """Lookup table mapping each base simplex to its coboundaries (simplex, i, v_i)."""
    table: dict[Simplex, list[tuple[Simplex, int, int]]] = {t: [] for t in s_base}
    for simplex in s_top:
        for i in range(len(simplex)):
            table[boundary(simplex, i)].append((simplex, i, simplex[i]))
    return table
