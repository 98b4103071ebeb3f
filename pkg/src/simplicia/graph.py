"""Directed simple graphs stored as per-vertex adjacency bit rows.

Vertices are dense integers 0..n-1.  Each vertex keeps one out-row and one
in-row as a Python integer used as a bitset, so neighbourhood intersections
are single bitwise ANDs.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction or query."""


class ParseError(GraphError):
    """Edge-list input rejected; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class SelfLoop(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass


class Malformed(ParseError):
    pass


class TooManyEdges(GraphError):
    pass


def bit_indices(row: int) -> Iterator[int]:
    """Yield the set bit positions of ``row`` in ascending order."""
    while row:
        low = row & -row
        yield low.bit_length() - 1
        row ^= low


class DirectedGraph:
    """Immutable simple directed graph: no self-loops, no duplicate edges.

    Reciprocal pairs (u,v) and (v,u) may coexist.  Construction is
    single-threaded; instances are safe to share across worker processes.
    """

    __slots__ = ("n", "out_rows", "in_rows", "edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        out_rows = [0] * n
        in_rows = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if (out_rows[u] >> v) & 1:
                raise DuplicateEdge(f"duplicate edge ({u},{v})")
            out_rows[u] |= 1 << v
            in_rows[v] |= 1 << u
            m += 1
        self.n = n
        self.out_rows = out_rows
        self.in_rows = in_rows
        self.edge_count = m

    def __reduce__(self):
        return (_restore_graph, (self.n, tuple(self.out_rows)))

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise VertexOutOfRange(f"vertex pair ({u},{v}) outside 0..{self.n - 1}")
        return bool((self.out_rows[u] >> v) & 1)

    def out_neighbors(self, v: int) -> list[int]:
        return list(bit_indices(self.out_rows[v]))

    def in_neighbors(self, v: int) -> list[int]:
        return list(bit_indices(self.in_rows[v]))

    def out_degree(self, v: int) -> int:
        return self.out_rows[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_rows[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges in ascending (u, v) order."""
        for u in range(self.n):
            for v in bit_indices(self.out_rows[u]):
                yield (u, v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.n == other.n and self.out_rows == other.out_rows

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.out_rows)))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, m={self.edge_count})"


def _restore_graph(n: int, out_rows: tuple[int, ...]) -> DirectedGraph:
    g = DirectedGraph(n)
    rows = list(out_rows)
    in_rows = [0] * n
    m = 0
    for u in range(n):
        row = rows[u]
        m += row.bit_count()
        for v in bit_indices(row):
            in_rows[v] |= 1 << u
    g.out_rows = rows
    g.in_rows = in_rows
    g.edge_count = m
    return g


def parse_graph(text: str, fmt: str = "edge_list") -> DirectedGraph:
    """Parse the edge-list format: comments, "V <n>", "E", then "<u> <v>" lines."""
    if fmt != "edge_list":
        raise GraphError(f"unknown format {fmt!r}")
    n = None
    seen_e = False
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    line_no = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        if line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "V" or not tokens[1].isdigit():
                raise Malformed(f"expected 'V <n>', got {line!r}", line_no)
            n = int(tokens[1])
            continue
        if not seen_e:
            if tokens != ["E"]:
                raise Malformed(f"expected 'E', got {line!r}", line_no)
            seen_e = True
            continue
        if len(tokens) != 2:
            raise Malformed(f"expected '<u> <v>', got {line!r}", line_no)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise Malformed(f"expected integers, got {line!r}", line_no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}", line_no)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}", line_no)
        if (u, v) in seen:
            raise DuplicateEdge(f"duplicate edge ({u},{v})", line_no)
        seen.add((u, v))
        edges.append((u, v))
    if n is None or not seen_e:
        raise Malformed("unexpected end of input", line_no + 1)
    return DirectedGraph(n, edges)


def serialize_graph(g: DirectedGraph) -> str:
    """Canonical edge-list text: edges ascending by (u, v)."""
    lines = [f"V {g.n}", "E"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def generate_er(n: int, m: int, seed: int) -> DirectedGraph:
    """Uniform random digraph with exactly n vertices and m distinct non-loop edges.

    Deterministic for a fixed seed within this implementation; edges are
    drawn without replacement from all n(n-1) ordered pairs.
    """
    limit = n * (n - 1)
    if m > limit:
        raise TooManyEdges(f"m={m} exceeds n(n-1)={limit}")
    if m < 0:
        raise GraphError("m must be non-negative")
    rng = random.Random(seed)
    picks = rng.sample(range(limit), m)
    edges = []
    for idx in picks:
        u, r = divmod(idx, n - 1)
        v = r + 1 if r >= u else r
        edges.append((u, v))
    return DirectedGraph(n, edges)


def disjoint_union(a: DirectedGraph, b: DirectedGraph) -> DirectedGraph:
    """Union with b's vertex ids shifted up by a.n; no cross edges."""
    edges = list(a.edges())
    shift = a.n
    edges.extend((u + shift, v + shift) for u, v in b.edges())
    return DirectedGraph(a.n + b.n, edges)
