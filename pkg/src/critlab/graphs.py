"""Immutable simple graphs on at most 64 vertices, with bitset adjacency rows.

Vertices are 0..n-1.  Each adjacency row is a Python int used as an n-bit
set, so neighbourhood intersections and common-neighbour queries are single
bitwise operations.  Vertex sets cross the public API as iterables of ints
and come back as ascending tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

MAX_VERTICES = 64


class GraphSizeError(ValueError):
    """Vertex count outside the supported 0..64 range."""


def _mask_of(vertices: Iterable[int], n: int) -> int:
    m = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for graph on {n} vertices")
        m |= 1 << v
    return m


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; adj[v] is the neighbour bitset of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphSizeError(f"vertex count {self.n} not in 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has bits at or above n")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v},{u})")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        """Construct without invariant checks; rows must already be valid."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    # -- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in _bits(rest):
                out.append((u, v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.adj), default=0)

    def to_matrix(self) -> np.ndarray:
        """Dense uint8 adjacency matrix (the kernel input format)."""
        mat = np.zeros((self.n, self.n), dtype=np.uint8)
        for v, row in enumerate(self.adj):
            for u in _bits(row):
                mat[v, u] = 1
        return mat

    @classmethod
    def from_matrix(cls, mat: np.ndarray) -> "Graph":
        n = mat.shape[0]
        rows = []
        for v in range(n):
            m = 0
            for u in range(n):
                if mat[v, u]:
                    m |= 1 << u
            rows.append(m)
        return cls(n, tuple(rows))


# -- constructors ------------------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphSizeError(f"vertex count {n} not in 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphSizeError(f"vertex count {n} not in 0..{MAX_VERTICES}")
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphSizeError(f"complete graph size {n} not in 1..{MAX_VERTICES}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphSizeError(f"cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphSizeError("path needs at least 1 vertex")
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def join(g: Graph, h: Graph) -> Graph:
    """Graph join: disjoint union plus all edges between the two parts."""
    n = g.n + h.n
    edges = list(g.edges())
    edges += [(u + g.n, v + g.n) for u, v in h.edges()]
    edges += [(u, v + g.n) for u in range(g.n) for v in range(h.n)]
    return from_edges(n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges()) + [(u + g.n, v + g.n) for u, v in h.edges()]
    return from_edges(g.n + h.n, edges)


# -- set-theoretic operations ------------------------------------------


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on `vertices` plus the old->new relabelling map.

    New labels follow ascending order of the old ones.
    """
    mask = _mask_of(vertices, g.n)
    kept = list(_bits(mask))
    relabel = {old: new for new, old in enumerate(kept)}
    rows = []
    for old in kept:
        row = 0
        for u in _bits(g.adj[old] & mask):
            row |= 1 << relabel[u]
        rows.append(row)
    return Graph._trusted(len(kept), tuple(rows)), relabel


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Graph minus the given vertices (relabelled to 0..n-k-1)."""
    drop = _mask_of(vertices, g.n)
    keep = [v for v in range(g.n) if not drop >> v & 1]
    sub, _ = induced_subgraph(g, keep)
    return sub


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph minus the given edges (vertices stay in place)."""
    rows = list(g.adj)
    for u, v in edges:
        if not g.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph._trusted(g.n, tuple(rows))


def common_neighbourhood(g: Graph, vertices: Iterable[int]) -> tuple[int, ...]:
    """Vertices adjacent to every member of `vertices`, minus the set itself."""
    mask = _mask_of(vertices, g.n)
    if mask == 0:
        raise ValueError("common neighbourhood of the empty set is undefined")
    inter = (1 << g.n) - 1
    for v in _bits(mask):
        inter &= g.adj[v]
    return tuple(_bits(inter & ~mask))


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All 3-cliques as ascending triples, lexicographically sorted."""
    out = []
    for u in range(g.n):
        above_u = g.adj[u] >> (u + 1) << (u + 1)
        for v in _bits(above_u):
            common = g.adj[u] & g.adj[v]
            for w in _bits(common >> (v + 1) << (v + 1)):
                out.append((u, v, w))
    return out


def every_edge_in_triangle(g: Graph) -> bool:
    for u, v in g.edges():
        if not g.adj[u] & g.adj[v]:
            return False
    return True


def is_complete(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return all(g.adj[v] == full ^ (1 << v) for v in range(g.n))


def is_connected(g: Graph) -> bool:
    """Standard connectivity; a single vertex is connected, n=0 is not."""
    if g.n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def independent_edge_pairs(g: Graph) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
    """Pairs of vertex-disjoint edges, lexicographically ordered."""
    es = g.edges()
    for e, f in combinations(es, 2):
        if not set(e) & set(f):
            yield e, f


def cliques_of_size(g: Graph, size: int) -> Iterator[tuple[int, ...]]:
    """All cliques with `size` vertices, in lexicographic order."""
    if size == 0:
        yield ()
        return

    def extend(clique: tuple[int, ...], allowed: int) -> Iterator[tuple[int, ...]]:
        if len(clique) == size:
            yield clique
            return
        for v in _bits(allowed):
            yield from extend(clique + (v,), allowed & g.adj[v] & ~((1 << (v + 1)) - 1))

    yield from extend((), (1 << g.n) - 1)


def mask_of(vertices: Iterable[int], n: int) -> int:
    """Public bitmask helper (validates range)."""
    return _mask_of(vertices, n)


def vertices_of(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))
