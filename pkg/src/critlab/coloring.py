"""Exact coloring engine: chromatic number, partition enumeration,
unique-colorability status, and rainbow-vertex machinery.

A coloring is total and 1-based; two colorings are equivalent when they
induce the same partition of the vertex set into color classes.  Partition
enumeration introduces colors in first-seen order, so each equivalence
class of proper colorings is produced exactly once.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from . import _kernels as K
from .graphs import Graph


class ColorStatus(enum.Enum):
    UNIQUE = "UNIQUE"
    MULTIPLE = "MULTIPLE"
    UNCOLORABLE = "UNCOLORABLE"


@dataclass(frozen=True)
class Coloring:
    """Total assignment of colors 1..k, indexed by vertex."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("palette size must be nonnegative")
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise ValueError(f"color {c} of vertex {v} outside 1..{self.k}")

    @property
    def n(self) -> int:
        return len(self.colors)

    def to_json(self) -> list[int]:
        return list(self.colors)


@dataclass(frozen=True)
class ColorPartition:
    """Color classes as disjoint vertex sets, ordered by minimum vertex."""

    classes: tuple[frozenset[int], ...]

    def to_json(self) -> list[list[int]]:
        return [sorted(cls) for cls in self.classes]


def validate_coloring(g: Graph, c: Coloring) -> bool:
    """True when no edge of g is monochromatic under c."""
    if c.n != g.n:
        raise ValueError(f"coloring covers {c.n} vertices, graph has {g.n}")
    for u, v in g.edges():
        if c.colors[u] == c.colors[v]:
            return False
    return True


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return int(K.chromatic(g.to_matrix(), g.n))


def is_k_colorable(g: Graph, k: int) -> Coloring | None:
    """First proper k-coloring in deterministic DSATUR order, if any."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if g.n == 0:
        return Coloring((), k)
    arr = K.color_decision(g.to_matrix(), g.n, k)
    if arr.shape[0] == 0:
        return None
    return Coloring(tuple(int(x) for x in arr), k)


def colors_used(c: Coloring, vertices: Iterable[int]) -> frozenset[int]:
    out = set()
    for v in vertices:
        if not 0 <= v < c.n:
            raise ValueError(f"vertex {v} outside coloring domain 0..{c.n - 1}")
        out.add(c.colors[v])
    return frozenset(out)


def partition_of(c: Coloring) -> ColorPartition:
    by_color: dict[int, set[int]] = {}
    for v, col in enumerate(c.colors):
        by_color.setdefault(col, set()).add(v)
    classes = sorted((frozenset(s) for s in by_color.values()), key=min)
    return ColorPartition(tuple(classes))


def equivalent(c1: Coloring, c2: Coloring) -> bool:
    if c1.n != c2.n:
        raise ValueError("colorings cover different vertex sets")
    return partition_of(c1) == partition_of(c2)


def enumerate_color_partitions(g: Graph, k: int, limit: int) -> list[ColorPartition]:
    """Distinct partitions induced by proper <=k-colorings, first `limit`.

    Enumeration is exhaustive backtracking in vertex order with color
    symmetry broken (vertex 0's class first, new classes in order), so the
    assignments are exactly the restricted-growth normal forms.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    if g.n == 0:
        return [ColorPartition(())]
    cnt, arr = K.list_partitions(g.to_matrix(), g.n, k, limit)
    out = []
    for i in range(int(cnt)):
        row = arr[i]
        nclasses = int(row.max())
        classes = [set() for _ in range(nclasses)]
        for v in range(g.n):
            classes[int(row[v]) - 1].add(v)
        # first-seen color order is already minimum-vertex order
        out.append(ColorPartition(tuple(frozenset(s) for s in classes)))
    return out


def count_color_partitions(g: Graph, k: int, limit: int) -> int:
    if g.n == 0:
        return 1
    return int(K.count_partitions(g.to_matrix(), g.n, k, limit))


def colorability_status(g: Graph, k: int) -> ColorStatus:
    """UNIQUE / MULTIPLE / UNCOLORABLE for the <=k-coloring partitions."""
    cnt = count_color_partitions(g, k, 2)
    if cnt == 0:
        return ColorStatus.UNCOLORABLE
    return ColorStatus.UNIQUE if cnt == 1 else ColorStatus.MULTIPLE


def is_uniquely_k_colorable(g: Graph, k: int) -> bool:
    """True when chi(g) <= k and all proper k-colorings are equivalent.

    Graphs that are not k-colorable at all return False: the definition
    builds the chi <= k requirement into the term.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    return colorability_status(g, k) is ColorStatus.UNIQUE


def rainbow_vertex_of_class(g: Graph, classes: tuple[frozenset[int], ...],
                            idx: int) -> int | None:
    """Least member of class `idx` adjacent to every other class, if any."""
    others = [cls for j, cls in enumerate(classes) if j != idx]
    for v in sorted(classes[idx]):
        row = g.adj[v]
        if all(any(row >> u & 1 for u in cls) for cls in others):
            return v
    return None


def rainbow_vertices(g: Graph, c: Coloring) -> list[int] | None:
    """One rainbow vertex per color class, or None if some class has none.

    A rainbow vertex of a class is adjacent to at least one vertex in every
    other class.  Classes follow the canonical partition order.
    """
    if not validate_coloring(g, c):
        raise ValueError("rainbow_vertices requires a proper coloring")
    classes = partition_of(c).classes
    out = []
    for idx in range(len(classes)):
        z = rainbow_vertex_of_class(g, classes, idx)
        if z is None:
            return None
        out.append(z)
    return out


def recolor_class_away(g: Graph, c: Coloring, idx: int) -> Coloring:
    """Dissolve class `idx` by recoloring each member into another class.

    Every member must miss some other class entirely (i.e. the class has no
    rainbow vertex requirement satisfied member-wise); each one moves to the
    least color absent from its neighborhood.  The result is proper and uses
    one color fewer.
    """
    classes = partition_of(c).classes
    target = classes[idx]
    colors = list(c.colors)
    target_color = c.colors[min(target)]
    for v in sorted(target):
        row = g.adj[v]
        neighbour_colors = {colors[u] for u in range(g.n) if row >> u & 1}
        choice = None
        for col in sorted(set(colors)):
            if col != target_color and col not in neighbour_colors:
                choice = col
                break
        if choice is None:
            raise ValueError(f"vertex {v} is adjacent to all other classes; "
                             "class cannot be dissolved")
        colors[v] = choice
    used = sorted(set(colors))
    remap = {old: new for new, old in enumerate(used, start=1)}
    return Coloring(tuple(remap[x] for x in colors), len(used))
