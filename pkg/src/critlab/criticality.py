"""Criticality predicates with witnesses, the forbidden-clique check, and
the common-neighbourhood lemma verifier.

Every predicate walks its candidate deletions in lexicographic order and
reports the first failure, so witnesses are reproducible.  Removing "two
independent edges" and "an edge plus a vertex" mean edge deletion (the
vertices stay); only that reading makes the required drop of exactly two
consistent on complete graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import (
    Coloring,
    chromatic_number,
    enumerate_color_partitions,
    rainbow_vertex_of_class,
    partition_of,
)
from .formats import to_graph6
from .graphs import (
    Graph,
    cliques_of_size,
    common_neighbourhood,
    delete_edges,
    delete_vertices,
    every_edge_in_triangle,
    independent_edge_pairs,
    induced_subgraph,
    is_connected,
    triangles,
)


@dataclass(frozen=True)
class Witness:
    kind: str
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class CheckOutcome:
    """Predicate verdict; holds is None when the predicate does not apply."""

    holds: bool | None
    witness: Witness | None = None
    applicable: bool = True

    def __bool__(self) -> bool:
        return self.holds is True


def is_vertex_critical(g: Graph) -> CheckOutcome:
    """chi(G - v) < chi(G) for every vertex."""
    if g.n < 1:
        raise ValueError("vertex-criticality needs at least one vertex")
    chi = chromatic_number(g)
    for v in range(g.n):
        if chromatic_number(delete_vertices(g, [v])) >= chi:
            return CheckOutcome(False, Witness("vertex", (v,)))
    return CheckOutcome(True)


def is_double_critical(g: Graph) -> CheckOutcome:
    """Vertex-critical, and deleting any adjacent pair drops chi by exactly 2."""
    if g.n < 2:
        raise ValueError("double-criticality needs at least two vertices")
    vc = is_vertex_critical(g)
    if not vc:
        return CheckOutcome(False, vc.witness)
    chi = chromatic_number(g)
    for u, v in g.edges():
        if chromatic_number(delete_vertices(g, [u, v])) != chi - 2:
            return CheckOutcome(False, Witness("edge", (u, v)))
    return CheckOutcome(True)


def is_triangle_critical(g: Graph) -> CheckOutcome:
    """Connected, chi >= 3, every edge in a triangle, and every triangle's
    removal drops chi by exactly 3.  The witness names the first failing
    clause."""
    if not is_connected(g):
        return CheckOutcome(False, Witness("disconnected", ()))
    chi = chromatic_number(g)
    if chi < 3:
        return CheckOutcome(False, Witness("chi_below_3", ()))
    for u, v in g.edges():
        if not g.adj[u] & g.adj[v]:
            return CheckOutcome(False, Witness("edge_not_in_triangle", (u, v)))
    for tri in triangles(g):
        if chromatic_number(delete_vertices(g, tri)) != chi - 3:
            return CheckOutcome(False, Witness("bad_triangle", tri))
    return CheckOutcome(True)


def is_indep_edge_pair_critical(g: Graph) -> CheckOutcome:
    """Deleting any two independent edges drops chi by exactly 2.

    Not applicable (holds=None) when no two vertex-disjoint edges exist.
    """
    chi = chromatic_number(g)
    seen_any = False
    for e, f in independent_edge_pairs(g):
        seen_any = True
        if chromatic_number(delete_edges(g, [e, f])) != chi - 2:
            return CheckOutcome(False, Witness("edge_pair", e + f))
    if not seen_any:
        return CheckOutcome(None, None, applicable=False)
    return CheckOutcome(True)


def is_edge_plus_vertex_critical(g: Graph) -> CheckOutcome:
    """Deleting any edge uv plus any vertex w outside it drops chi by 2."""
    if g.n < 3:
        raise ValueError("edge-plus-vertex criticality needs at least 3 vertices")
    if g.edge_count == 0:
        raise ValueError("edge-plus-vertex criticality needs at least one edge")
    chi = chromatic_number(g)
    for u, v in g.edges():
        g_minus_edge = delete_edges(g, [(u, v)])
        for w in range(g.n):
            if w == u or w == v:
                continue
            if chromatic_number(delete_vertices(g_minus_edge, [w])) != chi - 2:
                return CheckOutcome(False, Witness("edge_plus_vertex", (u, v, w)))
    return CheckOutcome(True)


def check_no_k_minus_1_clique(g: Graph) -> CheckOutcome:
    """No clique on chi(G)-1 vertices; witness is the least such clique.

    This is the contradiction detector behind the proof replay: a
    double-critical non-complete graph must pass it.
    """
    chi = chromatic_number(g)
    size = chi - 1
    if size < 0:
        return CheckOutcome(True)
    for clique in cliques_of_size(g, size):
        return CheckOutcome(False, Witness("clique", clique))
    return CheckOutcome(True)


@dataclass(frozen=True)
class CriticalityReport:
    graph_id: str
    chi: int
    vertex_critical: bool
    double_critical: bool
    triangle_critical: bool
    failing_witness: Witness | None

    def __post_init__(self) -> None:
        if self.triangle_critical and not self.double_critical:
            raise AssertionError("triangle-critical graph reported non-double-critical")
        if self.double_critical and not self.vertex_critical:
            raise AssertionError("double-critical graph reported non-vertex-critical")

    def to_json(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "chi": self.chi,
            "vertex_critical": self.vertex_critical,
            "double_critical": self.double_critical,
            "triangle_critical": self.triangle_critical,
            "failing_witness": self.failing_witness.to_json() if self.failing_witness else None,
        }


def criticality_report(g: Graph) -> CriticalityReport:
    """Evaluate the predicate chain and attach the first violated condition."""
    vc = is_vertex_critical(g)
    if g.n >= 2:
        dc = is_double_critical(g)
    else:
        dc = CheckOutcome(False, Witness("too_few_vertices", ()))
    tc = is_triangle_critical(g)
    if not vc:
        witness = vc.witness
    elif not dc:
        witness = dc.witness
    elif not tc:
        witness = tc.witness
    else:
        witness = None
    return CriticalityReport(
        graph_id=to_graph6(g),
        chi=chromatic_number(g),
        vertex_critical=bool(vc),
        double_critical=bool(dc),
        triangle_critical=bool(tc),
        failing_witness=witness,
    )


@dataclass
class LemmaReport:
    """Outcome of the common-neighbourhood lemma check on one triangle."""

    triangle: tuple[int, int, int]
    hypotheses_ok: bool
    failed_hypothesis: str | None
    t_set: tuple[int, ...]
    chi_without_triangle: int | None
    partitions_checked: int = 0
    colors_on_t: list[int] = field(default_factory=list)
    rainbow_triples: list[tuple[int, int, int]] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.hypotheses_ok and not self.violations

    def to_json(self) -> dict:
        return {
            "triangle": list(self.triangle),
            "hypotheses_ok": self.hypotheses_ok,
            "failed_hypothesis": self.failed_hypothesis,
            "t_set": list(self.t_set),
            "t_size": len(self.t_set),
            "chi_without_triangle": self.chi_without_triangle,
            "partitions_checked": self.partitions_checked,
            "colors_on_t": self.colors_on_t,
            "rainbow_triples": [list(t) for t in self.rainbow_triples],
            "violations": self.violations,
            "ok": self.ok,
        }


def verify_triangle_lemma(g: Graph, triangle: tuple[int, int, int],
                          samples: int = 1000) -> LemmaReport:
    """Check |c(T(x,y,z:G))| = 3 over proper 3-colorings of G - {x,y,z}.

    Requires a 6-chromatic triangle-critical graph and an induced triangle;
    when a hypothesis fails the report says which one and still carries the
    raw measurements for diagnostics.  Each 3-coloring is extended with
    three fresh colors on the triangle, and a rainbow vertex is exhibited in
    each of the three original classes; those three vertices must lie in the
    common neighbourhood and carry all three colors.
    """
    x, y, z = triangle
    distinct = len({x, y, z}) == 3
    induces_k3 = distinct and all(
        g.has_edge(a, b) for a, b in ((x, y), (x, z), (y, z))
    )
    failed = None
    if not induces_k3:
        failed = "triangle_does_not_induce_K3"
    elif chromatic_number(g) != 6:
        failed = "graph_not_6_chromatic"
    elif not is_triangle_critical(g):
        failed = "graph_not_triangle_critical"

    t_set = common_neighbourhood(g, triangle) if distinct else ()
    rest = delete_vertices(g, triangle) if distinct else None
    chi_rest = chromatic_number(rest) if rest is not None else None

    report = LemmaReport(
        triangle=tuple(triangle),
        hypotheses_ok=failed is None,
        failed_hypothesis=failed,
        t_set=t_set,
        chi_without_triangle=chi_rest,
    )
    if rest is None or chi_rest is None or chi_rest > 3:
        return report

    if len(t_set) < 3 and failed is None:
        report.violations.append(f"|T| = {len(t_set)} < 3")

    sub, relabel = induced_subgraph(g, [v for v in range(g.n) if v not in triangle])
    back = {new: old for old, new in relabel.items()}
    for part in enumerate_color_partitions(sub, 3, samples):
        report.partitions_checked += 1
        sub_colors = [0] * sub.n
        for color, cls in enumerate(part.classes, start=1):
            for v in cls:
                sub_colors[v] = color
        # measure |c(T)| on the original labels
        t_colors = {sub_colors[relabel[v]] for v in t_set}
        report.colors_on_t.append(len(t_colors))
        if len(t_colors) != 3 and failed is None:
            report.violations.append(
                f"partition {report.partitions_checked}: |c(T)| = {len(t_colors)}"
            )
        # extend with colors 4,5,6 on the triangle and exhibit z_1,z_2,z_3
        full = [0] * g.n
        for new, old in back.items():
            full[old] = sub_colors[new]
        full[x], full[y], full[z] = 4, 5, 6
        ext = Coloring(tuple(full), 6)
        classes = partition_of(ext).classes
        triple = []
        for i, cls in enumerate(classes):
            color = full[min(cls)]
            if color not in (1, 2, 3):
                continue
            zi = rainbow_vertex_of_class(g, classes, i)
            if zi is None:
                if failed is None:
                    report.violations.append(
                        f"partition {report.partitions_checked}: class {color} "
                        "has no rainbow vertex"
                    )
            else:
                if zi not in t_set and failed is None:
                    report.violations.append(
                        f"partition {report.partitions_checked}: rainbow vertex "
                        f"{zi} outside T"
                    )
                triple.append(zi)
        if len(triple) == 3:
            report.rainbow_triples.append(tuple(triple))
    return report
