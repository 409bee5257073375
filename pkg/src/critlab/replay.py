"""Executable replay of the chain argument for 6-chromatic inputs.

The replay builds a maximal nested sequence of uniquely-4-colorable induced
subgraphs, locates the triangle whose lowest chain position is maximal, and
drives the argument to its K5 contradiction, emitting a certificate.  Since
no genuine non-complete 6-chromatic input survives the hypothesis checks,
every real run ends in a hypothesis verdict or COMPLETE_K6; CHAIN_ANOMALY
marks a guaranteed step failing, which would mean an implementation bug.

Certificates are versioned JSON documents.  The re-checker validates every
structural claim (coloring properness, common-neighbourhood membership,
clique adjacency, chain consistency) from the adjacency data alone;
chromatic measurements are attested by the emitter and witnessed one-sided
by the included coloring and clique.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from .coloring import ColorStatus, chromatic_number, colorability_status, is_k_colorable
from .formats import parse_graph6, to_graph6
from .graphs import (
    Graph,
    common_neighbourhood,
    delete_vertices,
    induced_subgraph,
    is_complete,
    is_connected,
    triangles,
    vertices_of,
)

SCHEMA = "crit-lab/diagnosis/1"


class Verdict(enum.Enum):
    COMPLETE_K6 = "COMPLETE_K6"
    NOT_CONNECTED = "NOT_CONNECTED"
    WRONG_CHI = "WRONG_CHI"
    EDGE_NOT_IN_TRIANGLE = "EDGE_NOT_IN_TRIANGLE"
    BAD_TRIANGLE = "BAD_TRIANGLE"
    K5_FOUND = "K5_FOUND"
    CHAIN_ANOMALY = "CHAIN_ANOMALY"


@dataclass(frozen=True)
class Chain:
    """Vertex order whose prefixes induce uniquely-4-colorable subgraphs."""

    order: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.order)


def build_chain(g: Graph) -> Chain:
    """Greedy maximal chain: start at vertex 0, repeatedly append the least
    vertex whose addition keeps the induced subgraph uniquely 4-colorable."""
    if g.n < 1:
        raise ValueError("chain construction needs at least one vertex")
    order = [0]
    chosen = {0}
    while True:
        extended = False
        for w in range(g.n):
            if w in chosen:
                continue
            sub, _ = induced_subgraph(g, sorted(chosen | {w}))
            if colorability_status(sub, 4) is ColorStatus.UNIQUE:
                order.append(w)
                chosen.add(w)
                extended = True
                break
        if not extended:
            return Chain(tuple(order))


def find_max_l_triangle(chain: Chain, g: Graph) -> tuple[int, int, int] | None:
    """Triangle inside the chain maximizing its lowest chain position.

    Returns (v_i, v_j, v_l) ordered by descending position i > j > l; ties
    on l are broken by minimal j, then minimal i.  None if the chain's
    induced subgraph is triangle-free.
    """
    pos = {v: i + 1 for i, v in enumerate(chain.order)}
    in_chain = set(chain.order)
    best_key = None
    best = None
    for tri in triangles(g):
        if not all(v in in_chain for v in tri):
            continue
        by_pos = sorted(tri, key=lambda v: pos[v], reverse=True)
        i, j, l = (pos[v] for v in by_pos)
        key = (-l, j, i)
        if best_key is None or key < best_key:
            best_key = key
            best = tuple(by_pos)
    return best


@dataclass
class Diagnosis:
    verdict: Verdict
    graph6: str
    n: int
    detail: dict = field(default_factory=dict)
    trace: dict = field(default_factory=dict)

    def to_doc(self) -> dict:
        return {
            "schema": SCHEMA,
            "graph6": self.graph6,
            "n": self.n,
            "verdict": self.verdict.value,
            "detail": self.detail,
            "trace": self.trace,
        }

    def to_json(self, pretty: bool = False) -> str:
        return json.dumps(self.to_doc(), indent=2 if pretty else None, sort_keys=True)


def _greedy_clique_vertices(g: Graph) -> list[int]:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    clique: list[int] = []
    for v in order:
        if all(g.has_edge(v, u) for u in clique):
            clique.append(v)
    return sorted(clique)


def replay_proof(g: Graph, skip_completeness_check: bool = False) -> Diagnosis:
    """Run the hypothesis checks and, if they pass, the chain argument.

    `skip_completeness_check` lets callers push a complete graph through the
    contradiction path (steps 4-7) instead of stopping at COMPLETE_K6; that
    is how the K5_FOUND endgame is exercised, since no genuine non-complete
    input can reach it.
    """
    g6 = to_graph6(g)

    def diag(verdict: Verdict, detail: dict, trace: dict | None = None) -> Diagnosis:
        return Diagnosis(verdict, g6, g.n, detail, trace or {})

    # (1) connectivity and chi = 6
    if not is_connected(g):
        comp: list[int] = []
        if g.n > 0:
            seen = 1
            frontier = 1
            while frontier:
                nxt = 0
                for v in vertices_of(frontier):
                    nxt |= g.adj[v]
                frontier = nxt & ~seen
                seen |= frontier
            comp = list(vertices_of(seen))
        return diag(Verdict.NOT_CONNECTED, {"component": comp})
    chi = chromatic_number(g)
    if chi != 6:
        coloring = is_k_colorable(g, chi)
        return diag(Verdict.WRONG_CHI, {
            "chi": chi,
            "coloring": list(coloring.colors) if coloring else [],
            "clique": _greedy_clique_vertices(g),
        })

    # (2) the expected outcome
    if is_complete(g) and not skip_completeness_check:
        return diag(Verdict.COMPLETE_K6, {})

    # (3) triangle-criticality hypotheses
    for u, v in g.edges():
        if not g.adj[u] & g.adj[v]:
            return diag(Verdict.EDGE_NOT_IN_TRIANGLE, {"edge": [u, v]})
    for tri in triangles(g):
        rest = delete_vertices(g, tri)
        chi_after = chromatic_number(rest)
        if chi_after != 3:
            coloring = is_k_colorable(rest, chi_after)
            return diag(Verdict.BAD_TRIANGLE, {
                "triangle": list(tri),
                "chi_after": chi_after,
                "coloring_after": list(coloring.colors) if coloring else [],
            })

    # (4) maximal uniquely-4-colorable chain
    chain = build_chain(g)
    trace: dict = {"chain": list(chain.order)}
    outside = [w for w in range(g.n) if w not in set(chain.order)]
    trace["extension_statuses"] = {
        str(w): colorability_status(
            induced_subgraph(g, sorted(set(chain.order) | {w}))[0], 4
        ).value
        for w in outside
    }
    if chain.r < 4:
        return diag(Verdict.CHAIN_ANOMALY,
                    {"step": "chain_length", "r": chain.r}, trace)

    # (5) the maximal-l triangle and its common neighbourhood in the chain
    tri = find_max_l_triangle(chain, g)
    if tri is None:
        return diag(Verdict.CHAIN_ANOMALY,
                    {"step": "no_triangle_in_chain"}, trace)
    vi, vj, vl = tri
    pos = {v: i + 1 for i, v in enumerate(chain.order)}
    trace["triangle"] = [vi, vj, vl]
    trace["positions"] = [pos[vi], pos[vj], pos[vl]]
    l = pos[vl]
    t_graph = common_neighbourhood(g, tri)
    t_chain = tuple(v for v in t_graph if v in set(chain.order))
    trace["t_chain"] = list(t_chain)
    trace["t_graph"] = list(t_graph)
    h_l_minus_1 = set(chain.order[: l - 1])
    if not set(t_chain) <= h_l_minus_1:
        return diag(Verdict.CHAIN_ANOMALY,
                    {"step": "t_chain_escapes_lower_prefix"}, trace)
    if len(t_chain) > 1:
        return diag(Verdict.CHAIN_ANOMALY,
                    {"step": "t_chain_not_singleton", "size": len(t_chain)}, trace)

    # (6) two outside common neighbours and their extension statuses
    candidates = [w for w in t_graph if w not in set(t_chain)]
    if len(candidates) < 2:
        return diag(Verdict.CHAIN_ANOMALY,
                    {"step": "too_few_outside_common_neighbours",
                     "count": len(candidates)}, trace)
    u, v = sorted(candidates)[:2]
    trace["u"] = u
    trace["v"] = v
    h_u, _ = induced_subgraph(g, sorted(set(chain.order) | {u}))
    h_v, _ = induced_subgraph(g, sorted(set(chain.order) | {v}))
    status_u = colorability_status(h_u, 4)
    status_v = colorability_status(h_v, 4)
    trace["h_u_status"] = status_u.value
    trace["h_v_status"] = status_v.value
    trace["h_u_chi"] = chromatic_number(h_u)
    trace["h_v_chi"] = chromatic_number(h_v)
    if status_u is not ColorStatus.UNCOLORABLE:
        return diag(Verdict.CHAIN_ANOMALY,
                    {"step": "H_u_still_4_colorable", "status": status_u.value},
                    trace)
    if status_v is not ColorStatus.UNCOLORABLE:
        return diag(Verdict.CHAIN_ANOMALY,
                    {"step": "H_v_still_4_colorable", "status": status_v.value},
                    trace)

    # (7) adjacency of u,v closes the K5
    if not g.has_edge(u, v):
        return diag(Verdict.CHAIN_ANOMALY,
                    {"step": "outside_pair_not_adjacent"}, trace)
    five = sorted([vi, vj, vl, u, v])
    for a in five:
        for b in five:
            if a < b and not g.has_edge(a, b):
                return diag(Verdict.CHAIN_ANOMALY,
                            {"step": "five_set_not_clique", "pair": [a, b]}, trace)
    return diag(Verdict.K5_FOUND, {"five_set": five}, trace)


class CertificateSchemaError(ValueError):
    """Document is not a crit-lab diagnosis of a known version."""


def verify_certificate(doc: dict) -> list[str]:
    """Re-validate a diagnosis document; returns a list of failed claims.

    All checks run on the adjacency data alone: colorings are re-checked
    for properness and color count, claimed cliques and common
    neighbourhoods are recomputed, chain and position bookkeeping is
    cross-checked.  Chromatic-number measurements themselves are attested
    by the emitter (the included coloring and clique witness them from one
    side each).
    """
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        raise CertificateSchemaError(
            f"expected schema {SCHEMA!r}, got {doc.get('schema')!r}"
            if isinstance(doc, dict) else "certificate is not a JSON object"
        )
    failures: list[str] = []
    try:
        g = parse_graph6(doc["graph6"])
    except (KeyError, ValueError) as exc:
        return [f"graph6 field invalid: {exc}"]
    if doc.get("n") != g.n:
        failures.append(f"n field {doc.get('n')} != decoded vertex count {g.n}")
    try:
        verdict = Verdict(doc.get("verdict"))
    except ValueError:
        return failures + [f"unknown verdict {doc.get('verdict')!r}"]
    detail = doc.get("detail", {})
    trace = doc.get("trace", {})

    def check_proper(colors: list[int], graph: Graph, label: str, expected_count: int) -> None:
        if len(colors) != graph.n:
            failures.append(f"{label}: length {len(colors)} != {graph.n}")
            return
        for a, b in graph.edges():
            if colors[a] == colors[b]:
                failures.append(f"{label}: edge ({a},{b}) monochromatic")
                return
        if len(set(colors)) != expected_count:
            failures.append(
                f"{label}: uses {len(set(colors))} colors, claimed {expected_count}")

    if verdict is Verdict.COMPLETE_K6:
        if not (is_complete(g) and g.n == 6):
            failures.append("graph is not the complete 6-graph")
    elif verdict is Verdict.NOT_CONNECTED:
        comp = detail.get("component", [])
        if g.n > 0:
            cset = set(comp)
            if not comp or cset >= set(range(g.n)) or not cset <= set(range(g.n)):
                failures.append("component is not a nonempty proper vertex subset")
            else:
                for a in cset:
                    for b in range(g.n):
                        if b not in cset and g.has_edge(a, b):
                            failures.append(f"edge ({a},{b}) leaves the component")
    elif verdict is Verdict.WRONG_CHI:
        chi = detail.get("chi")
        if not isinstance(chi, int) or chi == 6:
            failures.append(f"chi claim {chi!r} does not justify WRONG_CHI")
        else:
            if chi > 0 or g.n == 0:
                check_proper(detail.get("coloring", []), g, "coloring", chi)
            clique = detail.get("clique", [])
            if len(set(clique)) != len(clique) or not all(
                g.has_edge(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]
            ):
                failures.append("clique witness is not a clique")
    elif verdict is Verdict.EDGE_NOT_IN_TRIANGLE:
        edge = detail.get("edge", [])
        if len(edge) != 2 or not g.has_edge(edge[0], edge[1]):
            failures.append("claimed edge is absent")
        elif g.adj[edge[0]] & g.adj[edge[1]]:
            failures.append("claimed edge does lie in a triangle")
    elif verdict is Verdict.BAD_TRIANGLE:
        tri = detail.get("triangle", [])
        if len(set(tri)) != 3 or not all(
            g.has_edge(a, b) for i, a in enumerate(tri) for b in tri[i + 1:]
        ):
            failures.append("claimed triangle does not induce K3")
        else:
            chi_after = detail.get("chi_after")
            if chi_after == 3:
                failures.append("chi_after = 3 does not justify BAD_TRIANGLE")
            elif isinstance(chi_after, int):
                rest = delete_vertices(g, tri)
                if chi_after > 0 or rest.n == 0:
                    check_proper(detail.get("coloring_after", []), rest,
                                 "coloring_after", chi_after)
    elif verdict is Verdict.K5_FOUND:
        five = detail.get("five_set", [])
        if len(set(five)) != 5:
            failures.append("five_set does not contain 5 distinct vertices")
        else:
            for i, a in enumerate(five):
                for b in five[i + 1:]:
                    if not (0 <= a < g.n and 0 <= b < g.n and g.has_edge(a, b)):
                        failures.append(f"five_set pair ({a},{b}) not adjacent")
        chain = trace.get("chain", [])
        if len(set(chain)) != len(chain) or not all(0 <= w < g.n for w in chain):
            failures.append("chain is not a duplicate-free vertex sequence")
        tri = trace.get("triangle", [])
        positions = trace.get("positions", [])
        if len(tri) == 3 and len(positions) == 3 and not failures:
            pos = {w: i + 1 for i, w in enumerate(chain)}
            if [pos.get(w) for w in tri] != positions:
                failures.append("triangle positions do not match the chain")
            if not all(g.has_edge(a, b) for i, a in enumerate(tri) for b in tri[i + 1:]):
                failures.append("trace triangle does not induce K3")
            else:
                t_graph = set(common_neighbourhood(g, tri))
                if set(trace.get("t_graph", [])) != t_graph:
                    failures.append("t_graph does not match the common neighbourhood")
                if set(trace.get("t_chain", [])) != t_graph & set(chain):
                    failures.append("t_chain does not match the chain restriction")
                u, v = trace.get("u"), trace.get("v")
                if u not in t_graph or v not in t_graph:
                    failures.append("u,v are not common neighbours of the triangle")
                elif not g.has_edge(u, v):
                    failures.append("u,v are not adjacent")
                if sorted(set(tri) | {u, v}) != sorted(five):
                    failures.append("five_set is not the triangle plus u,v")
    elif verdict is Verdict.CHAIN_ANOMALY:
        pass  # anomaly reports carry no independently checkable claim
    return failures
