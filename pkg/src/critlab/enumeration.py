"""Isomorph-free generation of small connected graphs and the sharded
conjecture scans.

Generation uses canonical augmentation: a child built from a canonically
labelled connected parent is kept exactly when deleting its new vertex is
the canonical deletion (no non-cut deletion compares lower), so each
isomorphism class appears once.  Scans stream the generated stack through
stateless batch workers and merge results in batch order, which keeps
reports byte-identical run to run (apart from the elapsed field).
"""

from __future__ import annotations

import json
import os
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from . import _kernels as K
from .backend import decode_codes_batch, matrices_to_masks
from .coloring import chromatic_number
from .criticality import (
    check_no_k_minus_1_clique,
    is_double_critical,
    is_triangle_critical,
)
from .formats import Graph6Error, parse_graph6, to_graph6
from .graphs import Graph, GraphSizeError, complete_graph, is_complete

GENERATION_CAP = 10
_BATCH = 4096

_code_cache: dict[int, list[int]] = {1: [0]}


def _connected_codes(n: int) -> list[int]:
    """Canonical codes of all connected graphs on n vertices (cached, n<=9)."""
    if n in _code_cache:
        return _code_cache[n]
    parents = _connected_codes(n - 1)
    pmats = decode_codes_batch(np.array(parents, dtype=np.int64), n - 1)
    out: list[int] = []
    for i in range(len(parents)):
        cnt, codes = K.children_codes(pmats[i], n - 1)
        out.extend(int(codes[j]) for j in range(cnt))
    if n <= 9:
        _code_cache[n] = out
    return out


def _graphs_from_mats(mats: np.ndarray, n: int) -> Iterator[Graph]:
    masks = matrices_to_masks(mats)
    for row in masks:
        yield Graph._trusted(n, tuple(int(x) for x in row))


def generate_connected(n: int) -> Iterator[Graph]:
    """Every connected graph on n vertices, once per isomorphism class.

    Output is deterministic and the graphs carry their canonical labelling.
    """
    if not 1 <= n <= GENERATION_CAP:
        raise GraphSizeError(f"generation supports 1..{GENERATION_CAP} vertices, got {n}")
    if n == 1:
        yield Graph._trusted(1, (0,))
        return
    if n <= 9:
        codes = _connected_codes(n)
        for start in range(0, len(codes), _BATCH):
            chunk = np.array(codes[start:start + _BATCH], dtype=np.int64)
            yield from _graphs_from_mats(decode_codes_batch(chunk, n), n)
        return
    # n = 10 streams child-by-child to keep memory flat
    parents = _connected_codes(n - 1)
    pmats_iter = (
        decode_codes_batch(np.array(parents[s:s + _BATCH], dtype=np.int64), n - 1)
        for s in range(0, len(parents), _BATCH)
    )
    for pmats in pmats_iter:
        for i in range(pmats.shape[0]):
            cnt, codes = K.children_codes(pmats[i], n - 1)
            if cnt:
                mats = decode_codes_batch(codes[:cnt].copy(), n)
                yield from _graphs_from_mats(mats, n)


def generate_graphs(n: int) -> Iterator[Graph]:
    """Every graph on n vertices (connected or not), once per iso class.

    Built as multisets of connected components, largest size first; within
    one size, component indices are non-decreasing, so each multiset occurs
    exactly once.
    """
    if not 1 <= n <= GENERATION_CAP:
        raise GraphSizeError(f"generation supports 1..{GENERATION_CAP} vertices, got {n}")
    comp_lists = {m: list(generate_connected(m)) for m in range(1, n + 1)}

    def assemble(remaining: int, max_size: int, max_index: int,
                 parts: list[Graph]) -> Iterator[Graph]:
        if remaining == 0:
            total = sum(p.n for p in parts)
            rows: list[int] = []
            offset = 0
            for p in parts:
                rows.extend(r << offset for r in p.adj)
                offset += p.n
            yield Graph._trusted(total, tuple(rows))
            return
        for size in range(min(remaining, max_size), 0, -1):
            comps = comp_lists[size]
            start = max_index if size == max_size else 0
            for idx in range(start, len(comps)):
                yield from assemble(remaining - size, size, idx, parts + [comps[idx]])

    yield from assemble(n, n, 0, [])


class IngestError(Graph6Error):
    def __init__(self, lineno: int, cause: Exception):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {cause}")


def ingest_graph6(lines: Iterable[str], skip_errors: bool = False) -> Iterator[tuple[int, Graph]]:
    """Parse a graph6 stream, yielding (line number, graph) in input order.

    Bad lines raise IngestError, or are skipped with a warning when
    `skip_errors` is set.  Blank lines are ignored.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except ValueError as exc:
            if skip_errors:
                warnings.warn(f"skipping graph6 line {lineno}: {exc}")
                continue
            raise IngestError(lineno, exc) from exc


@dataclass
class SearchReport:
    conjecture: str
    k: int
    n_max: int
    graphs_scanned: int = 0
    chi_matched: int = 0
    hits: list[str] = field(default_factory=list)
    noncomplete_hits: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    jobs: int = 1
    prefilters: bool = True
    source: str = "generator"
    interpretation: str = ""

    def expected_hits(self) -> list[str]:
        if self.n_max >= self.k:
            return [to_graph6(complete_graph(self.k))]
        return []

    def hits_as_expected(self) -> bool:
        return self.hits == self.expected_hits()

    def to_doc(self) -> dict:
        return {
            "schema": "crit-lab/search/1",
            "conjecture": self.conjecture,
            "k": self.k,
            "n_max": self.n_max,
            "graphs_scanned": self.graphs_scanned,
            "chi_matched": self.chi_matched,
            "hits": self.hits,
            "noncomplete_hits": self.noncomplete_hits,
            "elapsed": self.elapsed,
            "jobs": self.jobs,
            "prefilters": self.prefilters,
            "source": self.source,
            "interpretation": self.interpretation,
        }

    def to_json(self, pretty: bool = False) -> str:
        return json.dumps(self.to_doc(), indent=2 if pretty else None, sort_keys=True)


def _scan_batch(args: tuple) -> tuple[int, int, list[str], list[dict]]:
    """Evaluate one batch of graphs; pure function of its arguments."""
    mode, k, n, mats, prefilters = args
    scanned = 0
    chi_matched = 0
    hits: list[str] = []
    noncomplete: list[dict] = []
    for i in range(mats.shape[0]):
        scanned += 1
        mat = mats[i]
        if prefilters:
            if n < k:
                continue
            degs = mat.sum(axis=1)
            if int(degs.min()) < k - 1:
                continue
            if mode == "triangle":
                paths2 = mat.astype(np.int16) @ mat.astype(np.int16)
                if np.any((paths2 == 0) & (mat == 1)):
                    continue
        if int(K.chromatic(mat, n)) != k:
            continue
        chi_matched += 1
        masks = matrices_to_masks(mat[None, :, :])[0]
        g = Graph._trusted(n, tuple(int(x) for x in masks))
        outcome = is_triangle_critical(g) if mode == "triangle" else is_double_critical(g)
        if outcome:
            hits.append(to_graph6(g))
            if not is_complete(g):
                prop1 = check_no_k_minus_1_clique(g)
                noncomplete.append({
                    "graph6": to_graph6(g),
                    "no_k_minus_1_clique": bool(prop1),
                    "witness": prop1.witness.to_json() if prop1.witness else None,
                })
    return scanned, chi_matched, hits, noncomplete


def _resolve_jobs(jobs: int | None) -> int:
    if jobs is not None:
        return max(1, jobs)
    env = os.environ.get("CRIT_LAB_JOBS", "").strip()
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _batched_sources(n_max: int, source: Iterable[Graph] | None) -> Iterator[tuple]:
    if source is None:
        for n in range(1, n_max + 1):
            if n == 1:
                yield n, np.zeros((1, 1, 1), dtype=np.uint8)
                continue
            codes = _connected_codes(n) if n <= 9 else None
            if codes is not None:
                for start in range(0, len(codes), _BATCH):
                    chunk = np.array(codes[start:start + _BATCH], dtype=np.int64)
                    yield n, decode_codes_batch(chunk, n)
            else:
                buf: list[Graph] = []
                for g in generate_connected(n):
                    buf.append(g)
                    if len(buf) == _BATCH:
                        yield n, np.stack([x.to_matrix() for x in buf])
                        buf = []
                if buf:
                    yield n, np.stack([x.to_matrix() for x in buf])
    else:
        by_n: list[Graph] = []
        current = None
        for g in source:
            if current is None or (g.n == current and len(by_n) < _BATCH):
                by_n.append(g)
                current = g.n
            else:
                yield current, np.stack([x.to_matrix() for x in by_n])
                by_n = [g]
                current = g.n
        if by_n:
            yield current, np.stack([x.to_matrix() for x in by_n])


def _run_scan(mode: str, k: int, n_max: int, source: Iterable[Graph] | None,
              jobs: int | None, prefilters: bool) -> SearchReport:
    if not 3 <= k <= 6:
        raise ValueError(f"k must be in 3..6, got {k}")
    if not 1 <= n_max <= GENERATION_CAP:
        raise ValueError(f"n_max must be in 1..{GENERATION_CAP}, got {n_max}")
    njobs = _resolve_jobs(jobs)
    t0 = time.perf_counter()
    report = SearchReport(
        conjecture=mode, k=k, n_max=n_max, jobs=njobs, prefilters=prefilters,
        source="generator" if source is None else "stream",
    )
    args = ((mode, k, n, mats, prefilters)
            for n, mats in _batched_sources(n_max, source))

    def merge(result: tuple) -> None:
        scanned, matched, hits, noncomplete = result
        report.graphs_scanned += scanned
        report.chi_matched += matched
        report.hits.extend(hits)
        report.noncomplete_hits.extend(noncomplete)

    if njobs == 1:
        for result in map(_scan_batch, args):
            merge(result)
    else:
        # bounded in-flight window: memory stays flat on huge streams and
        # results still merge in batch order
        from collections import deque

        with ProcessPoolExecutor(max_workers=njobs) as pool:
            window: deque = deque()
            for arg in args:
                window.append(pool.submit(_scan_batch, arg))
                if len(window) >= njobs * 4:
                    merge(window.popleft().result())
            while window:
                merge(window.popleft().result())

    # every hit must survive re-verification from its serialized form
    for g6 in report.hits:
        g = parse_graph6(g6)
        again = is_triangle_critical(g) if mode == "triangle" else is_double_critical(g)
        if not again:
            raise AssertionError(f"hit {g6} failed predicate re-verification")
        if chromatic_number(g) != k:
            raise AssertionError(f"hit {g6} has wrong chromatic number on reload")

    if not report.hits_as_expected():
        report.interpretation = "unexpected hit set; inspect hits"
    elif n_max < k:
        report.interpretation = (
            f"no {k}-chromatic graph fits on {n_max} vertices; "
            "the empty hit set is expected"
        )
    elif mode == "triangle":
        report.interpretation = (
            f"hits are exactly the complete {k}-graph: no other "
            f"{k}-chromatic triangle-critical graph exists up to n={n_max}"
        )
    elif k <= 5:
        report.interpretation = (
            f"hits are exactly the complete {k}-graph: no other "
            f"{k}-chromatic double-critical graph exists up to n={n_max}"
        )
    else:
        report.interpretation = (
            f"no counterexample up to n={n_max}; the 6-chromatic "
            "double-critical question stays open beyond this range"
        )
    report.elapsed = time.perf_counter() - t0
    return report


def verify_triangle_conjecture(k: int, n_max: int, source: Iterable[Graph] | None = None,
                               jobs: int | None = None, prefilters: bool = True) -> SearchReport:
    """Scan connected graphs up to n_max for triangle-critical chi=k hits."""
    return _run_scan("triangle", k, n_max, source, jobs, prefilters)


def verify_double_critical(k: int, n_max: int, source: Iterable[Graph] | None = None,
                           jobs: int | None = None, prefilters: bool = True) -> SearchReport:
    """Scan connected graphs up to n_max for double-critical chi=k hits."""
    return _run_scan("double", k, n_max, source, jobs, prefilters)
