"""Hypergraph data model, validation and structural queries.

A hypergraph here is a finite ordered vertex set plus an ordered family of
edges; every edge has at least two vertices, no edge contains another, and
edges are pairwise distinct.  Values are immutable after validation, so they
are safe to share across workers; all queries are pure functions.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

INFINITE = math.inf


@dataclass(frozen=True)
class Diagnostic:
    """One validation problem, naming the offending vertex or edge(s)."""

    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class InvalidHypergraphError(ValueError):
    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(str(d) for d in diagnostics))


@dataclass(frozen=True)
class Hypergraph:
    """Immutable simple hypergraph.

    ``vertices`` fixes the deterministic iteration order used everywhere
    (solver branching, scheme indexing).  Edges are stored as sorted label
    tuples; set equality of edges is tuple equality.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, ...], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:  # compact, tests print these a lot
        return f"Hypergraph({len(self.vertices)}v,{len(self.edges)}e)"


@dataclass(frozen=True)
class StructureSummary:
    rank: int
    corank: int
    uniform: bool
    linear: bool
    max_degree: int
    connected: bool
    diameter: int | float  # INFINITE when disconnected


def diagnose(vertices: Sequence[str], edges: Iterable[Iterable[str]]) -> list[Diagnostic]:
    """Collect every invariant violation in the raw data (empty list = valid)."""
    problems: list[Diagnostic] = []
    seen: set[str] = set()
    for v in vertices:
        if not isinstance(v, str) or not v:
            problems.append(Diagnostic("bad-label", f"vertex label {v!r} must be a non-empty string"))
        elif v in seen:
            problems.append(Diagnostic("duplicate-vertex", f"vertex {v!r} listed more than once"))
        seen.add(v)

    vertex_set = set(vertices)
    normalized: list[tuple[str, ...]] = []
    for raw in edges:
        edge = tuple(sorted(set(raw)))
        unknown = [v for v in edge if v not in vertex_set]
        if unknown:
            problems.append(Diagnostic("unknown-vertex", f"edge {list(raw)} uses unknown vertices {unknown}"))
        if len(edge) < 2:
            problems.append(Diagnostic("small-edge", f"edge {list(raw)} has fewer than two vertices (loops rejected)"))
        if edge in normalized:
            problems.append(Diagnostic("duplicate-edge", f"edge {list(edge)} appears more than once"))
        normalized.append(edge)

    for i, e in enumerate(normalized):
        for j, f in enumerate(normalized):
            if i != j and set(e) < set(f):
                problems.append(Diagnostic("containment", f"edge {list(e)} is contained in edge {list(f)}"))
    return problems


def validate(vertices: Sequence[str], edges: Iterable[Iterable[str]]) -> Hypergraph:
    """Build a Hypergraph, raising InvalidHypergraphError with all diagnostics."""
    edges = [list(e) for e in edges]
    problems = diagnose(vertices, edges)
    if problems:
        raise InvalidHypergraphError(problems)
    return Hypergraph(tuple(vertices), tuple(tuple(sorted(set(e))) for e in edges))


@lru_cache(maxsize=None)
def adjacency(h: Hypergraph) -> dict[str, frozenset[str]]:
    """Co-edge neighbour map: u adjacent to v iff some edge contains both."""
    nbr: dict[str, set[str]] = {v: set() for v in h.vertices}
    for e in h.edges:
        for u in e:
            nbr[u].update(e)
    return {v: frozenset(s - {v}) for v, s in nbr.items()}


def degree(h: Hypergraph, v: str) -> int:
    """Number of edges containing v."""
    if v not in set(h.vertices):
        raise KeyError(f"unknown vertex {v!r}")
    return sum(1 for e in h.edges if v in e)


def max_degree(h: Hypergraph) -> int:
    return max((degree(h, v) for v in h.vertices), default=0)


def star(h: Hypergraph, v: str) -> Hypergraph:
    """Sub-hypergraph induced by the edges containing v."""
    if v not in set(h.vertices):
        raise KeyError(f"unknown vertex {v!r}")
    edges = [e for e in h.edges if v in e]
    kept = [u for u in h.vertices if any(u in e for e in edges)]
    return Hypergraph(tuple(kept), tuple(edges))


def distance(h: Hypergraph, u: str, v: str) -> int | float:
    """Shortest co-edge path length; INFINITE if u, v are in different components."""
    vs = set(h.vertices)
    if u not in vs or v not in vs:
        raise KeyError(f"unknown vertex {u if u not in vs else v!r}")
    if u == v:
        return 0
    nbr = adjacency(h)
    frontier = {u}
    seen = {u}
    d = 0
    while frontier:
        d += 1
        frontier = {w for x in frontier for w in nbr[x]} - seen
        if v in frontier:
            return d
        seen |= frontier
    return INFINITE


def is_linear(h: Hypergraph) -> bool:
    """Any two edges intersect in at most one vertex."""
    for i, e in enumerate(h.edges):
        se = set(e)
        for f in h.edges[i + 1:]:
            if len(se & set(f)) > 1:
                return False
    return True


def is_connected(h: Hypergraph) -> bool:
    if h.n <= 1:
        return True
    nbr = adjacency(h)
    seen = {h.vertices[0]}
    frontier = [h.vertices[0]]
    while frontier:
        nxt = []
        for x in frontier:
            for w in nbr[x]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return len(seen) == h.n


def diameter(h: Hypergraph) -> int | float:
    """Longest shortest co-edge path; INFINITE when disconnected."""
    if h.n <= 1:
        return 0
    if not is_connected(h):
        return INFINITE
    nbr = adjacency(h)
    best = 0
    for src in h.vertices:
        dist = {src: 0}
        frontier = [src]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for x in frontier:
                for w in nbr[x]:
                    if w not in dist:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        best = max(best, max(dist.values()))
    return best


def structure_summary(h: Hypergraph) -> StructureSummary:
    sizes = [len(e) for e in h.edges]
    rank = max(sizes, default=0)
    corank = min(sizes, default=0)
    return StructureSummary(
        rank=rank,
        corank=corank,
        uniform=rank == corank,
        linear=is_linear(h),
        max_degree=max_degree(h),
        connected=is_connected(h),
        diameter=diameter(h),
    )


def is_uniform(h: Hypergraph) -> bool:
    sizes = {len(e) for e in h.edges}
    return len(sizes) <= 1


def rank(h: Hypergraph) -> int:
    return max((len(e) for e in h.edges), default=0)


# --- JSON interchange ------------------------------------------------------
#
# {"vertices": ["a", "b"], "edges": [["a", "b"]]} — order-insensitive on
# read, canonical sorted order on write.

def to_json_dict(h: Hypergraph) -> dict:
    return {
        "vertices": sorted(h.vertices),
        "edges": sorted([list(e) for e in h.edges]),
    }


def from_json_dict(data: dict) -> Hypergraph:
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise InvalidHypergraphError([Diagnostic("bad-format", 'expected {"vertices": [...], "edges": [[...]]}')])
    return validate(sorted(data["vertices"]), sorted([sorted(set(e)) for e in data["edges"]]))


def dump(h: Hypergraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_json_dict(h), fh, indent=2)
        fh.write("\n")


def load(path: str) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json_dict(json.load(fh))
