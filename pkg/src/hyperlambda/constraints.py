"""Separation constraints induced by a hypergraph and colouring validation.

Two constraint levels are derived from the edge family:

* level-h pairs: vertices that share an edge;
* level-k pairs: vertices u, v with edges e1 containing v and e2 containing u
  (e1 = e2 allowed) whose intersection minus {u, v} is non-empty.

A pair inside an edge of size >= 3 lands in both sets; since h > k the h
requirement dominates and is the only one enforced for such pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Hypergraph

Pair = tuple[str, str]
Colouring = dict[str, int]


def _pair(u: str, v: str) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ConstraintSet:
    level_h: frozenset[Pair]
    level_k: frozenset[Pair]

    def requirement(self, h: int, k: int) -> dict[Pair, int]:
        """Effective gap per pair: h wherever both levels apply."""
        req = {p: k for p in self.level_k}
        req.update({p: h for p in self.level_h})
        return req


@dataclass(frozen=True)
class Violation:
    pair: Pair
    required: int
    actual: int


@dataclass(frozen=True)
class ColouringReport:
    valid: bool
    span: int
    holes: tuple[int, ...]
    violations: tuple[Violation, ...]


@lru_cache(maxsize=None)
def build_constraints(h: Hypergraph) -> ConstraintSet:
    level_h: set[Pair] = set()
    for e in h.edges:
        for i, u in enumerate(e):
            for v in e[i + 1:]:
                level_h.add(_pair(u, v))

    level_k: set[Pair] = set()
    edge_sets = [set(e) for e in h.edges]
    for i, e1 in enumerate(edge_sets):
        for e2 in edge_sets[i:]:
            inter = e1 & e2
            if not inter:
                continue
            for v in e1:
                for u in e2:
                    if u != v and inter - {u, v}:
                        level_k.add(_pair(u, v))
    return ConstraintSet(frozenset(level_h), frozenset(level_k))


def holes(f: Colouring) -> list[int]:
    """Colours c with c-1 and c+1 both used but c itself unused."""
    used = set(f.values())
    if not used:
        return []
    return [c for c in range(min(used) + 1, max(used))
            if c not in used and c - 1 in used and c + 1 in used]


def span(f: Colouring) -> int:
    values = list(f.values())
    return max(values) - min(values) if values else 0


def check(h: Hypergraph, hh: int, kk: int, f: Colouring) -> ColouringReport:
    """Validate a total colouring; every violated pair is reported."""
    if not hh > kk >= 0:
        raise ValueError(f"need h > k >= 0, got h={hh}, k={kk}")
    missing = [v for v in h.vertices if v not in f]
    if missing:
        raise ValueError(f"partial colouring, missing {missing}")
    extra = [v for v in f if v not in set(h.vertices)]
    if extra:
        raise ValueError(f"colouring mentions unknown vertices {extra}")
    if any(not isinstance(c, int) or c < 0 for c in f.values()):
        raise ValueError("colours must be non-negative integers")

    cs = build_constraints(h)
    violations = []
    for pair, required in sorted(cs.requirement(hh, kk).items()):
        actual = abs(f[pair[0]] - f[pair[1]])
        if actual < required:
            violations.append(Violation(pair, required, actual))
    restricted = {v: f[v] for v in h.vertices}
    return ColouringReport(
        valid=not violations,
        span=span(restricted),
        holes=tuple(holes(restricted)),
        violations=tuple(violations),
    )


def colouring_to_json_dict(f: Colouring) -> dict[str, int]:
    return {v: int(c) for v, c in sorted(f.items())}
