"""Generators for the hypergraph families used throughout, plus the three
transforms: s-section, line graph and Cartesian product.

Label conventions are deterministic so that downstream colouring schemes can
recover the generated structure:

* ``complete_uniform(n, r)``     vertices x1..xn (zero padded)
* ``star_hypergraph(r, c, m)``   centre u1..uc, leaves y1..y{m(r-c)} where
  edge l is {y_l, y_{l+m}, ...} plus the centre
* ``hyperpath(r, m)``            connectors v1..v{m-1}, privates w{j}_{i}
* ``cartesian_product``          labels "(x|y)", factor-1 index major
"""

from __future__ import annotations

import random
from itertools import combinations

from .core import Hypergraph, degree, is_connected, is_linear, validate


def _pad(i: int, n: int) -> str:
    return str(i).zfill(len(str(n)))


def complete_uniform(n: int, r: int) -> Hypergraph:
    """All r-subsets of an n-vertex set."""
    if not 2 <= r <= n:
        raise ValueError(f"complete_uniform requires 2 <= r <= n, got r={r}, n={n}")
    vs = [f"x{_pad(i, n)}" for i in range(1, n + 1)]
    return validate(vs, [list(c) for c in combinations(vs, r)])


def complete_hypergraph(n: int) -> Hypergraph:
    """Single edge containing all n vertices (the order-n complete hypergraph)."""
    return complete_uniform(n, n)


def complete_graph(n: int) -> Hypergraph:
    return complete_uniform(n, 2)


def path_graph(n: int) -> Hypergraph:
    if n < 2:
        raise ValueError("path_graph requires n >= 2")
    vs = [f"x{_pad(i, n)}" for i in range(1, n + 1)]
    return validate(vs, [[vs[i], vs[i + 1]] for i in range(n - 1)])


def cycle_graph(n: int) -> Hypergraph:
    if n < 3:
        raise ValueError("cycle_graph requires n >= 3")
    vs = [f"x{_pad(i, n)}" for i in range(1, n + 1)]
    return validate(vs, [[vs[i], vs[(i + 1) % n]] for i in range(n)])


def petersen_graph() -> Hypergraph:
    """3-regular, 10 vertices: outer 5-cycle, inner 5-star, spokes."""
    outer = [f"o{i}" for i in range(5)]
    inner = [f"i{i}" for i in range(5)]
    edges = [[outer[i], outer[(i + 1) % 5]] for i in range(5)]
    edges += [[inner[i], inner[(i + 2) % 5]] for i in range(5)]
    edges += [[outer[i], inner[i]] for i in range(5)]
    return validate(outer + inner, edges)


def cube_graph() -> Hypergraph:
    """3-dimensional hypercube Q3 (3-regular, 8 vertices)."""
    vs = [format(i, "03b") for i in range(8)]
    edges = [[u, v] for u, v in combinations(vs, 2)
             if sum(a != b for a, b in zip(u, v)) == 1]
    return validate(vs, edges)


def star_hypergraph(r: int, c: int, m: int) -> Hypergraph:
    """m edges of size r whose pairwise intersection is one fixed c-set."""
    if not 1 <= c < r:
        raise ValueError(f"star requires 1 <= c < r, got c={c}, r={r}")
    if m < 1:
        raise ValueError(f"star requires m >= 1, got m={m}")
    centre = [f"u{_pad(s, c)}" for s in range(1, c + 1)]
    leaves = [f"y{_pad(t, m * (r - c))}" for t in range(1, m * (r - c) + 1)]
    edges = []
    for l in range(1, m + 1):
        edges.append(centre + [leaves[(j - 1) * m + l - 1] for j in range(1, r - c + 1)])
    return validate(centre + leaves, edges)


def hyperpath(r: int, m: int) -> Hypergraph:
    """Chain of m r-edges; consecutive edges share one vertex, others disjoint."""
    if r < 2 or m < 1:
        raise ValueError(f"hyperpath requires r >= 2, m >= 1, got r={r}, m={m}")
    connectors = [f"v{_pad(i, m)}" for i in range(1, m)]
    vertices: list[str] = []
    edges: list[list[str]] = []
    for j in range(1, m + 1):
        edge: list[str] = []
        if j > 1:
            edge.append(connectors[j - 2])
        privates = r - len(edge) - (1 if j < m else 0)
        for i in range(1, privates + 1):
            w = f"w{_pad(j, m)}_{i}"
            vertices.append(w)
            edge.append(w)
        if j < m:
            edge.append(connectors[j - 1])
            vertices.append(connectors[j - 1])
        edges.append(edge)
    return validate(vertices, edges)


def hypertree_random(r: int, edge_count: int, max_degree: int, seed: int) -> Hypergraph:
    """Random r-uniform hypertree: repeatedly attach a fresh edge at a
    uniformly chosen existing vertex whose degree is below ``max_degree``.

    Deterministic per seed.  Every output passes ``is_hypertree``.
    """
    if r < 2 or edge_count < 1 or max_degree < 1:
        raise ValueError("hypertree requires r >= 2, edge_count >= 1, max_degree >= 1")
    rng = random.Random(seed)
    total = r + (edge_count - 1) * (r - 1)
    labels = [f"t{_pad(i, total)}" for i in range(1, total + 1)]
    fresh = iter(labels)
    deg: dict[str, int] = {}
    first = [next(fresh) for _ in range(r)]
    for v in first:
        deg[v] = 1
    edges = [first]
    for _ in range(edge_count - 1):
        candidates = sorted(v for v, d in deg.items() if d < max_degree)
        if not candidates:
            raise ValueError("infeasible parameters: no attachable vertex below max_degree")
        root = rng.choice(candidates)
        deg[root] += 1
        edge = [root]
        for _ in range(r - 1):
            v = next(fresh)
            deg[v] = 1
            edge.append(v)
        edges.append(edge)
    return validate(sorted(deg), edges)


def is_hypertree(h: Hypergraph) -> bool:
    """Connected, linear, and removing any edge e leaves exactly |e| components."""
    if not h.edges or not is_connected(h) or not is_linear(h):
        return False
    for skip in range(len(h.edges)):
        rest = Hypergraph(h.vertices, tuple(e for i, e in enumerate(h.edges) if i != skip))
        if _component_count(rest) != len(h.edges[skip]):
            return False
    return True


def _component_count(h: Hypergraph) -> int:
    from .core import adjacency

    nbr = adjacency(h)
    seen: set[str] = set()
    count = 0
    for v in h.vertices:
        if v in seen:
            continue
        count += 1
        frontier = [v]
        seen.add(v)
        while frontier:
            nxt = []
            for x in frontier:
                for w in nbr[x]:
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
    return count


def s_section(h: Hypergraph, s: int) -> Hypergraph:
    """Edges are all s-subsets of original edges, plus shorter original edges,
    de-duplicated with simplicity restored."""
    from .core import rank as _rank

    if not 2 <= s <= _rank(h):
        raise ValueError(f"s must satisfy 2 <= s <= rank, got s={s}, rank={_rank(h)}")
    candidates: set[tuple[str, ...]] = set()
    for e in h.edges:
        if len(e) < s:
            candidates.add(e)
        else:
            candidates.update(tuple(sorted(c)) for c in combinations(e, s))
    kept = [e for e in candidates
            if not any(f != e and set(f) < set(e) for f in candidates)]
    return validate(h.vertices, sorted(kept))


def line_graph(h: Hypergraph) -> Hypergraph:
    """One vertex per edge of ``h``; adjacency = non-empty edge intersection.

    Output vertex "e{i}" corresponds to ``h.edges[i-1]``.
    """
    isolated = [v for v in h.vertices if degree(h, v) == 0]
    if isolated:
        raise ValueError(f"line graph undefined with isolated vertices: {isolated}")
    names = [f"e{_pad(i, len(h.edges))}" for i in range(1, len(h.edges) + 1)]
    edges = []
    for i, j in combinations(range(len(h.edges)), 2):
        if set(h.edges[i]) & set(h.edges[j]):
            edges.append([names[i], names[j]])
    return validate(names, edges)


def product_label(x: str, y: str) -> str:
    return f"({x}|{y})"


def cartesian_product(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    """Vertices are pairs; each edge fixes one coordinate and runs an edge of
    the other factor, so |E| = |E1|·|V2| + |E2|·|V1|."""
    vertices = [product_label(x, y) for x in h1.vertices for y in h2.vertices]
    edges: list[list[str]] = []
    for e in h1.edges:
        for y in h2.vertices:
            edges.append([product_label(x, y) for x in e])
    for x in h1.vertices:
        for f in h2.edges:
            edges.append([product_label(x, y) for y in f])
    return validate(vertices, edges)
