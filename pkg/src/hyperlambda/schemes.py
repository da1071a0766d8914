"""Constructive L(h,k)-colouring schemes with independent validation.

Every scheme returns a SchemeOutcome whose colouring has been re-checked
through the constraint model; no closed-form span is trusted without a
validated witness.  Schemes that attempt a closed-form construction fall
back to exhaustive search at the claimed span when the construction does
not validate, and flag that on the outcome.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .constraints import Colouring, build_constraints, check
from .core import Hypergraph, degree, diameter, is_linear, is_uniform, max_degree, rank
from .families import (
    cartesian_product,
    complete_hypergraph,
    hyperpath,
    is_hypertree,
    line_graph,
    product_label,
    star_hypergraph,
)
from .solver import (
    find_colouring_at_span,
    find_gap_assignment,
    graph_colouring_exact,
    greedy_colouring,
    lambda_exact,
    strong_chromatic_exact,
    strong_independence_exact,
)
from .spectral import BoundReport


class SchemeError(RuntimeError):
    """A scheme's preconditions failed or its fallback search was exhausted."""


@dataclass
class SchemeOutcome:
    hypergraph: Hypergraph
    colouring: Colouring
    claimed_span: int
    validated: bool
    fallback_used: bool = False
    name: str = ""


def _gate(h: Hypergraph, hh: int, kk: int, colouring: Colouring, name: str,
          fallback_used: bool = False) -> SchemeOutcome:
    """Validate through the checker; refuse to report an invalid colouring."""
    report = check(h, hh, kk, colouring)
    if not report.valid:
        raise SchemeError(
            f"{name}: produced colouring fails validation "
            f"({len(report.violations)} violations, first {report.violations[0]})"
        )
    return SchemeOutcome(h, dict(colouring), report.span, True, fallback_used, name)


# --- lower-bound certificates -----------------------------------------------

def injectivity_lower_bound(h: Hypergraph) -> int | None:
    """If every pair of vertices is within distance two, every pair is
    mutually constrained, any valid colouring is injective, and the span is
    at least n - 1."""
    if h.n >= 2 and diameter(h) <= 2:
        return h.n - 1
    return None


def star_lower_bound(h: Hypergraph) -> int | None:
    """Largest span forced by a star sub-hypergraph rooted at one vertex.

    Applies at v whenever the edges through v pairwise intersect exactly in
    {v} and share one size; the rooted star is then a c=1 star hypergraph
    whose exact span is known.
    """
    best = None
    for v in h.vertices:
        edges = [set(e) for e in h.edges if v in e]
        if not edges:
            continue
        sizes = {len(e) for e in edges}
        if len(sizes) != 1:
            continue
        r = sizes.pop()
        if any(a & b != {v} for a, b in itertools.combinations(edges, 2)):
            continue
        d = len(edges)
        bound = d * (r - 1) + 1 if d >= 2 else 2 * (r - 1)
        best = bound if best is None else max(best, bound)
    return best


# --- partition / stable-set schemes ------------------------------------------

def scheme_strong_partition(h: Hypergraph, hh: int, kk: int,
                            partition: list[list[str]]) -> SchemeOutcome:
    """Colour class by class: within a class colours step by k, consecutive
    classes are separated by h.  Span is k(n-p) + (p-1)h for p classes."""
    if not hh > kk >= 0:
        raise ValueError(f"need h > k >= 0, got h={hh}, k={kk}")
    flat = [v for cl in partition for v in cl]
    if sorted(flat) != sorted(h.vertices) or len(flat) != len(set(flat)):
        raise SchemeError("strong-partition: classes must partition the vertex set")
    for cl in partition:
        for e in h.edges:
            if len(set(cl) & set(e)) > 1:
                raise SchemeError(
                    f"strong-partition: class {cl} meets edge {list(e)} more than once")

    colouring: Colouring = {}
    prefix = 0
    for i, cl in enumerate(partition, start=1):
        for j, v in enumerate(cl, start=1):
            if i == 1:
                colouring[v] = kk * (j - 1)
            else:
                colouring[v] = kk * prefix + kk * (j - i) + hh * (i - 1)
        prefix += len(cl)

    p = len(partition)
    expected = kk * (h.n - p) + (p - 1) * hh
    outcome = _gate(h, hh, kk, colouring, "strong-partition")
    if outcome.claimed_span != expected:
        raise SchemeError(
            f"strong-partition: span {outcome.claimed_span} != formula {expected}")
    return outcome


def scheme_stable_set(h: Hypergraph, hh: int, kk: int, stable: list[str]) -> SchemeOutcome:
    """Pack a strong stable set at steps of k, then chain the rest at steps
    of h; span is nh + |W|(k-h) - k."""
    if not hh > kk >= 0:
        raise ValueError(f"need h > k >= 0, got h={hh}, k={kk}")
    w = list(stable)
    if len(set(w)) != len(w) or not set(w) <= set(h.vertices):
        raise SchemeError("stable-set: W must be a set of vertices")
    for e in h.edges:
        if len(set(w) & set(e)) > 1:
            raise SchemeError(f"stable-set: W meets edge {list(e)} more than once")

    colouring: Colouring = {}
    for i, v in enumerate(w, start=1):
        colouring[v] = kk * (i - 1)
    rest = [v for v in h.vertices if v not in set(w)]
    for j, v in enumerate(rest, start=1):
        colouring[v] = kk * (len(w) - 1) + j * hh

    expected = h.n * hh + len(w) * (kk - hh) - kk
    outcome = _gate(h, hh, kk, colouring, "stable-set")
    if outcome.claimed_span != expected:
        raise SchemeError(f"stable-set: span {outcome.claimed_span} != formula {expected}")
    return outcome


def scheme_greedy(h: Hypergraph, hh: int = 2, kk: int = 1) -> SchemeOutcome:
    """First-fit in vertex order; at (2,1) the span is asserted against the
    (r-1)(degree+1)degree guarantee."""
    colouring = greedy_colouring(h, hh, kk)
    outcome = _gate(h, hh, kk, colouring, "greedy")
    if (hh, kk) == (2, 1) and h.edges:
        bound = (rank(h) - 1) * (max_degree(h) + 1) * max_degree(h)
        if outcome.claimed_span > bound:
            raise SchemeError(
                f"greedy: span {outcome.claimed_span} exceeds degree bound {bound}")
    return outcome


# --- star, hyperpath, hypertree ----------------------------------------------

def star_colouring(r: int, c: int, m: int) -> Colouring:
    """Centre coloured 0,2,..,2c-2; leaf y_t gets t + 2c - 1."""
    h = star_hypergraph(r, c, m)
    colouring = {f"u{str(s).zfill(len(str(c)))}": 2 * (s - 1) for s in range(1, c + 1)}
    width = len(str(m * (r - c)))
    for t in range(1, m * (r - c) + 1):
        colouring[f"y{str(t).zfill(width)}"] = t + 2 * c - 1
    assert set(colouring) == set(h.vertices)
    return colouring


def scheme_star(r: int, c: int, m: int) -> SchemeOutcome:
    """Exact span m(r-c) + 2c - 1 for the star hypergraph with m >= 2 edges."""
    if m < 2:
        raise SchemeError("star scheme needs at least two edges (m >= 2)")
    h = star_hypergraph(r, c, m)
    outcome = _gate(h, 2, 1, star_colouring(r, c, m), "star")
    expected = m * (r - c) + 2 * c - 1
    if outcome.claimed_span != expected:
        raise SchemeError(f"star: span {outcome.claimed_span} != formula {expected}")
    return outcome


def scheme_hyperpath(r: int, m: int) -> SchemeOutcome:
    """Spans 2r-2 (one edge), 2r-1 (two edges), 2r (three or more)."""
    if r < 3:
        raise SchemeError("hyperpath scheme needs r >= 3 (r = 2 is the graph path)")
    if m < 1:
        raise SchemeError("hyperpath scheme needs m >= 1")
    h = hyperpath(r, m)
    expected = 2 * r - 2 if m == 1 else 2 * r - 1 if m == 2 else 2 * r

    if m == 1:
        colouring = {v: 2 * i for i, v in enumerate(h.vertices)}
    elif m == 2:
        colouring = {"v1": 0}
        for i in range(1, r):
            colouring[f"w1_{i}"] = 2 * i
            colouring[f"w2_{i}"] = 2 * i + 1
    else:
        colouring = _hyperpath_chain_colouring(h, r, m)
        if colouring is None:
            colouring = find_colouring_at_span(h, 2, 1, 2 * r)
            if colouring is None:
                raise SchemeError(f"hyperpath: no span-{2 * r} colouring found")
            outcome = _gate(h, 2, 1, colouring, "hyperpath", fallback_used=True)
            if outcome.claimed_span != expected:
                raise SchemeError("hyperpath: fallback span differs from theorem value")
            return outcome

    outcome = _gate(h, 2, 1, colouring, "hyperpath")
    if outcome.claimed_span != expected:
        raise SchemeError(f"hyperpath: span {outcome.claimed_span} != theorem {expected}")
    return outcome


def _hyperpath_chain_colouring(h: Hypergraph, r: int, m: int) -> Colouring | None:
    """First two edges follow the fixed three-edge pattern; each further edge
    picks, with backtracking, the least colour set compatible with the
    previous edge from the 2r+1 available colours."""
    pad = len(str(m))
    conn = [f"v{str(i).zfill(pad)}" for i in range(1, m)]
    colouring: Colouring = {conn[0]: 0}
    for i in range(1, r):
        colouring[f"w{str(1).zfill(pad)}_{i}"] = 2 * i + 1
    for i in range(1, r - 1):
        colouring[f"w{str(2).zfill(pad)}_{i}"] = 2 * i
    colouring[conn[1]] = 2 * r

    palette = set(range(2 * r + 1))

    def edge_members(j: int) -> tuple[str, list[str], str | None]:
        """(incoming connector, private vertices, outgoing connector)"""
        privates = [v for v in h.edges[j - 1] if v.startswith("w")]
        outgoing = conn[j - 1] if j < m else None
        return conn[j - 2], sorted(privates), outgoing

    def extend(j: int) -> bool:
        if j > m:
            return True
        incoming, privates, outgoing = edge_members(j)
        prev_cols = {colouring[v] for v in h.edges[j - 2]}
        base = colouring[incoming]
        avail = sorted(palette - prev_cols - {base - 1, base, base + 1})
        need = len(privates) + (1 if outgoing else 0)
        for combo in itertools.combinations(avail, need):
            if any(combo[i + 1] - combo[i] < 2 for i in range(len(combo) - 1)):
                continue
            if any(abs(x - base) < 2 for x in combo):
                continue
            targets = ([outgoing] if outgoing else []) + privates
            # try each choice of the outgoing connector's colour
            choices = range(len(combo)) if outgoing else [0]
            for pick in choices:
                rest = [x for idx, x in enumerate(combo) if idx != pick] if outgoing else list(combo)
                if outgoing:
                    colouring[outgoing] = combo[pick]
                for v, col in zip(privates, rest):
                    colouring[v] = col
                if extend(j + 1):
                    return True
                for v in privates:
                    colouring.pop(v, None)
                if outgoing:
                    colouring.pop(outgoing, None)
        return False

    return colouring if extend(3) else None


def scheme_hypertree(t: Hypergraph) -> SchemeOutcome:
    """Root at a maximum-degree vertex, colour its star exactly, then extend
    breadth-first with the least feasible colour in {0..D(r-1)+2}; falls back
    to exact search on greedy failure."""
    if not is_hypertree(t):
        raise SchemeError("hypertree scheme requires a hypertree input")
    if not is_uniform(t):
        raise SchemeError("hypertree scheme requires a uniform hypertree")
    r = rank(t)
    dmax = max_degree(t)
    if len(t.edges) == 1:
        # degenerate single-edge tree: exact span is 2r-2
        colouring = {v: 2 * i for i, v in enumerate(t.edges[0])}
        for v in t.vertices:
            colouring.setdefault(v, 0)
        return _gate(t, 2, 1, colouring, "hypertree")

    top = dmax * (r - 1) + 2
    root = min((v for v in t.vertices if degree(t, v) == dmax))
    root_edges = [e for e in t.edges if root in e]

    def slot_order(edge: tuple[str, ...]) -> list[str]:
        return sorted((v for v in edge if v != root),
                      key=lambda v: (-degree(t, v), v))

    colouring: Colouring = {root: 0}
    queue: list[str] = [root]
    for l, e in enumerate(root_edges, start=1):
        for j, v in enumerate(slot_order(e), start=1):
            colouring[v] = (j - 1) * dmax + l + 1
            queue.append(v)

    req = build_constraints(t).requirement(2, 1)
    partners: dict[str, list[tuple[str, int]]] = {v: [] for v in t.vertices}
    for (a, b), rr in req.items():
        partners[a].append((b, rr))
        partners[b].append((a, rr))

    fallback = False
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for e in t.edges:
            if u not in e:
                continue
            for w in sorted((v for v in e if v not in colouring),
                            key=lambda v: (-degree(t, v), v)):
                chosen = None
                for cand in range(top + 1):
                    if all(abs(cand - colouring[x]) >= rr
                           for x, rr in partners[w] if x in colouring):
                        chosen = cand
                        break
                if chosen is None:
                    fallback = True
                    break
                colouring[w] = chosen
                queue.append(w)
            if fallback:
                break
        if fallback:
            break

    if fallback or len(colouring) < t.n:
        found = find_colouring_at_span(t, 2, 1, top - 1)
        if found is None:
            found = find_colouring_at_span(t, 2, 1, top)
        if found is None:
            raise SchemeError("hypertree: exact fallback found no colouring in range")
        outcome = _gate(t, 2, 1, found, "hypertree", fallback_used=True)
    else:
        outcome = _gate(t, 2, 1, colouring, "hypertree")
    if not dmax * (r - 1) + 1 <= outcome.claimed_span <= top:
        raise SchemeError(
            f"hypertree: span {outcome.claimed_span} outside "
            f"{{{dmax * (r - 1) + 1}, {top}}}")
    return outcome


# --- line-graph scheme --------------------------------------------------------

def scheme_from_line_colouring(h: Hypergraph) -> SchemeOutcome:
    """Lift a proper colouring of the line graph: edges in class j carry the
    colour block 2jr..2jr+2r-2, vertices inherit their minimum; colliding
    inheritances are repaired by permuting within-edge orders per class."""
    if not h.edges:
        raise SchemeError("line-colouring scheme needs at least one edge")
    if not is_uniform(h) or not is_linear(h):
        raise SchemeError("line-colouring scheme requires a linear uniform hypergraph")
    r = rank(h)
    lg = line_graph(h)
    chi, classes = graph_colouring_exact(lg)
    class_of: dict[int, int] = {}
    for j, cls in enumerate(classes):
        for name in cls:
            class_of[int(name[1:]) - 1] = j

    orders: dict[int, tuple[str, ...]] = {i: e for i, e in enumerate(h.edges)}
    bound = 2 * chi * r - 2

    def build(orderings: dict[int, tuple[str, ...]]) -> Colouring:
        col: Colouring = {}
        for ei in range(len(h.edges)):
            j = class_of[ei]
            for pos, v in enumerate(orderings[ei]):
                cand = 2 * j * r + 2 * pos
                col[v] = min(col.get(v, cand), cand)
        return col

    def violation_count(orderings: dict[int, tuple[str, ...]]) -> int:
        return len(check(h, 2, 1, build(orderings)).violations)

    current = violation_count(orders)
    rounds = 0
    while current > 0 and rounds < 20 * len(h.edges):
        rounds += 1
        report = check(h, 2, 1, build(orders))
        u, v = report.violations[0].pair
        improved = False
        for ei, e in enumerate(h.edges):
            if u not in e and v not in e:
                continue
            original = orders[ei]
            for perm in itertools.permutations(original):
                if perm == original:
                    continue
                orders[ei] = perm
                cnt = violation_count(orders)
                if cnt < current:
                    current = cnt
                    improved = True
                    break
                orders[ei] = original
            if improved:
                break
        if not improved:
            raise SchemeError("line-colouring: repair exhausted without a valid colouring")

    outcome = _gate(h, 2, 1, build(orders), "line-colouring",
                    fallback_used=rounds > 0)
    if outcome.claimed_span > bound:
        raise SchemeError(f"line-colouring: span {outcome.claimed_span} > bound {bound}")
    return outcome


# --- Cartesian products -------------------------------------------------------

def _product_complete_formula(m: int, n: int) -> list[list[int]] | None:
    """Piecewise closed form for the complete-by-complete product, offsets
    read cyclically modulo m; returns grid[i][j] (i over the n side) or None
    when the produced values are not a bijection onto 0..mn-1."""
    grid = [[-1] * m for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            d = (j - i) % m
            if d == 0:
                val = i - 1
            elif 1 <= d <= m - n + 1:
                val = d * n + i - 1
            elif d == m - 1:
                val = m * n + 2 * n - n * n + i - 2
            elif m - n + 1 <= d <= m - 2:
                k = m - d
                val = n * (m + 2 * k) - n * n - k * k - 1 + i
            else:
                k = d - (m - n)
                val = n * (m + 1) + k * (2 * n - k - 1) - n * n - 3 + i
            grid[i - 1][j - 1] = val
    values = [v for row in grid for v in row]
    if sorted(values) != list(range(m * n)):
        return None
    return grid


def _grid_sequential_placement(rows: int, cols: int) -> list[tuple[int, int]] | None:
    """Place colours 0..rows*cols-1 one cell each so consecutive colours never
    share a row or column.

    A shifted-diagonal layout (colour q*cols + i at row (q + i*a) mod rows,
    column i) works whenever a row step ``a`` exists with a != 0 and
    (cols-1)*a != 1 modulo rows; otherwise fall back to lexicographic
    backtracking, which also proves the 2x2 case infeasible.
    """
    total = rows * cols
    for a in range(1, rows):
        if a % rows != 0 and ((cols - 1) * a - 1) % rows != 0:
            return [((c // cols + (c % cols) * a) % rows, c % cols)
                    for c in range(total)]

    cells = [(x, y) for x in range(rows) for y in range(cols)]
    used = set()
    out: list[tuple[int, int]] = []

    def dfs() -> bool:
        if len(out) == total:
            return True
        prev = out[-1] if out else None
        for cell in cells:
            if cell in used:
                continue
            if prev is not None and (cell[0] == prev[0] or cell[1] == prev[1]):
                continue
            used.add(cell)
            out.append(cell)
            if dfs():
                return True
            out.pop()
            used.remove(cell)
        return False

    return out if dfs() else None


def scheme_product_complete(m: int, n: int) -> SchemeOutcome:
    """Span mn-1 colouring of the product of complete hypergraphs of orders
    m >= n >= 2: closed form first, then a sequential-placement search."""
    if not 2 <= n <= m:
        raise SchemeError("product-complete needs 2 <= n <= m")
    a = complete_hypergraph(m)
    b = complete_hypergraph(n)
    h = cartesian_product(a, b)

    fallback = False
    colouring: Colouring | None = None
    grid = _product_complete_formula(m, n)
    if grid is not None:
        cand = {
            product_label(a.vertices[j], b.vertices[i]): grid[i][j]
            for i in range(n) for j in range(m)
        }
        if check(h, 2, 1, cand).valid:
            colouring = cand
    if colouring is None:
        fallback = True
        placement = _grid_sequential_placement(m, n)
        if placement is None:
            raise SchemeError(
                f"product-complete: no span-{m * n - 1} colouring exists for "
                f"(m={m}, n={n}); the mn-1 value does not hold here")
        colouring = {}
        for colour, (row, col) in enumerate(placement):
            colouring[product_label(a.vertices[row], b.vertices[col])] = colour

    outcome = _gate(h, 2, 1, colouring, "product-complete", fallback_used=fallback)
    if outcome.claimed_span != m * n - 1:
        raise SchemeError(f"product-complete: span {outcome.claimed_span} != {m * n - 1}")
    return outcome


def _star_block_indices(r: int, c: int, m: int, n: int) -> dict[tuple[str, str], int] | None:
    """Index layout for the star-by-complete product: n batches of r values;
    batch q holds the c central cells on a diagonal and one monochromatic
    transversal per leaf level.  Returns cell -> index or None if no valid
    chain of transversal offsets exists."""
    cpad = len(str(c))
    lpad = len(str(m * (r - c)))
    centre = [f"u{str(s).zfill(cpad)}" for s in range(1, c + 1)]
    leaf = [f"y{str(t).zfill(lpad)}" for t in range(1, m * (r - c) + 1)]

    levels = r - c
    bad_first = {(c - l) % n for l in range(1, m + 1)}
    bad_last = {(2 - l) % n for l in range(1, m + 1)}

    chain: list[int] = []

    def pick(j: int) -> bool:
        if j == levels:
            return True
        for delta in range(n):
            if j == 0 and delta in bad_first:
                continue
            if j == levels - 1 and delta in bad_last:
                continue
            if chain and delta == chain[-1]:
                continue
            chain.append(delta)
            if pick(j + 1):
                return True
            chain.pop()
        return False

    if not pick(0):
        return None

    cols = complete_hypergraph(n).vertices
    indices: dict[tuple[str, str], int] = {}
    for q in range(n):
        for s in range(c):
            indices[(centre[s], cols[(q + s) % n])] = q * r + s
        for j in range(1, levels + 1):
            offset = (q + chain[j - 1]) % n
            for l in range(1, m + 1):
                row = leaf[(j - 1) * m + l - 1]
                indices[(row, cols[(offset + l - 1) % n])] = q * r + c + j - 1
    return indices


def scheme_product_star_complete(r: int, c: int, m: int, n: int) -> SchemeOutcome:
    """Span nr-1 colouring of the star-by-complete product (m < n)."""
    outcome = _product_star_scaled(r, c, m, n, 2, 1)
    if outcome.claimed_span != n * r - 1:
        raise SchemeError(
            f"product-star-complete: span {outcome.claimed_span} != {n * r - 1}")
    return outcome


def scheme_product_star_complete_hk(r: int, c: int, m: int, n: int,
                                    hh: int, kk: int) -> SchemeOutcome:
    """General (h,k) star-by-complete product: span knr-k when kr >= h,
    else k(r-1) + h(n-1)."""
    if kk < 1 or hh <= kk:
        raise SchemeError("product-star-complete-hk needs h > k >= 1")
    outcome = _product_star_scaled(r, c, m, n, hh, kk)
    expected = (kk * n * r - kk if kk * r >= hh
                else kk * (r - 1) + hh * (n - 1))
    if outcome.claimed_span != expected:
        raise SchemeError(
            f"product-star-complete-hk: span {outcome.claimed_span} != "
            f"formula {expected}")
    return outcome


def _product_star_scaled(r: int, c: int, m: int, n: int,
                         hh: int, kk: int) -> SchemeOutcome:
    if not (1 <= c < r and m >= 1):
        raise SchemeError("invalid star parameters")
    if not m < n:
        raise SchemeError("product-star-complete needs m < n")
    star = star_hypergraph(r, c, m)
    h = cartesian_product(star, complete_hypergraph(n))
    name = "product-star-complete" if (hh, kk) == (2, 1) else "product-star-complete-hk"

    if kk * r >= hh:
        gap = -(-hh // kk)  # ceil(h/k): index separation for co-edge pairs
        indices: dict[str, int] | None = None
        fallback = False
        if gap <= 2:
            if m == 1:
                placement = _grid_sequential_placement(r, n)
                if placement is not None:
                    indices = {
                        product_label(star.vertices[row], complete_hypergraph(n).vertices[col]): col_i
                        for col_i, (row, col) in enumerate(placement)
                    }
            else:
                cells = _star_block_indices(r, c, m, n)
                if cells is not None:
                    indices = {product_label(a, b): v for (a, b), v in cells.items()}
        if indices is not None:
            cand = {v: kk * indices[v] for v in h.vertices}
            if check(h, hh, kk, cand).valid:
                return _gate(h, hh, kk, cand, name)
        # backtracking fallback in index space: co-edge pairs gap apart
        found = find_gap_assignment(h, gap, n * r - 1)
        if found is not None:
            cand = {v: kk * found[v] for v in h.vertices}
            return _gate(h, hh, kk, cand, name, fallback_used=True)
        if kk > 1:
            # index multiples of k are a restriction; exhaust the full space
            full = find_colouring_at_span(h, hh, kk, kk * n * r - kk)
            if full is not None:
                return _gate(h, hh, kk, full, name, fallback_used=True)
        raise SchemeError(
            f"{name}: exhaustive search found no colouring at span "
            f"{kk * n * r - kk} for (r={r}, c={c}, m={m}, n={n}, h={hh}, k={kk})")

    target = kk * (r - 1) + hh * (n - 1)
    found = find_colouring_at_span(h, hh, kk, target)
    if found is None:
        raise SchemeError(f"{name}: no colouring at span {target}")
    return _gate(h, hh, kk, found, name, fallback_used=True)


# --- upper-bound suite --------------------------------------------------------

def bound_suite(h: Hypergraph, hh: int, kk: int,
                lam: int | None = None) -> list[BoundReport]:
    """Evaluate every applicable closed-form upper bound against the exact or
    witnessed span."""
    if lam is None:
        res = lambda_exact(h, hh, kk)
        lam = res.optimum if res.optimum is not None else res.upper_bound
    n = h.n
    r = rank(h)
    dmax = max_degree(h)
    reports: list[BoundReport] = []

    def add(name: str, rhs: float, inputs: dict) -> None:
        reports.append(BoundReport(name, float(lam), float(rhs), "<=",
                                   lam <= rhs, inputs))

    kprime = strong_chromatic_exact(h)
    add("strong-partition", kk * (n - kprime) + (kprime - 1) * hh,
        {"h": hh, "k": kk, "strong_chromatic": kprime})

    alpha = strong_independence_exact(h)
    add("stable-set", n * hh + alpha * (kk - hh) - kk,
        {"h": hh, "k": kk, "strong_independence": alpha})

    if (hh, kk) == (2, 1) and h.edges:
        add("greedy-degree", (r - 1) * (dmax + 1) * dmax, {"rank": r, "max_degree": dmax})

    if kk == 1 and hh >= 2 and h.edges:
        two_section_deg = max(
            len({u for e in h.edges if v in e for u in e}) - 1 for v in h.vertices)
        # degree-1 inputs make the quadratic negative; empirically safe from 2 up
        if two_section_deg >= 2:
            add("max-degree-h1",
                (r - 1) * dmax * (dmax * r + hh - dmax - 1) - 2,
                {"h": hh, "rank": r, "max_degree": dmax})

    if (hh, kk) == (2, 1) and h.edges and is_uniform(h) and diameter(h) <= 2:
        add("diameter-two", ((r - 1) * dmax) ** 2, {"rank": r, "max_degree": dmax})

    if ((hh, kk) == (2, 1) and h.edges and is_uniform(h) and is_linear(h)
            and all(degree(h, v) > 0 for v in h.vertices)):
        chi = graph_colouring_exact(line_graph(h))[0]
        add("line-colouring", 2 * chi * r - 2, {"rank": r, "line_chromatic": chi})

    return reports
