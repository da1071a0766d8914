"""Exact computation of L(h,k) spans, strong chromatic / independence numbers
and graph chromatic numbers on desk-scale instances.

The span solver is a decision-problem branch and bound: candidate spans are
tested by decreasing from a witnessed upper bound until a span is proved
infeasible by exhausted search.  Vertices are branched in fixed order
(descending degree, label tiebreak), colours ascending, and the first vertex
is anchored to colours <= ceil(span/2) (the reflection c -> span - c maps
valid colourings to valid colourings).  Forward checking maintains one
bitmask domain per vertex.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .constraints import Colouring, Pair, build_constraints, span as span_of
from .core import Hypergraph, degree
from .families import s_section


@dataclass(frozen=True)
class SolveBudget:
    max_span: int | None = None
    node_limit: int | None = None
    time_limit_seconds: float | None = None


@dataclass
class SolveResult:
    optimum: int | None            # None = budget exhausted before certification
    lower_bound: int               # certified by exhausted search
    upper_bound: int               # witnessed
    witness: Colouring | None
    nodes_explored: int
    method: str = "exact"

    @property
    def exhausted(self) -> bool:
        return self.optimum is None


class BudgetExhausted(Exception):
    pass


class _BudgetState:
    __slots__ = ("nodes", "node_limit", "deadline")

    def __init__(self, budget: SolveBudget | None):
        self.nodes = 0
        self.node_limit = budget.node_limit if budget else None
        limit = budget.time_limit_seconds if budget else None
        self.deadline = time.monotonic() + limit if limit else None

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExhausted("node limit")
        if self.deadline is not None and self.nodes % 4096 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExhausted("time limit")


def solve_order(h: Hypergraph) -> list[str]:
    """Fixed branching order: descending degree, then label."""
    return sorted(h.vertices, key=lambda v: (-degree(h, v), v))


def _block_table(req: int, top: int) -> list[int]:
    """block[c] = bitmask of colours within distance < req of c."""
    window = (1 << (2 * req - 1)) - 1 if req > 0 else 0
    table = []
    for c in range(top + 1):
        mask = window << max(0, c - req + 1) >> max(0, req - 1 - c)
        table.append(mask & ((1 << (top + 1)) - 1))
    return table


def search_assignment(
    order: list[str],
    requirement: dict[Pair, int],
    span: int,
    state: _BudgetState,
    anchor_first: bool = True,
) -> Colouring | None:
    """Find a colouring of ``order`` with colours in {0..span} meeting every
    pairwise gap requirement, or prove none exists.  Deterministic."""
    n = len(order)
    if n == 0:
        return {}
    if span < 0:
        return None
    index = {v: i for i, v in enumerate(order)}

    future: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    all_pairs_separated = True
    seen_pairs = 0
    for (u, v), req in requirement.items():
        if req <= 0:
            continue
        i, j = index[u], index[v]
        if i > j:
            i, j = j, i
        future[i].append((j, req))
        seen_pairs += 1
    if seen_pairs < n * (n - 1) // 2:
        all_pairs_separated = False
    # every pair mutually separated => colours all-distinct => pigeonhole
    if all_pairs_separated and span + 1 < n:
        state.tick()
        return None

    full = (1 << (span + 1)) - 1
    tables: dict[int, list[int]] = {}
    for reqs in future:
        for _, r in reqs:
            if r not in tables:
                tables[r] = _block_table(r, span)

    domains = [full] * n
    if anchor_first:
        domains[0] = (1 << (span // 2 + span % 2 + 1)) - 1
    assignment = [0] * n

    def dfs(i: int) -> bool:
        if i == n:
            return True
        dom = domains[i]
        while dom:
            low = dom & -dom
            dom ^= low
            c = low.bit_length() - 1
            state.tick()
            undo: list[tuple[int, int]] = []
            dead = False
            for j, r in future[i]:
                old = domains[j]
                new = old & ~tables[r][c]
                if new != old:
                    undo.append((j, old))
                    domains[j] = new
                    if new == 0:
                        dead = True
                        break
            if not dead:
                assignment[i] = c
                if dfs(i + 1):
                    return True
            for j, old in undo:
                domains[j] = old
        return False

    if dfs(0):
        return {order[i]: assignment[i] for i in range(n)}
    return None


def greedy_colouring(h: Hypergraph, hh: int, kk: int, order: list[str] | None = None) -> Colouring:
    """First-fit: each vertex takes the least colour compatible with every
    already-coloured constrained partner."""
    if not hh > kk >= 0:
        raise ValueError(f"need h > k >= 0, got h={hh}, k={kk}")
    order = list(order) if order is not None else list(h.vertices)
    req = build_constraints(h).requirement(hh, kk)
    partners: dict[str, list[tuple[str, int]]] = {v: [] for v in order}
    for (u, v), r in req.items():
        partners[u].append((v, r))
        partners[v].append((u, r))
    colouring: Colouring = {}
    for v in order:
        c = 0
        while True:
            if all(abs(c - colouring[u]) >= r for u, r in partners[v] if u in colouring):
                break
            c += 1
        colouring[v] = c
    return colouring


def lambda_exact(
    h: Hypergraph,
    hh: int,
    kk: int,
    budget: SolveBudget | None = None,
) -> SolveResult:
    """Minimum span of an L(h,k)-colouring, certified by a failed exhaustive
    search one below the optimum.  Returns bracketing bounds on exhaustion."""
    if not hh > kk >= 0:
        raise ValueError(f"need h > k >= 0, got h={hh}, k={kk}")
    order = solve_order(h)
    requirement = build_constraints(h).requirement(hh, kk)
    state = _BudgetState(budget)

    witness = greedy_colouring(h, hh, kk, order=order)
    start = span_of(witness) - 1
    if budget and budget.max_span is not None:
        start = min(start, budget.max_span)
    lower = 0

    try:
        s = start
        while s >= 0:
            found = search_assignment(order, requirement, s, state)
            if found is None:
                lower = s + 1
                break
            witness = found
            s = min(s - 1, span_of(found) - 1)
        ws = span_of(witness)
        if ws == lower:
            return SolveResult(ws, ws, ws, witness, state.nodes)
        # max_span cut the scan before the failing search certified optimality
        return SolveResult(None, lower, ws, witness, state.nodes)
    except BudgetExhausted:
        return SolveResult(None, lower, span_of(witness), witness, state.nodes)


def find_colouring_at_span(
    h: Hypergraph,
    hh: int,
    kk: int,
    target_span: int,
    budget: SolveBudget | None = None,
) -> Colouring | None:
    """Decision form: a valid colouring with colours in {0..target_span}, or
    None when exhaustive search rules one out."""
    order = solve_order(h)
    requirement = build_constraints(h).requirement(hh, kk)
    return search_assignment(order, requirement, target_span, _BudgetState(budget))


def find_gap_assignment(
    h: Hypergraph,
    gap: int,
    target_span: int,
    budget: SolveBudget | None = None,
) -> Colouring | None:
    """Integer assignment with co-edge pairs at least ``gap`` apart and every
    other constrained pair distinct, within {0..target_span}.  Used by product
    schemes that scale an index layout by k."""
    if gap < 2:
        raise ValueError("gap must be at least 2")
    order = solve_order(h)
    requirement = build_constraints(h).requirement(gap, 1)
    return search_assignment(order, requirement, target_span, _BudgetState(budget))


# --- strong chromatic number and strong independence ------------------------

def _two_section_masks(h: Hypergraph) -> tuple[list[str], list[int]]:
    """Co-edge adjacency as bitmasks over a degree-descending vertex order."""
    order = solve_order(h)
    index = {v: i for i, v in enumerate(order)}
    masks = [0] * len(order)
    for e in h.edges:
        for a in e:
            for b in e:
                if a != b:
                    masks[index[a]] |= 1 << index[b]
    return order, masks


def graph_colouring_exact(g: Hypergraph) -> tuple[int, list[list[str]]]:
    """Exact chromatic number of the co-edge graph with a witness partition.

    For 2-uniform inputs this is the usual graph chromatic number.
    """
    order, masks = _two_section_masks(g)
    n = len(order)
    if n == 0:
        return 0, []
    if not any(masks):
        return 1, [list(order)]

    colours = [-1] * n

    def feasible(k: int) -> bool:
        def dfs(i: int, used: int) -> bool:
            if i == n:
                return True
            # may reuse any open class or open exactly one new one
            for c in range(min(used + 1, k)):
                if all(colours[j] != c for j in range(i) if masks[i] >> j & 1):
                    colours[i] = c
                    if dfs(i + 1, max(used, c + 1)):
                        return True
                    colours[i] = -1
            return False

        return dfs(0, 0)

    k = 1
    while not feasible(k):
        k += 1
    classes: list[list[str]] = [[] for _ in range(k)]
    for i, v in enumerate(order):
        classes[colours[i]].append(v)
    return k, [sorted(c) for c in classes if c]


def chromatic_number_graph(g: Hypergraph) -> int:
    """Exact chromatic number; input must be 2-uniform."""
    if any(len(e) != 2 for e in g.edges):
        raise ValueError("chromatic_number_graph expects a 2-uniform hypergraph")
    return graph_colouring_exact(g)[0]


def strong_chromatic_exact(h: Hypergraph) -> int:
    """Least number of classes each meeting every edge at most once; equals
    the chromatic number of the 2-section."""
    return graph_colouring_exact(h)[0]


def strong_partition_exact(h: Hypergraph) -> list[list[str]]:
    """An optimal strong partition (classes meet every edge at most once)."""
    return graph_colouring_exact(h)[1]


def strong_independence_exact(h: Hypergraph) -> int:
    return len(strong_stable_set_exact(h))


def strong_stable_set_exact(h: Hypergraph) -> list[str]:
    """A maximum set meeting every edge at most once (max independent set of
    the 2-section), by branch and bound."""
    order, masks = _two_section_masks(h)
    n = len(order)
    if n == 0:
        return []
    best_mask = 0
    best_size = 0

    def bb(candidates: int, chosen: int, size: int) -> None:
        nonlocal best_mask, best_size
        if size + bin(candidates).count("1") <= best_size:
            return
        if candidates == 0:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        # branch on the candidate with most candidate-neighbours
        pick, pick_deg = -1, -1
        rest = candidates
        while rest:
            low = rest & -rest
            rest ^= low
            i = low.bit_length() - 1
            d = bin(masks[i] & candidates).count("1")
            if d > pick_deg:
                pick, pick_deg = i, d
        bit = 1 << pick
        bb(candidates & ~bit & ~masks[pick], chosen | bit, size + 1)
        bb(candidates & ~bit, chosen, size)

    bb((1 << n) - 1, 0, 0)
    return sorted(order[i] for i in range(n) if best_mask >> i & 1)
