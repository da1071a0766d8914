"""Adjacency spectra, spectral gaps, exact expansion constants, and numeric
checks of the inequalities tying the L(2,1) span of a regular graph to them.

The expansion constant is computed as an exact fraction (integer boundary
count over integer set size) so comparisons are free of floating artifacts;
eigenvalues come from a dense symmetric solver with a residual check.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import Hypergraph, degree, is_connected, rank

#: slack for non-strict comparisons; strict inequalities must clear it
COMPARISON_TOLERANCE = 1e-6


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]  # descending
    tolerance: float


@dataclass(frozen=True)
class BoundReport:
    name: str
    lhs: float
    rhs: float
    relation: str  # "<" or "<="
    holds: bool
    inputs: dict

    def __str__(self) -> str:
        mark = "holds" if self.holds else "FAILS"
        return f"{self.name}: {self.lhs:.6g} {self.relation} {self.rhs:.6g} [{mark}]"


def adjacency_matrix(h: Hypergraph) -> np.ndarray:
    """Symmetric 0/1 co-edge matrix with zero diagonal, in vertex order."""
    index = {v: i for i, v in enumerate(h.vertices)}
    a = np.zeros((h.n, h.n), dtype=float)
    for e in h.edges:
        for i, u in enumerate(e):
            for v in e[i + 1:]:
                a[index[u], index[v]] = 1.0
                a[index[v], index[u]] = 1.0
    return a


def spectrum(h: Hypergraph, tol: float = 1e-9) -> Spectrum:
    """Adjacency eigenvalues sorted descending; each eigenpair satisfies
    ||Av - mu v|| <= tol * ||A||."""
    a = adjacency_matrix(h)
    values, vectors = np.linalg.eigh(a)
    norm = max(abs(values[0]), abs(values[-1]), 1.0) if len(values) else 1.0
    residual = np.linalg.norm(a @ vectors - vectors * values, axis=0)
    if np.any(residual > tol * norm):
        raise ArithmeticError(
            f"eigensolver residual {residual.max():.3e} above {tol:.1e} * ||A||")
    return Spectrum(tuple(float(x) for x in values[::-1]), tol)


def spectral_gap(h: Hypergraph, tol: float = 1e-9) -> float:
    """mu0 - mu1 of the adjacency spectrum."""
    if h.n < 2:
        raise ValueError("spectral gap needs at least two vertices")
    mu = spectrum(h, tol).eigenvalues
    return mu[0] - mu[1]


def regular_degree(h: Hypergraph) -> int | None:
    """Common degree when every vertex lies in the same number of edges."""
    degrees = {degree(h, v) for v in h.vertices}
    return degrees.pop() if len(degrees) == 1 else None


def _boundary_scan(masks: list[int], n: int, start: int, stop: int) -> tuple[int, int]:
    """Min (boundary, size) by cross-ratio over subset indices [start, stop)."""
    half = n // 2
    best = (1, 0)  # +infinity as a ratio: denominator 0 compares above all
    best_b, best_s = None, None
    for sub in range(start, stop):
        size = sub.bit_count()
        if size == 0 or size > half:
            continue
        boundary = 0
        comp = ~sub
        rest = sub
        while rest:
            low = rest & -rest
            rest ^= low
            boundary += (masks[low.bit_length() - 1] & comp).bit_count()
        if best_b is None or boundary * best_s < best_b * size:
            best_b, best_s = boundary, size
    return (best_b, best_s) if best_b is not None else (-1, -1)


def expansion_constant_exact(g: Hypergraph, limit: int = 24, jobs: int = 1) -> Fraction:
    """Exact isoperimetric constant min |boundary(F)| / |F| over non-empty
    vertex sets F with |F| <= n/2, by full subset enumeration."""
    if any(len(e) != 2 for e in g.edges):
        raise ValueError("expansion constant is defined here for 2-uniform inputs")
    if not is_connected(g):
        raise ValueError("expansion constant needs a connected graph")
    n = g.n
    if n > limit:
        raise ValueError(f"subset enumeration limited to {limit} vertices, got {n}")
    index = {v: i for i, v in enumerate(g.vertices)}
    masks = [0] * n
    for u, v in g.edges:
        masks[index[u]] |= 1 << index[v]
        masks[index[v]] |= 1 << index[u]

    total = 1 << n
    if jobs <= 1 or total < 1 << 12:
        b, s = _boundary_scan(masks, n, 1, total)
    else:
        chunk = total // jobs + 1
        spans = [(masks, n, max(1, i * chunk), min(total, (i + 1) * chunk))
                 for i in range(jobs) if i * chunk < total]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_star, spans))
        b, s = None, None
        for rb, rs in results:
            if rs <= 0:
                continue
            if b is None or rb * s < b * rs:
                b, s = rb, rs
    return Fraction(b, s)


def _scan_star(args: tuple[list[int], int, int, int]) -> tuple[int, int]:
    return _boundary_scan(*args)


def check_cheeger(g: Hypergraph, tol: float = 1e-9) -> list[BoundReport]:
    """(k - mu1)/2 <= h(G) <= sqrt(2k(k - mu1)) for a connected k-regular graph."""
    k = regular_degree(g)
    if k is None:
        raise ValueError("Cheeger check requires a regular graph")
    mu = spectrum(g, tol).eigenvalues
    hval = float(expansion_constant_exact(g))
    gap = k - mu[1]
    inputs = {"k": k, "mu1": mu[1], "expansion": hval, "n": g.n}
    return [
        BoundReport("cheeger-lower", gap / 2, hval, "<=",
                    gap / 2 <= hval + COMPARISON_TOLERANCE, inputs),
        BoundReport("cheeger-upper", hval, math.sqrt(2 * k * gap), "<=",
                    hval <= math.sqrt(2 * k * gap) + COMPARISON_TOLERANCE, inputs),
    ]


def check_lambda_expansion(g: Hypergraph, lam: int, tol: float = 1e-9) -> BoundReport:
    """h(G) < k * lambda * sqrt(n / floor(n/2)) for a connected k-regular graph."""
    k = regular_degree(g)
    if k is None:
        raise ValueError("expansion/span check requires a regular graph")
    hval = float(expansion_constant_exact(g))
    rhs = k * lam * math.sqrt(g.n / (g.n // 2))
    return BoundReport("span-expansion", hval, rhs, "<",
                       hval < rhs - COMPARISON_TOLERANCE,
                       {"k": k, "lambda": lam, "n": g.n})


def check_gap_corollary(g: Hypergraph, lam: int, tol: float = 1e-9) -> BoundReport:
    """k - mu1 < 2k * lambda * sqrt(n / floor(n/2)) for k-regular graphs."""
    k = regular_degree(g)
    if k is None:
        raise ValueError("gap corollary requires a regular graph")
    mu = spectrum(g, tol).eigenvalues
    rhs = 2 * k * lam * math.sqrt(g.n / (g.n // 2))
    return BoundReport("gap-corollary", k - mu[1], rhs, "<",
                       k - mu[1] < rhs - COMPARISON_TOLERANCE,
                       {"k": k, "lambda": lam, "n": g.n})


def check_gap_corollary_hypergraph(h: Hypergraph, lam: int, tol: float = 1e-9) -> BoundReport:
    """k - mu1 < 2k(r-1) * lambda * sqrt(n / floor(n/2)) for a connected
    k-regular r-uniform hypergraph (spectrum taken from its 2-section)."""
    k = regular_degree(h)
    if k is None:
        raise ValueError("hypergraph gap corollary requires a degree-regular input")
    sizes = {len(e) for e in h.edges}
    if len(sizes) != 1:
        raise ValueError("hypergraph gap corollary requires a uniform input")
    r = rank(h)
    mu = spectrum(h, tol).eigenvalues
    rhs = 2 * k * (r - 1) * lam * math.sqrt(h.n / (h.n // 2))
    return BoundReport("gap-corollary-hypergraph", k - mu[1], rhs, "<",
                       k - mu[1] < rhs - COMPARISON_TOLERANCE,
                       {"k": k, "r": r, "lambda": lam, "n": h.n})
