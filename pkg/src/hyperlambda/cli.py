"""Command-line surface: generate families, validate inputs, compute spans,
verify bound inequalities, and run reproduction campaigns.

Exit codes: 0 success / certified, 1 input error, 2 budget exhausted,
3 a guaranteed inequality failed (implementation bug signal).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import combinations
from pathlib import Path

from . import campaigns as camp
from .constraints import check, colouring_to_json_dict
from .core import (
    Hypergraph,
    InvalidHypergraphError,
    diagnose,
    dump,
    is_uniform,
    load,
    rank,
    structure_summary,
)
from .families import (
    cartesian_product,
    complete_hypergraph,
    complete_uniform,
    cube_graph,
    cycle_graph,
    hyperpath,
    hypertree_random,
    is_hypertree,
    path_graph,
    petersen_graph,
    star_hypergraph,
)
from .report import (
    BOUND_HEADER,
    bound_report_row,
    render_figure,
    skipped_bound_row,
    write_csv,
)
from .schemes import (
    SchemeError,
    SchemeOutcome,
    bound_suite,
    scheme_from_line_colouring,
    scheme_greedy,
    scheme_hypertree,
    scheme_product_complete,
    scheme_product_star_complete,
    scheme_stable_set,
    scheme_star,
    scheme_strong_partition,
)
from .solver import (
    SolveBudget,
    lambda_exact,
    strong_partition_exact,
    strong_stable_set_exact,
)
from .spectral import (
    check_cheeger,
    check_gap_corollary,
    check_gap_corollary_hypergraph,
    check_lambda_expansion,
    regular_degree,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_VIOLATION = 3


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("HYPERLAMBDA_JOBS", "1")))
    except ValueError:
        return 1


# --- family recognition (scheme/family mismatch detection) --------------------

def _split_product_label(v: str) -> tuple[str, str] | None:
    if v.startswith("(") and v.endswith(")") and "|" in v:
        left, right = v[1:-1].split("|", 1)
        return left, right
    return None


def recognize_star(h: Hypergraph) -> tuple[int, int, int, dict[str, str]] | None:
    """(r, c, m, generated-label -> input-label) when the input is a star
    hypergraph with at least two edges."""
    if len(h.edges) < 2 or not is_uniform(h):
        return None
    centre = set(h.edges[0])
    for e in h.edges[1:]:
        centre &= set(e)
    if not centre:
        return None
    for a, b in combinations(h.edges, 2):
        if set(a) & set(b) != centre:
            return None
    covered = set()
    for e in h.edges:
        covered |= set(e)
    if covered != set(h.vertices):
        return None
    r, c, m = rank(h), len(centre), len(h.edges)
    if not 1 <= c < r:
        return None
    mapping = {}
    for i, u in enumerate(sorted(centre), start=1):
        mapping[f"u{str(i).zfill(len(str(c)))}"] = u
    width = len(str(m * (r - c)))
    for l, e in enumerate(h.edges, start=1):
        for j, v in enumerate(sorted(set(e) - centre), start=1):
            mapping[f"y{str((j - 1) * m + l).zfill(width)}"] = v
    return r, c, m, mapping


def recognize_hyperpath(h: Hypergraph) -> tuple[int, int, dict[str, str]] | None:
    """(r, m, generated-label -> input-label) when the input is a hyperpath."""
    if not h.edges or not is_uniform(h) or rank(h) < 2:
        return None
    covered = set()
    for e in h.edges:
        covered |= set(e)
    if covered != set(h.vertices):
        return None
    m = len(h.edges)
    neighbours: dict[int, list[int]] = {i: [] for i in range(m)}
    for i, j in combinations(range(m), 2):
        shared = set(h.edges[i]) & set(h.edges[j])
        if len(shared) > 1:
            return None
        if shared:
            neighbours[i].append(j)
            neighbours[j].append(i)
    if m == 1:
        order = [0]
    else:
        ends = [i for i, ns in neighbours.items() if len(ns) == 1]
        if len(ends) != 2 or any(len(ns) > 2 for ns in neighbours.values()):
            return None
        order = [min(ends)]
        while len(order) < m:
            nxt = [j for j in neighbours[order[-1]] if j not in order]
            if not nxt:
                return None
            order.append(nxt[0])
        for a, b in combinations(range(m), 2):
            shared = set(h.edges[order[a]]) & set(h.edges[order[b]])
            if (b == a + 1) != bool(shared):
                return None
    r = rank(h)
    pad = len(str(m))
    mapping: dict[str, str] = {}
    connectors: list[str] = []
    for idx in range(m - 1):
        shared = set(h.edges[order[idx]]) & set(h.edges[order[idx + 1]])
        v = shared.pop()
        connectors.append(v)
        mapping[f"v{str(idx + 1).zfill(pad)}"] = v
    for idx in range(m):
        conn = set(connectors)
        privates = sorted(set(h.edges[order[idx]]) - conn)
        for i, v in enumerate(privates, start=1):
            mapping[f"w{str(idx + 1).zfill(pad)}_{i}"] = v
    return r, m, mapping


def _parse_grid(h: Hypergraph) -> tuple[list[str], list[str], dict] | None:
    pairs = [_split_product_label(v) for v in h.vertices]
    if any(p is None for p in pairs):
        return None
    rows = sorted({a for a, _ in pairs})
    cols = sorted({b for _, b in pairs})
    if len(rows) * len(cols) != h.n:
        return None
    label = {(a, b): f"({a}|{b})" for a, b in pairs}
    return rows, cols, label


def recognize_product_complete(h: Hypergraph) -> tuple[int, int, dict[str, str]] | None:
    """(m, n, mapping) when the input is the product of two single-edge
    complete hypergraphs arranged on "(x|y)" labels."""
    parsed = _parse_grid(h)
    if parsed is None:
        return None
    rows, cols, label = parsed
    expected = {frozenset(label[(a, b)] for b in cols) for a in rows}
    expected |= {frozenset(label[(a, b)] for a in rows) for b in cols}
    if {frozenset(e) for e in h.edges} != expected:
        return None
    if len(rows) >= len(cols):
        m, n, transpose = len(rows), len(cols), False
    else:
        m, n, transpose = len(cols), len(rows), True
    big = complete_hypergraph(m).vertices
    small = complete_hypergraph(n).vertices
    mapping = {}
    for i, a in enumerate(rows):
        for j, b in enumerate(cols):
            if transpose:
                mapping[f"({big[j]}|{small[i]})"] = label[(a, b)]
            else:
                mapping[f"({big[i]}|{small[j]})"] = label[(a, b)]
    return m, n, mapping


def recognize_product_star_complete(
        h: Hypergraph) -> tuple[int, int, int, int, dict[str, str]] | None:
    """(r, c, m, n, mapping) when the input is a star-by-complete product."""
    parsed = _parse_grid(h)
    if parsed is None:
        return None
    rows, cols, label = parsed
    row_edges = {frozenset(label[(a, b)] for b in cols) for a in rows}
    col_groups: dict[str, set[frozenset[str]]] = {b: set() for b in cols}
    for e in h.edges:
        fe = frozenset(e)
        if fe in row_edges:
            row_edges.discard(fe)
            continue
        parts = [_split_product_label(v) for v in e]
        rights = {b for _, b in parts}
        if len(rights) != 1:
            return None
        col_groups[rights.pop()].add(frozenset(a for a, _ in parts))
    if row_edges:  # some full row missing from the edge set
        return None
    star_edge_sets = set(map(frozenset, col_groups.values()))
    if len(star_edge_sets) != 1:
        return None
    star_edges = sorted(sorted(e) for e in next(iter(col_groups.values())))
    try:
        factor = Hypergraph(tuple(rows), tuple(tuple(e) for e in star_edges))
        star = recognize_star(factor)
    except Exception:
        return None
    if star is None:
        return None
    r, c, m, star_map = star
    n = len(cols)
    gen_cols = complete_hypergraph(n).vertices
    mapping = {}
    for gen_row, input_row in star_map.items():
        for j, b in enumerate(cols):
            mapping[f"({gen_row}|{gen_cols[j]})"] = label[(input_row, b)]
    return r, c, m, n, mapping


def _relabel(outcome: SchemeOutcome, mapping: dict[str, str],
             target: Hypergraph, hh: int, kk: int) -> SchemeOutcome:
    colouring = {mapping[v]: col for v, col in outcome.colouring.items()}
    report = check(target, hh, kk, colouring)
    if not report.valid:
        raise SchemeError("relabelled scheme colouring failed validation")
    return SchemeOutcome(target, colouring, report.span, True,
                         outcome.fallback_used, outcome.name)


# --- lambda command -------------------------------------------------------------

def run_scheme_by_name(h: Hypergraph, name: str, hh: int, kk: int) -> SchemeOutcome:
    if (hh, kk) != (2, 1) and name not in ("strong-partition", "stable-set", "greedy"):
        raise SchemeError(f"scheme {name!r} is defined for h=2, k=1")
    if name == "star":
        star = recognize_star(h)
        if star is None:
            raise SchemeError("scheme/family mismatch: input is not a star hypergraph")
        r, c, m, mapping = star
        return _relabel(scheme_star(r, c, m), mapping, h, hh, kk)
    if name == "hyperpath":
        hp = recognize_hyperpath(h)
        if hp is None:
            raise SchemeError("scheme/family mismatch: input is not a hyperpath")
        r, m, mapping = hp
        from .schemes import scheme_hyperpath

        return _relabel(scheme_hyperpath(r, m), mapping, h, hh, kk)
    if name == "hypertree":
        if not is_hypertree(h):
            raise SchemeError("scheme/family mismatch: input is not a hypertree")
        return scheme_hypertree(h)
    if name == "line":
        return scheme_from_line_colouring(h)
    if name == "strong-partition":
        return scheme_strong_partition(h, hh, kk, strong_partition_exact(h))
    if name == "stable-set":
        return scheme_stable_set(h, hh, kk, strong_stable_set_exact(h))
    if name == "greedy":
        return scheme_greedy(h, hh, kk)
    if name == "product-complete":
        prod = recognize_product_complete(h)
        if prod is None:
            raise SchemeError(
                "scheme/family mismatch: input is not a complete-by-complete product")
        m, n, mapping = prod
        return _relabel(scheme_product_complete(m, n), mapping, h, hh, kk)
    if name == "product-star-complete":
        prod = recognize_product_star_complete(h)
        if prod is None:
            raise SchemeError(
                "scheme/family mismatch: input is not a star-by-complete product")
        r, c, m, n, mapping = prod
        return _relabel(scheme_product_star_complete(r, c, m, n), mapping, h, hh, kk)
    raise SchemeError(
        f"unknown scheme {name!r}; available: star, hyperpath, hypertree, line, "
        "strong-partition, stable-set, greedy, product-complete, product-star-complete")


def cmd_lambda(args: argparse.Namespace) -> int:
    try:
        h = load(args.input)
    except (OSError, InvalidHypergraphError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    budget = SolveBudget(max_span=args.max_span, node_limit=args.node_limit,
                         time_limit_seconds=args.time_limit)
    witness = None
    if args.method == "exact":
        res = lambda_exact(h, args.h, args.k, budget)
        if res.optimum is None:
            print(f"lambda in [{res.lower_bound}, {res.upper_bound}] "
                  f"(budget exhausted, nodes={res.nodes_explored})")
            _write_witness(args, res.witness)
            return EXIT_BUDGET
        print(f"lambda = {res.optimum} (certified, method=exact, "
              f"nodes={res.nodes_explored})")
        witness = res.witness
    elif args.method == "greedy":
        out = scheme_greedy(h, args.h, args.k)
        print(f"span = {out.claimed_span} (upper bound, method=greedy, validated)")
        witness = out.colouring
    elif args.method.startswith("scheme:"):
        try:
            out = run_scheme_by_name(h, args.method.split(":", 1)[1], args.h, args.k)
        except SchemeError as exc:
            print(f"scheme error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        flag = ", fallback" if out.fallback_used else ""
        print(f"span = {out.claimed_span} (method={args.method}, validated{flag})")
        witness = out.colouring
    else:
        print(f"unknown method {args.method!r}", file=sys.stderr)
        return EXIT_INPUT
    _write_witness(args, witness)
    return EXIT_OK


def _write_witness(args: argparse.Namespace, witness) -> None:
    if getattr(args, "witness_out", None) and witness is not None:
        path = Path(args.witness_out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(colouring_to_json_dict(witness), indent=2) + "\n",
                        encoding="utf-8")
        print(f"witness written to {path}")


# --- gen command -----------------------------------------------------------------

def parse_factor(spec: str) -> Hypergraph:
    """Factor mini-spec: family[:params], e.g. star:3,1,2 or complete:4."""
    name, _, params = spec.partition(":")
    values = [int(x) for x in params.split(",")] if params else []
    try:
        if name == "complete" and len(values) == 1:
            return complete_hypergraph(values[0])
        if name == "complete" and len(values) == 2:
            return complete_uniform(values[0], values[1])
        if name == "star" and len(values) == 3:
            return star_hypergraph(*values)
        if name == "hyperpath" and len(values) == 2:
            return hyperpath(*values)
        if name == "path" and len(values) == 1:
            return path_graph(values[0])
        if name == "cycle" and len(values) == 1:
            return cycle_graph(values[0])
        if name == "petersen" and not values:
            return petersen_graph()
        if name == "cube" and not values:
            return cube_graph()
    except ValueError as exc:
        raise ValueError(f"bad factor {spec!r}: {exc}") from exc
    raise ValueError(f"bad factor spec {spec!r}")


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.family == "complete":
            h = complete_uniform(args.n, args.r if args.r else args.n)
        elif args.family == "star":
            h = star_hypergraph(args.r, args.c, args.m)
        elif args.family == "hyperpath":
            h = hyperpath(args.r, args.m)
        elif args.family == "hypertree":
            h = hypertree_random(args.r, args.edges, args.max_degree, args.seed)
        elif args.family == "path":
            h = path_graph(args.n)
        elif args.family == "cycle":
            h = cycle_graph(args.n)
        elif args.family == "petersen":
            h = petersen_graph()
        elif args.family == "cube":
            h = cube_graph()
        elif args.family == "product":
            h = cartesian_product(parse_factor(args.left), parse_factor(args.right))
        else:
            raise ValueError(f"unknown family {args.family!r}")
    except ValueError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    dump(h, args.out)
    s = structure_summary(h)
    print(f"wrote {args.out}: {h.n} vertices, {len(h.edges)} edges, "
          f"rank {s.rank}, {'uniform' if s.uniform else 'non-uniform'}")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    problems = diagnose(data.get("vertices", []), data.get("edges", []))
    if problems:
        for p in problems:
            print(p)
        return EXIT_INPUT
    h = load(args.input)
    s = structure_summary(h)
    diam = "infinite" if s.diameter == float("inf") else s.diameter
    print(f"valid: {h.n} vertices, {len(h.edges)} edges")
    print(f"rank={s.rank} corank={s.corank} uniform={s.uniform} linear={s.linear} "
          f"max_degree={s.max_degree} connected={s.connected} diameter={diam}")
    return EXIT_OK


# --- bounds command ---------------------------------------------------------------

def cmd_bounds(args: argparse.Namespace) -> int:
    try:
        h = load(args.input)
    except (OSError, InvalidHypergraphError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    budget = SolveBudget(node_limit=args.node_limit, time_limit_seconds=args.time_limit)
    res = lambda_exact(h, args.h, args.k, budget)
    lam = res.optimum if res.optimum is not None else res.upper_bound
    exact = res.optimum is not None

    rows = []
    reports = list(bound_suite(h, args.h, args.k, lam=lam))
    two_uniform = bool(h.edges) and all(len(e) == 2 for e in h.edges)
    k_reg = regular_degree(h)
    if (args.h, args.k) == (2, 1):
        if two_uniform and k_reg is not None and structure_summary(h).connected:
            reports.extend(check_cheeger(h))
            reports.append(check_lambda_expansion(h, lam))
            reports.append(check_gap_corollary(h, lam))
        elif not two_uniform and k_reg is not None and is_uniform(h) and \
                structure_summary(h).connected:
            reports.append(check_gap_corollary_hypergraph(h, lam))
        else:
            regular_only = ["cheeger-lower", "cheeger-upper", "span-expansion",
                            "gap-corollary", "gap-corollary-hypergraph"]
            for name in regular_only:
                rows.append(skipped_bound_row(name, "input not connected regular"))

    failed = [r for r in reports if not r.holds]
    rows = [bound_report_row(r) for r in reports] + rows
    out = Path(args.out) if args.out else None
    if out:
        write_csv(out, BOUND_HEADER, rows)
        print(f"wrote {out} ({len(rows)} rows)")
        if args.figures and reports:
            from .report import FigureSpec

            spec = FigureSpec(
                "bars", out.stem + ".png",
                f"Bound inequalities for {Path(args.input).name} "
                f"(h={args.h}, k={args.k})",
                {"categories": [r.name for r in reports],
                 "lhs": [r.lhs for r in reports],
                 "rhs": [r.rhs for r in reports],
                 "lhs_label": "left side", "rhs_label": "right side"})
            print(f"wrote {render_figure(spec, out.parent)}")
    else:
        for row in rows:
            print(",".join(str(row[c]) for c in BOUND_HEADER))

    lam_kind = "exact" if exact else "witnessed upper bound"
    print(f"lambda = {lam} ({lam_kind}); {len(reports)} inequalities, "
          f"{len(failed)} failed")
    if failed:
        for r in failed:
            print(f"VIOLATION: {r}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_BUDGET if not exact else EXIT_OK


# --- reproduce command --------------------------------------------------------------

def cmd_reproduce(args: argparse.Namespace) -> int:
    try:
        result = camp.run_campaign(args.name, jobs=args.jobs)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return EXIT_INPUT
    out_dir = Path(args.out_dir) / args.name
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = write_csv(out_dir / "cases.csv", result.header, result.rows)
    written = [str(csv_path)]
    if args.figures:
        for spec in result.figures:
            written.append(str(render_figure(spec, out_dir)))
    for row in result.rows:
        ok = row.get("ok", True)
        mark = "ok " if ok else "FAIL"
        desc = " ".join(f"{k}={v}" for k, v in row.items() if k != "ok")
        print(f"  [{mark}] {desc}")
    print(result.summary())
    for path in written:
        print(f"wrote {path}")
    if not result.passed:
        for f in result.failures:
            print(f"FAILURE: {f}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


# --- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperlambda",
        description="L(h,k)-colouring of hypergraphs: exact spans, constructive "
                    "schemes, spectral and expansion bounds.")
    parser.add_argument("--jobs", type=int, default=_default_jobs(),
                        help="worker cap for enumeration (default: "
                             "HYPERLAMBDA_JOBS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a hypergraph family as JSON")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    p = gen_sub.add_parser("complete", help="complete r-uniform hypergraph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, help="edge size (default n: one full edge)")
    p = gen_sub.add_parser("star", help="star hypergraph with shared centre")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = gen_sub.add_parser("hyperpath", help="chain of edges sharing one vertex")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = gen_sub.add_parser("hypertree", help="random hypertree, deterministic per seed")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p = gen_sub.add_parser("path", help="path graph")
    p.add_argument("--n", type=int, required=True)
    p = gen_sub.add_parser("cycle", help="cycle graph")
    p.add_argument("--n", type=int, required=True)
    gen_sub.add_parser("petersen", help="Petersen graph")
    gen_sub.add_parser("cube", help="3-dimensional hypercube graph")
    p = gen_sub.add_parser("product", help="Cartesian product of two factors")
    p.add_argument("--left", required=True, help="factor spec, e.g. star:3,1,2")
    p.add_argument("--right", required=True, help="factor spec, e.g. complete:3")
    for g in gen_sub.choices.values():
        g.add_argument("--out", required=True, help="output JSON path")

    v = sub.add_parser("validate", help="validate a hypergraph JSON file")
    v.add_argument("input")

    lam = sub.add_parser("lambda", help="compute or bound the L(h,k) span")
    lam.add_argument("input")
    lam.add_argument("--h", type=int, default=2)
    lam.add_argument("--k", type=int, default=1)
    lam.add_argument("--method", default="exact",
                     help="exact | greedy | scheme:<name>")
    lam.add_argument("--max-span", type=int, default=None)
    lam.add_argument("--node-limit", type=int, default=None)
    lam.add_argument("--time-limit", type=float, default=None)
    lam.add_argument("--witness-out", default=None, help="write witness JSON here")

    b = sub.add_parser("bounds", help="evaluate bound inequalities, CSV + figure")
    b.add_argument("input")
    b.add_argument("--h", type=int, default=2)
    b.add_argument("--k", type=int, default=1)
    b.add_argument("--out", default=None, help="CSV output path")
    b.add_argument("--node-limit", type=int, default=None)
    b.add_argument("--time-limit", type=float, default=None)
    b.add_argument("--figures", action=argparse.BooleanOptionalAction, default=True)

    r = sub.add_parser("reproduce", help="run a named reproduction campaign")
    r.add_argument("name", choices=camp.CAMPAIGN_NAMES)
    r.add_argument("--out-dir", default="reports")
    r.add_argument("--figures", action=argparse.BooleanOptionalAction, default=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "gen": cmd_gen,
        "validate": cmd_validate,
        "lambda": cmd_lambda,
        "bounds": cmd_bounds,
        "reproduce": cmd_reproduce,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
