"""Delimited report output and the figures rendered alongside it.

Campaigns and CLI commands describe their figures as FigureSpec values;
this module is the only place that touches matplotlib (Agg backend, files
only).
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .spectral import BoundReport


@dataclass
class FigureSpec:
    kind: str  # grid | sweep | bars
    filename: str
    title: str
    payload: dict = field(default_factory=dict)


def write_csv(path: str | Path, header: list[str], rows: list[dict]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=header, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    return path


BOUND_HEADER = ["name", "lhs", "rhs", "relation", "holds", "inputs"]


def bound_report_row(report: BoundReport) -> dict:
    return {
        "name": report.name,
        "lhs": f"{report.lhs:.9g}",
        "rhs": f"{report.rhs:.9g}",
        "relation": report.relation,
        "holds": str(report.holds).lower(),
        "inputs": json.dumps(report.inputs, sort_keys=True, default=str),
    }


def skipped_bound_row(name: str, reason: str) -> dict:
    return {"name": name, "lhs": "", "rhs": "", "relation": "",
            "holds": "skipped", "inputs": json.dumps({"reason": reason})}


def render_figure(spec: FigureSpec, directory: str | Path) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / spec.filename
    if spec.kind == "grid":
        _render_grid(spec, path)
    elif spec.kind == "sweep":
        _render_sweep(spec, path)
    elif spec.kind == "bars":
        _render_bars(spec, path)
    else:
        raise ValueError(f"unknown figure kind {spec.kind!r}")
    return path


def _render_grid(spec: FigureSpec, path: Path) -> None:
    """Colouring of a product drawn as its rectangular array."""
    values = np.asarray(spec.payload["values"], dtype=float)
    rows = spec.payload.get("rows") or [str(i + 1) for i in range(values.shape[0])]
    cols = spec.payload.get("cols") or [str(j + 1) for j in range(values.shape[1])]
    h, w = values.shape
    fig, ax = plt.subplots(figsize=(max(4.0, 0.6 * w), max(3.0, 0.55 * h)))
    ax.imshow(values, cmap="viridis", aspect="equal")
    annotate = w * h <= 400
    if annotate:
        mid = (values.max() + values.min()) / 2
        for i in range(h):
            for j in range(w):
                colour = "white" if values[i, j] < mid else "black"
                ax.text(j, i, str(int(values[i, j])), ha="center", va="center",
                        fontsize=7, color=colour)
    ax.set_xticks(range(w), cols, fontsize=6, rotation=90)
    ax.set_yticks(range(h), rows, fontsize=6)
    ax.set_title(spec.title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _render_sweep(spec: FigureSpec, path: Path) -> None:
    xs = spec.payload["x"]
    fig, ax = plt.subplots(figsize=(7, 4))
    for label, ys in spec.payload["series"].items():
        ax.plot(range(len(xs)), ys, marker="o", markersize=3, label=label)
    ax.set_xticks(range(len(xs)), [str(x) for x in xs], fontsize=6,
                  rotation=90 if len(xs) > 12 else 0)
    ax.set_xlabel(spec.payload.get("xlabel", ""))
    ax.set_ylabel(spec.payload.get("ylabel", ""))
    ax.set_title(spec.title)
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _render_bars(spec: FigureSpec, path: Path) -> None:
    cats = spec.payload["categories"]
    lhs = spec.payload["lhs"]
    rhs = spec.payload["rhs"]
    y = np.arange(len(cats))
    fig, ax = plt.subplots(figsize=(7, max(3.0, 0.4 * len(cats))))
    ax.barh(y - 0.2, lhs, height=0.4, label=spec.payload.get("lhs_label", "lhs"))
    ax.barh(y + 0.2, rhs, height=0.4, label=spec.payload.get("rhs_label", "rhs"))
    ax.set_yticks(y, cats, fontsize=7)
    ax.invert_yaxis()
    ax.set_title(spec.title)
    ax.legend(fontsize=8)
    ax.grid(True, axis="x", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def product_grid_payload(colouring: dict[str, int]) -> dict:
    """Rebuild the rectangular array of a product colouring from its
    "(x|y)" vertex labels."""
    cells = {}
    for label, value in colouring.items():
        if not (label.startswith("(") and label.endswith(")") and "|" in label):
            raise ValueError(f"not a product vertex label: {label!r}")
        left, right = label[1:-1].split("|", 1)
        cells[(left, right)] = value
    rows = sorted({a for a, _ in cells})
    cols = sorted({b for _, b in cells})
    values = [[cells[(a, b)] for b in cols] for a in rows]
    return {"rows": rows, "cols": cols, "values": values}
