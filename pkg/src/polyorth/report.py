"""Figure rendering for reports.

Floats appear here and only here: figures are presentation output, never
inputs to any exact computation. Matplotlib runs on the Agg backend so the
CLI works headless.
"""

from __future__ import annotations

import math
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .minimax import MinimaxReport
from .spaces import NormedSpace, dual_space


def _as_float_pairs(points) -> list[tuple[float, float]]:
    return [(float(p[0]), float(p[1])) for p in points]


def _full_vertex_cycle(vertex_reps) -> list[tuple[float, float]]:
    """All ball vertices (both signs), ordered by angle for a closed outline."""
    pts = _as_float_pairs(vertex_reps)
    pts = pts + [(-x, -y) for x, y in pts]
    pts.sort(key=lambda p: math.atan2(p[1], p[0]))
    return pts


def draw_ball_figure(space: NormedSpace, path: str) -> None:
    """Unit ball and dual unit ball side by side. Two dimensions only."""
    if space.dim != 2:
        raise ValueError("ball figures are drawn for two-dimensional spaces only")
    dual = dual_space(space)
    fig, axes = plt.subplots(1, 2, figsize=(9, 4.5))
    for ax, sp, title in (
        (axes[0], space, f"unit ball of {sp_label(space)}"),
        (axes[1], dual, f"dual unit ball of {sp_label(space)}"),
    ):
        cycle = _full_vertex_cycle(sp.ball.vertices)
        xs = [p[0] for p in cycle] + [cycle[0][0]]
        ys = [p[1] for p in cycle] + [cycle[0][1]]
        ax.fill(xs, ys, alpha=0.25)
        ax.plot(xs, ys, marker="o")
        ax.axhline(0.0, linewidth=0.5, color="gray")
        ax.axvline(0.0, linewidth=0.5, color="gray")
        ax.set_aspect("equal")
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def sp_label(space: NormedSpace) -> str:
    return space.label or "X"


def draw_minimax_figure(report: MinimaxReport, path: str) -> None:
    """Per-vertex distance bars with the global distance as a reference line."""
    labels = []
    values = []
    for vertex, dist in report.per_vertex_distances:
        labels.append("(" + ",".join(str(c) for c in vertex) + ")")
        values.append(float(dist))
    fig, ax = plt.subplots(figsize=(max(5, 1.1 * len(labels)), 4))
    bars = ax.bar(range(len(values)), values)
    argmax = set(report.argmax_vertices)
    for (vertex, _), bar in zip(report.per_vertex_distances, bars):
        if vertex in argmax:
            bar.set_color("tab:red")
    ax.axhline(
        float(report.d_global),
        linestyle="--",
        color="black",
        label=f"distance to the operator subspace = {report.d_global}",
    )
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("distance of the image to the target subspace")
    ax.set_xlabel("domain ball vertex")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def draw_suite_figure(statuses: list[str], gaps: list[Fraction], path: str) -> None:
    """Status counts plus a histogram of gap values across a verification run."""
    order = ["verified", "hypothesis_not_met", "degenerate", "VIOLATION"]
    counts = [statuses.count(s) for s in order]
    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    axes[0].bar(range(len(order)), counts, color=["tab:green", "tab:orange", "tab:gray", "tab:red"])
    axes[0].set_xticks(range(len(order)))
    axes[0].set_xticklabels(order, rotation=30, ha="right", fontsize=8)
    axes[0].set_ylabel("instances")
    axes[0].set_title("verification outcomes")
    float_gaps = [float(g) for g in gaps]
    if float_gaps:
        axes[1].hist(float_gaps, bins=min(20, max(5, len(float_gaps) // 5)))
    axes[1].set_xlabel("minimax gap")
    axes[1].set_ylabel("instances")
    axes[1].set_title("gap distribution")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
