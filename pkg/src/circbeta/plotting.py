"""Figure rendering for the report paths (histograms, validation summaries).

Everything draws through the Agg backend straight to files; there is no
interactive UI.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

_STAT_LABEL = {
    "angle": "eigen-angle",
    "gap": "sorted nearest-neighbor gap",
    "eigenvalue": "eigenvalue",
}


def save_histogram_figure(rows, stat: str, path: str, title: str | None = None) -> None:
    """Render histogram rows (bin_left, bin_right, count, density) to a file."""
    lefts = np.array([r[0] for r in rows])
    rights = np.array([r[1] for r in rows])
    density = np.array([r[3] for r in rows])
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.bar(lefts, density, width=rights - lefts, align="edge",
           color="#4878cf", edgecolor="white", linewidth=0.4)
    ax.set_xlabel(_STAT_LABEL.get(stat, stat))
    ax.set_ylabel("density")
    if title:
        ax.set_title(title, fontsize=10)
    ax.margins(x=0.01)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_report_figure(report: dict, path: str) -> None:
    """One horizontal bar per check: measured value against its threshold.

    Bars show value/tolerance on a log scale; green bars passed, red ones
    failed.  Significance-level checks (pass when the value is above the
    threshold) are inverted so "left of 1" is always good.
    """
    checks = report.get("checks", [])
    if not checks:
        return
    names, ratios, colors = [], [], []
    for c in checks:
        tol = c["tolerance"]
        val = c["value"]
        if c.get("comparison", "le") == "ge":
            ratio = tol / val if val > 0 else np.inf
        else:
            ratio = val / tol if tol > 0 else np.inf
        names.append(c["name"])
        ratios.append(max(ratio, 1e-18))
        colors.append("#2e8b57" if c["passed"] else "#c0392b")
    y = np.arange(len(names))
    fig, ax = plt.subplots(figsize=(7.2, 0.42 * len(names) + 1.4))
    ax.barh(y, ratios, color=colors, height=0.62)
    ax.axvline(1.0, color="black", linewidth=1.0, linestyle="--")
    ax.set_xscale("log")
    ax.set_yticks(y)
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("measured / threshold (log scale; dashed line = limit)")
    ax.set_title(f"suite: {report.get('suite', '?')}  "
                 f"({'pass' if report.get('passed') else 'FAIL'})", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
