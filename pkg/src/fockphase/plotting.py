"""Matplotlib rendering for the standard figures.

Renders each FigureData to a single PNG next to its CSV set.  Uses the Agg
backend so rendering works headless and produces identical bytes across
runs in a fixed environment.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .figures import FigureData


def render_figure(fig_data: FigureData, png_path) -> None:
    n = len(fig_data.panels)
    fig, axes = plt.subplots(1, n, figsize=(6.4 * n, 4.4))
    if n == 1:
        axes = [axes]
    for ax, panel in zip(axes, fig_data.panels):
        for curve in panel.curves:
            xs = [row[0] for row in curve.rows]
            ys = [row[1] for row in curve.rows]
            ax.plot(xs, ys, label=curve.label, linewidth=1.2)
        ax.set_xlabel(panel.xlabel)
        ax.set_ylabel(panel.ylabel)
        ax.grid(alpha=0.3)
        ax.legend(fontsize=8)
    fig.suptitle(fig_data.title, fontsize=11)
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
