"""Render figure-data artifacts to image files.

The delimited tables stay the canonical artifacts; these helpers draw the
same data with matplotlib so a report run can drop a quick-look image next
to each table.  The Agg backend is forced so rendering works headless.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .report import FIG6_THRESHOLD, TableArtifact

_LINESTYLES = (":", "-", "-")
_WIDTHS = (1.5, 1.0, 2.0)


def _group_rows(rows, key_idx):
    groups: dict = {}
    for row in rows:
        groups.setdefault(row[key_idx], []).append(row)
    return groups


def render_fig4(artifact: TableArtifact, path: str) -> None:
    """Two panels: peak probability vs asymmetry, and vs |beta|."""
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.6))
    blocks = _group_rows(artifact.rows, 0)
    panels = [
        ("pmax_vs_asymmetry", "alpha - delta", "|beta| = {}"),
        ("pmax_vs_beta", "|beta|", "alpha - delta = {}"),
    ]
    for ax, (block, xlabel, legend_fmt) in zip(axes, panels):
        for fixed, rows in sorted(_group_rows(blocks[block], 1).items()):
            xs = [r[2] for r in rows]
            ys = [r[3] for r in rows]
            ax.plot(xs, ys, label=legend_fmt.format(fixed))
        ax.set_xlabel(xlabel)
        ax.set_ylabel("peak success probability")
        ax.set_ylim(0.0, 1.05)
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def render_fig5(artifact: TableArtifact, path: str) -> None:
    """Two panels: peak time vs overlap, and P(t) for the unit-peak cases."""
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.6))
    blocks = _group_rows(artifact.rows, 0)
    for which, (ax, ylabel, xlabel) in zip(
        ("tstar_vs_x", "prob_vs_time"),
        ((axes[0], "peak time", "overlap x"), (axes[1], "success probability", "t")),
    ):
        ax_, ylabel_, xlabel_ = ax, ylabel, xlabel
        for (name, rows), style, width in zip(
            sorted(_group_rows(blocks[which], 1).items()), _LINESTYLES, _WIDTHS
        ):
            xs = [r[2] for r in rows]
            ys = [r[3] for r in rows]
            ax_.plot(xs, ys, style, linewidth=width, label=name)
        ax_.set_xlabel(xlabel_)
        ax_.set_ylabel(ylabel_)
        ax_.legend(fontsize=8)
    axes[0].set_ylim(0.0, 2.0)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def render_fig6(artifact: TableArtifact, path: str) -> None:
    """The threshold race between the two benchmark Hamiltonians."""
    fig, ax = plt.subplots(figsize=(5, 3.6))
    for (name, rows), width in zip(
        sorted(_group_rows(artifact.rows, 0).items()), (2.0, 1.0)
    ):
        ax.plot([r[1] for r in rows], [r[2] for r in rows],
                linewidth=width, label=name)
    ax.axhline(FIG6_THRESHOLD, linestyle="--", color="gray",
               label=f"threshold {FIG6_THRESHOLD}")
    ax.axhline(1.0, linestyle=":", color="black")
    ax.set_xlabel("t")
    ax.set_ylabel("success probability")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def render_curve(artifact: TableArtifact, path: str) -> None:
    """Single success-probability curve."""
    fig, ax = plt.subplots(figsize=(5, 3.6))
    ax.plot([r[0] for r in artifact.rows], [r[1] for r in artifact.rows])
    ax.set_xlabel("t")
    ax.set_ylabel("success probability")
    ax.set_ylim(-0.02, 1.05)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


RENDERERS = {
    "fig4": render_fig4,
    "fig5": render_fig5,
    "fig6": render_fig6,
    "curve": render_curve,
}
