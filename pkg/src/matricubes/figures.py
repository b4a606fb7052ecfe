"""Rendering rank tables to image files.

Only one or two directions are drawn: direction 0 runs left to right,
direction 1 bottom to top, matching the textual grid convention.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .core import Matricube


def render_rank_table(m, path, highlight=(), title=None):
    """Write a PNG (or whatever the extension says) of the rank table.

    ``highlight`` is an iterable of points drawn with a filled accent
    background, used for flats, circuits, and independents.
    """
    if m.d not in (1, 2):
        raise ValueError(f"can only draw 1 or 2 directions, got {m.d}")
    width = m.width if m.d == 2 else (m.width[0], 0)
    marked = {tuple(p) for p in highlight}

    nx, ny = width[0] + 1, width[1] + 1
    fig, ax = plt.subplots(figsize=(0.6 * nx + 0.8, 0.6 * ny + 0.8))
    for x0 in range(nx):
        for x1 in range(ny):
            p = (x0, x1) if m.d == 2 else (x0,)
            if p in marked:
                ax.add_patch(
                    plt.Rectangle((x0 - 0.5, x1 - 0.5), 1, 1, color="#aed4f5", zorder=0)
                )
            ax.text(x0, x1, str(m.rank(p)), ha="center", va="center", fontsize=11)
    ax.set_xlim(-0.5, nx - 0.5)
    ax.set_ylim(-0.5, ny - 0.5)
    ax.set_xticks(range(nx))
    ax.set_yticks(range(ny))
    ax.set_aspect("equal")
    ax.tick_params(length=0)
    for spine in ax.spines.values():
        spine.set_visible(False)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
