"""File-rendered figures for density slices (no interactive display)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .evolution import DensitySlice  # noqa: E402


def render_density_slice(sl: DensitySlice, path, title: str = "",
                         waist: float = 1.0, dpi: int = 150) -> None:
    """PNG render of a density slice, axes scaled by the beam waist."""
    us, vs = sl.u.points() / waist, sl.v.points() / waist
    fig, ax = plt.subplots(figsize=(5.0, 4.2))
    # values are indexed [u, v]; imshow wants rows = second axis
    im = ax.imshow(sl.values.T, origin="lower", aspect="equal",
                   extent=(us[0], us[-1], vs[0], vs[-1]), cmap="inferno")
    labels = {"x": ("y", "z"), "y": ("x", "z"), "z": ("x", "y")}[sl.axis]
    ax.set_xlabel(f"${labels[0]}/\\omega_0$")
    ax.set_ylabel(f"${labels[1]}/\\omega_0$")
    if title:
        ax.set_title(title)
    fig.colorbar(im, ax=ax, label=r"$|\psi|^2$")
    fig.tight_layout()
    # explicit format: atomic writers hand in .partial-suffixed paths
    fig.savefig(path, dpi=dpi, format="png")
    plt.close(fig)
