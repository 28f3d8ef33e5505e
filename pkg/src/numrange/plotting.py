"""Boundary figure rendering.

Figures are written straight to file on the Agg backend.  SVG output is kept
byte-deterministic by pinning the hash salt and dropping the date metadata.
"""

import numpy as np

_HASHSALT = "numrange"


def save_boundary_figure(profile, norm, path):
    """Render the swept boundary, the extremal point and the circle |z| = norm."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    with plt.rc_context({"svg.hashsalt": _HASHSALT}):
        fig, ax = plt.subplots(figsize=(8.0, 8.0), dpi=100)
        closed = np.append(profile.points, profile.points[0])
        ax.plot(closed.real, closed.imag, color="tab:blue", lw=1.2, label="boundary of W(A)")
        phi = np.linspace(0.0, 2.0 * np.pi, 361)
        ax.plot(norm * np.cos(phi), norm * np.sin(phi), ls="--", color="gray", lw=0.9,
                label="|z| = norm")
        ext = complex(profile.extremal_point)
        ax.plot([ext.real], [ext.imag], marker="*", ms=12, color="tab:red", ls="none",
                label="extremal point")
        lim = 1.1 * max(norm, 1.0)
        ax.set_xlim(-lim, lim)
        ax.set_ylim(-lim, lim)
        ax.set_aspect("equal")
        ax.grid(alpha=0.3)
        ax.set_xlabel("Re")
        ax.set_ylabel("Im")
        ax.legend(loc="upper right", fontsize=9)
        metadata = {"Date": None} if str(path).endswith(".svg") else None
        fig.savefig(path, metadata=metadata)
        plt.close(fig)
