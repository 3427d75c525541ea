"""Matplotlib rendering for the plot-data reports.

The CSV output keeps exact rationals; figures are a float rendering for
eyeballs only.  matplotlib is imported lazily so the rest of the package
works without it.
"""


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_elasticity_figure(rows, path, ceiling=None):
    """Scatter of (x, elasticity) pairs; optional dashed line at the supremum."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(8, 5))
    ax.scatter([x for x, _ in rows], [float(r) for _, r in rows],
               s=9, color="#1f5fa8")
    if ceiling is not None:
        ax.axhline(float(ceiling), ls="--", lw=1, color="#b0452f",
                   label=f"supremum {ceiling}")
        ax.legend(loc="lower right")
    ax.set_xlabel("element")
    ax.set_ylabel("elasticity")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_omega_figure(rows, path):
    """Scatter of (x, omega) pairs."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(8, 5))
    ax.scatter([x for x, _ in rows], [w for _, w in rows],
               s=9, color="#1f5fa8")
    ax.set_xlabel("element")
    ax.set_ylabel("omega-primality")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
