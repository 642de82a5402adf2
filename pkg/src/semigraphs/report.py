"""Render a semigraph analysis to files: two CSVs and two PNG figures.

Figures are written with the Agg backend so this works on headless machines;
matplotlib is imported lazily so the rest of the package never pays for it.
"""

from __future__ import annotations

from pathlib import Path

from .matrix import adjacency, sum_identities
from .spectra import DEFAULT_CLUSTER_TOL, DEFAULT_TOL, bounds, spectrum

_FMT = "{:.10g}"


def _fraction_token(value) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def write_report(
    g,
    out_dir,
    tol: float = DEFAULT_TOL,
    cluster_tolerance: float = DEFAULT_CLUSTER_TOL,
) -> list[Path]:
    """Write eigenvalues.csv, report.csv, spectrum.png, adjacency.png.

    Returns the written paths in that order.  The output directory is
    created if missing.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    a = adjacency(g)
    spec = spectrum(a, tol=tol, cluster_tolerance=cluster_tolerance)
    rep = bounds(g, spec=spec)
    ids = sum_identities(g)
    counts = ids.counts

    eig_path = out / "eigenvalues.csv"
    lines = ["index,eigenvalue"]
    lines.extend(
        f"{i},{_FMT.format(v)}" for i, v in enumerate(spec.values, start=1)
    )
    eig_path.write_text("\n".join(lines) + "\n")

    yes = lambda flag: "yes" if flag else "no"
    metrics = [
        ("vertices", str(g.n)),
        ("edges", str(len(g.edges))),
        ("rank", str(g.rank())),
        ("connected", yes(g.is_connected())),
        ("full-edges", str(counts.full)),
        ("quarter-edges", str(counts.quarter)),
        ("half-one-partial-edges", str(counts.half_one_partial)),
        ("half-two-partial-edges", str(counts.half_two_partial)),
        ("degree-sum", _fraction_token(ids.degree_sum_direct)),
        ("trace-square", _fraction_token(ids.trace_sq_direct)),
        ("lambda1", _FMT.format(rep.lambda1)),
        ("bound-skeleton", _FMT.format(rep.bound_skeleton)),
        ("bound-min-degree", _FMT.format(rep.bound_min_degree)),
        ("bound-trace", _FMT.format(rep.bound_trace)),
        ("holds-skeleton", yes(rep.holds_skeleton)),
        ("holds-min-degree", yes(rep.holds_min_degree)),
        ("holds-trace", yes(rep.holds_trace)),
    ]
    report_path = out / "report.csv"
    report_path.write_text(
        "\n".join(["metric,value"] + [f"{k},{v}" for k, v in metrics]) + "\n"
    )

    spectrum_path = out / "spectrum.png"
    fig, ax = plt.subplots(figsize=(7, 4.5))
    xs = range(1, len(spec.values) + 1)
    ax.plot(xs, spec.values, "o", markersize=5, label="eigenvalues")
    ax.axhline(
        rep.bound_skeleton, color="tab:red", linestyle="--", linewidth=1,
        label=f"skeleton bound {rep.bound_skeleton:.4g}",
    )
    ax.axhline(
        rep.bound_trace, color="tab:orange", linestyle=":", linewidth=1,
        label=f"trace bound {rep.bound_trace:.4g}",
    )
    ax.axhline(
        rep.bound_min_degree, color="tab:green", linestyle="-.", linewidth=1,
        label=f"min degree {rep.bound_min_degree:.4g}",
    )
    ax.set_xlabel("index (descending)")
    ax.set_ylabel("eigenvalue")
    ax.set_title(f"spectrum, {g.n} vertices, {len(g.edges)} edges")
    ax.legend(loc="best", fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(spectrum_path, dpi=150)
    plt.close(fig)

    adjacency_path = out / "adjacency.png"
    fig, ax = plt.subplots(figsize=(5.5, 5))
    image = ax.imshow(np.array(a.to_floats()), cmap="viridis")
    fig.colorbar(image, ax=ax, label="entry value")
    ax.set_title("adjacency matrix")
    ax.set_xlabel("vertex")
    ax.set_ylabel("vertex")
    fig.tight_layout()
    fig.savefig(adjacency_path, dpi=150)
    plt.close(fig)

    return [eig_path, report_path, spectrum_path, adjacency_path]
