"""Figure rendering for polygons and scan reports.

Everything here writes straight to files via the Agg backend so the CLI can
be used headless; figures land alongside the delimited report output.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

__all__ = ["polygon_figure", "scan_method_figure", "scan_exceptional_figure"]

_RC = {
    "figure.dpi": 140,
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.3,
}


def polygon_figure(points, polygon, path, title: str = "") -> str:
    """Plot valuation points with the lower hull and per-edge slope labels."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(5.2, 3.4))
        xs = [x for x, _ in points]
        ys = [y for _, y in points]
        ax.scatter(xs, ys, s=18, color="#777777", zorder=3, label="valuations")
        cx = [x for x, _ in polygon.corners]
        cy = [y for _, y in polygon.corners]
        ax.plot(cx, cy, "-o", color="#1f6fb2", markersize=5, zorder=4, label="lower hull")
        for e, (x0, y0), (x1, y1) in zip(polygon.edges, polygon.corners, polygon.corners[1:]):
            ax.annotate(
                f"{e.slope.numerator}/{e.slope.denominator}",
                ((x0 + x1) / 2, (y0 + y1) / 2),
                textcoords="offset points", xytext=(0, -11), fontsize=8,
                color="#1f6fb2", ha="center",
            )
        ax.set_xlabel("coefficient index")
        ax.set_ylabel(f"ord_{polygon.prime}")
        if title:
            ax.set_title(title)
        ax.legend(loc="best", fontsize=8)
        fig.savefig(path, bbox_inches="tight")
        plt.close(fig)
    return str(path)


def scan_method_figure(report, path) -> str:
    """Bar chart of how many pairs each method settled."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(5.2, 3.2))
        methods = list(report.method_counts)
        counts = [report.method_counts[m] for m in methods]
        ax.bar(range(len(methods)), counts, color="#1f6fb2")
        ax.set_xticks(range(len(methods)))
        ax.set_xticklabels(methods, rotation=20, ha="right", fontsize=8)
        ax.set_ylabel("pairs")
        ax.set_yscale("log")
        ax.set_title(
            f"methods over n in [{report.n_min}, {report.n_max}], "
            f"r in [{report.r_min}, {report.r_max}]"
        )
        for i, c in enumerate(counts):
            ax.annotate(str(c), (i, c), textcoords="offset points", xytext=(0, 3),
                        ha="center", fontsize=8)
        fig.savefig(path, bbox_inches="tight")
        plt.close(fig)
    return str(path)


def scan_exceptional_figure(report, path) -> str:
    """Scatter of the exceptional pairs over the scanned box."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(5.2, 3.2))
        if report.exceptional:
            xs = [rec.n for rec in report.exceptional]
            ys = [rec.r for rec in report.exceptional]
            ax.scatter(xs, ys, s=26, color="#b2351f", zorder=3)
            ax.set_xscale("log")
        ax.set_xlabel("n")
        ax.set_ylabel("r")
        ax.set_ylim(report.r_min - 0.5, report.r_max + 0.5)
        ax.set_title(f"{len(report.exceptional)} exceptional pairs")
        fig.savefig(path, bbox_inches="tight")
        plt.close(fig)
    return str(path)
