"""Render curve groups as BER-vs-Eb/N0 figures (PNG and SVG)."""

import re
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt


def _slug(text):
    return re.sub(r"[^A-Za-z0-9.-]+", "-", str(text)).strip("-")


def group_filename(group):
    parts = [f"by-{group.group_key}"]
    parts += [_slug(v) for _, v in sorted(group.identity.items())]
    return "_".join(p for p in parts if p)


def render(groups, out_dir, formats=("png", "svg"), dpi=150):
    """One figure per group: log-y BER, linear Eb/N0, legend from labels.

    Returns the list of written file paths (deterministic names built from
    the group key and identity columns)."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for group in groups:
        if not group.series:
            continue
        fig, ax = plt.subplots(figsize=(6.4, 4.8))
        for series in group.series:
            if not series.points:
                continue
            x = [p[0] for p in series.points]
            y = [p[1] for p in series.points]
            style = "o" if len(series.points) == 1 else "o-"
            ax.semilogy(x, y, style, label=series.label, markersize=4)
        ax.set_xlabel("Eb/N0 (dB)")
        ax.set_ylabel("BER")
        title = ", ".join(f"{k}={v}" for k, v in sorted(group.identity.items()))
        ax.set_title(title, fontsize=9)
        ax.grid(True, which="both", alpha=0.3)
        ax.legend(fontsize=8)
        stem = group_filename(group)
        for fmt in formats:
            path = out_dir / f"{stem}.{fmt}"
            fig.savefig(path, dpi=dpi, bbox_inches="tight")
            written.append(path)
        plt.close(fig)
    return written
