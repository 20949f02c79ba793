"""Figures written next to property reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

plt.rcParams.update({
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "svg.hashsalt": "aspicmin",
})


def _metadata(fmt):
    # drop timestamps so repeated runs give identical files
    if fmt in ("svg", "pdf"):
        return {"Date": None}
    if fmt == "png":
        return {"Software": None}
    return None


def plot_property_report(report, path, title=None):
    """Horizontal bars: checks run per property, with violations overlaid in red."""
    names = sorted(report.checked)
    checked = [report.checked[n] for n in names]
    failed = [sum(1 for v in report.violations if v.property == n) for n in names]

    fig, ax = plt.subplots(figsize=(6, 0.45 * max(len(names), 2) + 1.2))
    ys = range(len(names))
    ax.barh(ys, checked, color="0.75", label="checked")
    ax.barh(ys, failed, color="tab:red", label="violations")
    for y, (c, f) in enumerate(zip(checked, failed)):
        ax.text(c, y, f" {c}" + (f" ({f} failed)" if f else ""), va="center")
    ax.set_yticks(list(ys))
    ax.set_yticklabels(names)
    ax.set_xscale("symlog")
    ax.set_xlabel("checks")
    notes = len(report.informational)
    skipped = len(report.skipped)
    ax.set_title(title or f"property checks ({notes} notes, {skipped} skipped)")
    ax.legend(loc="lower right", frameon=False)
    fig.tight_layout()

    path = Path(path)
    fmt = path.suffix.lstrip(".").lower() or "png"
    fig.savefig(path, format=fmt, metadata=_metadata(fmt))
    plt.close(fig)
    return path


def plot_argument_sizes(arguments, path, title=None):
    """Stacked histogram of node counts, regular versus non-regular."""
    from .classification import is_regular

    regular = [a.node_count for a in arguments if is_regular(a)]
    other = [a.node_count for a in arguments if not is_regular(a)]
    top = max([a.node_count for a in arguments], default=1)
    bins = [x + 0.5 for x in range(0, top + 1)]

    fig, ax = plt.subplots(figsize=(6, 3.2))
    ax.hist([regular, other], bins=bins, stacked=True,
            color=["tab:blue", "tab:orange"], label=["regular", "circular or redundant"])
    ax.set_xlabel("nodes")
    ax.set_ylabel("arguments")
    ax.set_title(title or f"{len(arguments)} arguments")
    ax.legend(frameon=False)
    fig.tight_layout()

    path = Path(path)
    fmt = path.suffix.lstrip(".").lower() or "png"
    fig.savefig(path, format=fmt, metadata=_metadata(fmt))
    plt.close(fig)
    return path
