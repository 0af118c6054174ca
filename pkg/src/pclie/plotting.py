"""Figures written next to the text reports of `basis` and `verify`."""
from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STATUS_COLORS = {"pass": "#4c72b0", "skip": "#bbbbbb", "FAIL": "#c44e52"}


def _save(fig, path):
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    # fixed metadata keeps the files byte-stable across runs
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_graded_dimensions(counts: dict, path, free_counts: dict | None = None,
                           title: str = "PCLS basis dimensions"):
    """Bar chart of basis sizes per degree, optionally against the free Lie algebra."""
    degrees = sorted(counts)
    fig, ax = plt.subplots(figsize=(6, 3.6))
    ax.bar(degrees, [counts[d] for d in degrees], color="#4c72b0", label="PCLS")
    if free_counts:
        ax.plot(degrees, [free_counts[d] for d in degrees], "o--", color="#dd8452",
                label="free Lie (Witt)")
        ax.legend(frameon=False)
    ax.set_xlabel("degree")
    ax.set_ylabel("dimension")
    ax.set_xticks(degrees)
    ax.set_title(title)
    ax.spines[["top", "right"]].set_visible(False)
    fig.tight_layout()
    return _save(fig, path)


def plot_check_summary(results, path, title: str = "verification checks"):
    """Horizontal bars with the number of cases per check, coloured by status."""
    labels = [f"{r.suite}/{r.name}" for r in results]
    fig, ax = plt.subplots(figsize=(7, 0.35 * len(results) + 1.2))
    ax.barh(range(len(results)), [r.cases for r in results],
            color=[STATUS_COLORS[r.status] for r in results])
    ax.set_yticks(range(len(results)))
    ax.set_yticklabels(labels, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("cases")
    ax.set_title(title)
    ax.spines[["top", "right"]].set_visible(False)
    fig.tight_layout()
    return _save(fig, path)
