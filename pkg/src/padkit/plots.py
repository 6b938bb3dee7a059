"""Figure rendering for the report paths (verify and bench)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_bench_figure(report, path) -> None:
    """Median seconds per strategy across the index ladder."""
    by_strategy = {}
    for e in report.entries:
        by_strategy.setdefault(e.strategy, []).append((e.n, e.median_seconds))

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for strategy, points in by_strategy.items():
        points.sort()
        ax.plot(
            [n for n, _ in points],
            [max(t, 1e-9) for _, t in points],
            marker="o",
            label=strategy,
        )
    if all(n >= 1 for e in report.entries for n in [e.n]):
        ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("index n")
    ax.set_ylabel("median seconds")
    ax.set_title("Padovan evaluation strategies")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_verify_figure(reports, path) -> None:
    """Checks per identity, colored by outcome."""
    names = [r.identity for r in reports]
    counts = [r.checked for r in reports]
    colors = ["#2a9d5c" if r.passed else "#d64545" for r in reports]

    fig, ax = plt.subplots(figsize=(7.5, 0.35 * len(reports) + 1.6))
    positions = range(len(reports))
    ax.barh(positions, counts, color=colors)
    ax.set_yticks(list(positions))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("checks run")
    ax.set_title("identity catalogue")
    for pos, (count, rep) in enumerate(zip(counts, reports)):
        mark = "ok" if rep.passed else f"{len(rep.failures)} FAILED"
        ax.annotate(
            mark, (count, pos), xytext=(4, 0),
            textcoords="offset points", va="center", fontsize=7,
        )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
