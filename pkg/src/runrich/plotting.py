"""Figures written alongside the text reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from runrich.powers import FormulaReport  # noqa: E402
from runrich.search import RoundStats  # noqa: E402

PREVIOUS_BOUND = 3 / (1 + 5**0.5)

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    # keep SVG output byte-stable across runs
    "svg.hashsalt": "runrich",
    "path.simplify": False,
}


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    metadata = {"Date": None} if path.suffix.lower() in (".svg", ".pdf") else {}
    fig.savefig(path, bbox_inches="tight", metadata=metadata)
    plt.close(fig)
    return path


def plot_formula(report: FormulaReport, path) -> Path:
    """Predicted vs enumerated run counts of w^k."""
    ks = [row.k for row in report.rows]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.5, 3.0))
        ax.plot(ks, [row.predicted for row in report.rows], "-", color="0.6", label="A k - B")
        ax.plot(ks, [row.actual for row in report.rows], "o", color="C0", label="enumerated")
        bad = [row for row in report.rows if not row.match]
        if bad:
            ax.plot([r.k for r in bad], [r.actual for r in bad], "x", color="C3", ms=9, label="mismatch")
        p = report.profile
        ax.set_title(f"|w|={p.length}  A={p.growth}  B={p.offset}")
        ax.set_xlabel("k")
        ax.set_ylabel("run(w^k)")
        ax.set_xticks(ks)
        ax.legend(frameon=False)
        return _save(fig, path)


def plot_search_history(history: list[RoundStats], path, threshold=None) -> Path:
    rounds = [s.round for s in history]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5.0, 3.0))
        ax.plot(rounds, [float(s.buffer_best_alpha) for s in history], color="C0", lw=1, label="buffer best")
        leader = [(s.round, float(s.leader_best_alpha)) for s in history if s.leader_best_alpha is not None]
        if leader:
            ax.step(*zip(*leader), where="post", color="C1", lw=1.5, label="leaderboard best")
        ax.axhline(PREVIOUS_BOUND, color="0.5", ls="--", lw=0.8, label="3/(1+sqrt 5)")
        if threshold is not None:
            ax.axhline(float(threshold), color="0.7", ls=":", lw=0.8, label="record threshold")
        ax.set_xlabel("string length")
        ax.set_ylabel("(run(w^3) - run(w^2)) / |w|")
        ax.set_ylim(bottom=0)
        ax.legend(frameon=False, loc="lower right")
        return _save(fig, path)
