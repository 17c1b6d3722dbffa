"""Figure rendering for classification tables and play statistics."""

from __future__ import annotations

from .classify import SEEKER, word_sort_key


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_classification_figure(rows, path: str) -> None:
    """Verdict grid over word pairs: green seeker wins, grey obscurer wins,
    red cross where the closed form disagrees with the solver."""
    plt = _pyplot()
    words = sorted({r.s1 for r in rows} | {r.s2 for r in rows if r.s2}, key=word_sort_key)
    index = {w: i for i, w in enumerate(words)}
    fig, ax = plt.subplots(figsize=(max(6, len(words) / 8), max(5, len(words) / 9)))
    for verdict, color in ((SEEKER, "#2a9d2a"), (None, "#c8c8c8")):
        xs, ys = [], []
        for r in rows:
            hit = r.solver == SEEKER
            if (verdict == SEEKER) != hit:
                continue
            xs.append(index[r.s2 or r.s1])
            ys.append(index[r.s1])
        label = "seeker wins" if verdict == SEEKER else "obscurer wins"
        ax.scatter(xs, ys, s=6, marker="s", c=color, label=label, linewidths=0)
    bad_x = [index[r.s2 or r.s1] for r in rows if r.agree is False]
    bad_y = [index[r.s1] for r in rows if r.agree is False]
    if bad_x:
        ax.scatter(bad_x, bad_y, s=24, marker="x", c="#d62728", label="disagreement")
    ticks = list(range(0, len(words), max(1, len(words) // 24)))
    ax.set_xticks(ticks)
    ax.set_xticklabels([words[i] for i in ticks], rotation=90, fontsize=6)
    ax.set_yticks(ticks)
    ax.set_yticklabels([words[i] for i in ticks], fontsize=6)
    ax.set_xlabel("second word")
    ax.set_ylabel("first word")
    ax.set_title("verdicts over forbidden pairs")
    ax.legend(loc="upper left", fontsize=7, markerscale=2)
    fig.tight_layout()
    fig.savefig(path, dpi=160)
    plt.close(fig)


def save_log_play_figure(counts: dict[int, int], bound_unit: int, path: str) -> None:
    """Question counts against the halving bound, log-scaled in n."""
    from .direct import halving_steps

    plt = _pyplot()
    ns = sorted(counts)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, [counts[n] for n in ns], "o-", label="questions asked")
    ax.plot(
        ns,
        [bound_unit * halving_steps(n) for n in ns],
        "s--",
        label=f"{bound_unit} x halving steps",
    )
    ax.set_xscale("log", base=2)
    ax.set_xlabel("candidate count n")
    ax.set_ylabel("questions")
    ax.set_title("adversarial match length")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=160)
    plt.close(fig)
