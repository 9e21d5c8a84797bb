"""Piano-roll figures of rendered phrases."""

from __future__ import annotations

from pathlib import Path
from typing import Union

from matplotlib.figure import Figure

from .render import Phrase

VOICE_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def piano_roll(ph: Phrase, title: str = "") -> Figure:
    """One horizontal bar per event: x is time in eighths, y the semitone index."""
    fig = Figure(figsize=(max(4.0, 0.25 * ph.total_units + 1.5), 3.5))
    ax = fig.add_subplot()
    for v in range(1, ph.voices + 1):
        color = VOICE_COLORS[(v - 1) % len(VOICE_COLORS)]
        events = ph.voice_events(v)
        for n, e in enumerate(events):
            ax.broken_barh(
                [(e.onset, e.duration)],
                (e.note.semitone - 0.4, 0.8),
                facecolors=color,
                edgecolors="black",
                linewidth=0.5,
                label=f"voice {v}" if n == 0 else None,
            )
    for bar in range(0, ph.total_units + 1, 8):
        ax.axvline(bar, color="0.8", linewidth=0.8, zorder=0)
    ax.set_xlim(0, max(ph.total_units, 1))
    ax.set_xlabel("time (eighth notes)")
    ax.set_ylabel(f"semitone ({ph.eta}-TET)")
    if title:
        ax.set_title(title)
    if ph.voices > 1 and ph.events:
        ax.legend(loc="upper right", fontsize="small")
    fig.tight_layout()
    return fig


def save_piano_roll(ph: Phrase, path: Union[str, Path], title: str = "") -> Path:
    """Write the figure; the format follows the file extension."""
    path = Path(path)
    piano_roll(ph, title).savefig(path, dpi=120)
    return path
