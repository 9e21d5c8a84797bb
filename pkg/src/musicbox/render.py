"""Interpret multi-patterns as timed notes and export them as ABC or JSON.

A unit of time is an eighth note. In η-TET a note ``(step, octave)`` has
semitone index ``octave * η + step``; ``(0, 4)`` is middle C.
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ParseError, UnsupportedTemperamentError, ValidationError
from .patterns import MultiPattern


class ScaleWarning(UserWarning):
    """A scale with zero steps: some degrees share a pitch."""


@dataclass(frozen=True)
class Note:
    step: int
    octave: int
    eta: int = 12

    def __post_init__(self):
        if self.eta < 1:
            raise ValidationError(f"eta must be positive, got {self.eta}")
        if not 0 <= self.step < self.eta:
            raise ValidationError(f"step {self.step} outside [0, {self.eta - 1}]")

    @property
    def semitone(self) -> int:
        return self.octave * self.eta + self.step

    @classmethod
    def from_semitone(cls, s: int, eta: int = 12) -> Note:
        octave, step = divmod(s, eta)
        return cls(step, octave, eta)


@dataclass(frozen=True)
class Scale:
    """Integer composition of η read as successive steps."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValidationError("a scale needs at least one step")
        if any(p < 0 for p in parts):
            raise ValidationError(f"scale steps must be nonnegative: {parts}")
        if sum(parts) < 1:
            raise ValidationError("scale steps must sum to a positive eta")
        if 0 in parts:
            warnings.warn(f"scale {parts} has zero steps", ScaleWarning, stacklevel=3)

    @property
    def eta(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class RootedScale:
    scale: Scale
    root: Note

    def __post_init__(self):
        if self.root.eta != self.scale.eta:
            raise ValidationError(
                f"root is in {self.root.eta}-TET but the scale sums to {self.scale.eta}"
            )


@dataclass(frozen=True)
class Tempo:
    eighths_per_minute: int = 128

    def __post_init__(self):
        if self.eighths_per_minute <= 0:
            raise ValidationError(f"tempo must be positive, got {self.eighths_per_minute}")

    def seconds(self, units: int) -> float:
        return units * 60 / self.eighths_per_minute


BUILTIN_SCALES: dict[str, tuple[int, ...]] = {
    "major": (2, 2, 1, 2, 2, 2, 1),
    "harmonic-minor": (2, 1, 2, 2, 1, 3, 1),
    "natural-minor": (2, 1, 2, 2, 1, 2, 2),
    "hirajoshi": (2, 1, 4, 1, 4),
}


def parse_scale(text: str) -> Scale:
    """A built-in scale name or comma-separated steps such as ``2,2,1,2,2,2,1``."""
    name = text.strip()
    if name in BUILTIN_SCALES:
        return Scale(BUILTIN_SCALES[name])
    try:
        return Scale(tuple(int(p) for p in name.split(",")))
    except ValueError:
        known = ", ".join(BUILTIN_SCALES)
        raise ParseError(f"unknown scale {text!r} (built-ins: {known})") from None


def parse_root(text: str, eta: int = 12) -> Note:
    """Read ``<step>:<octave>``, e.g. ``9:3`` for the A below middle C."""
    match = re.fullmatch(r"\s*(\d+)\s*:\s*(-?\d+)\s*", text)
    if match is None:
        raise ParseError(f"bad root {text!r}; expected <step>:<octave>")
    return Note(int(match.group(1)), int(match.group(2)), eta)


def scale_note(rs: RootedScale, d: int) -> Note:
    """The note ``d`` scale steps above (or below, if negative) the root."""
    parts = rs.scale.parts
    eta = rs.scale.eta
    cycles, rem = divmod(abs(d), len(parts))
    if d >= 0:
        offset = cycles * eta + sum(parts[:rem])
    else:
        offset = -(cycles * eta + sum(parts[len(parts) - rem :]))
    return Note.from_semitone(rs.root.semitone + offset, eta)


# -- phrases ------------------------------------------------------------------


@dataclass(frozen=True)
class Event:
    voice: int
    onset: int
    duration: int
    note: Note


@dataclass(frozen=True)
class Phrase:
    events: tuple[Event, ...]
    total_units: int
    voices: int
    tempo: Tempo = Tempo()
    eta: int = 12

    def voice_events(self, voice: int) -> list[Event]:
        return sorted((e for e in self.events if e.voice == voice), key=lambda e: e.onset)


def render(x: MultiPattern, rs: RootedScale, tempo: Tempo = Tempo()) -> Phrase:
    """One event per beat, lasting the beat plus the rests that follow it."""
    events = []
    for v, voice in enumerate(x.voices, start=1):
        word = voice.word
        for k, a in enumerate(word):
            if a is None:
                continue
            end = k + 1
            while end < len(word) and word[end] is None:
                end += 1
            events.append(Event(v, k, end - k, scale_note(rs, a)))
    return Phrase(tuple(events), x.length, x.m, tempo, rs.scale.eta)


# -- ABC ----------------------------------------------------------------------

_PITCH_NAMES = ("C", "^C", "D", "^D", "E", "F", "^F", "G", "^G", "A", "^A", "B")
BAR_UNITS = 8


def abc_pitch(note: Note) -> str:
    """Sharp spelling; octave 4 is bare uppercase, ``,`` goes down and lowercase/``'`` up."""
    if note.eta != 12:
        raise UnsupportedTemperamentError(f"ABC spelling needs 12-TET, got {note.eta}-TET")
    name = _PITCH_NAMES[note.step]
    if note.octave >= 5:
        return name.lower() + "'" * (note.octave - 5)
    return name + "," * (4 - note.octave)


def _voice_tokens(events: Sequence[Event], total: int) -> list[str]:
    tokens: list[str] = []
    pos = 0

    def emit(token: str, start: int, length: int) -> None:
        tokens.append(f"{token}{length}")
        if (start + length) // BAR_UNITS > start // BAR_UNITS:
            tokens.append("|")

    for e in events:
        if e.onset > pos:
            emit("z", pos, e.onset - pos)
        emit(abc_pitch(e.note), e.onset, e.duration)
        pos = e.onset + e.duration
    if pos < total:
        emit("z", pos, total - pos)
    return tokens


def to_abc(ph: Phrase, title: str = "", key: str = "Am", index: int = 1) -> str:
    if ph.eta != 12:
        raise UnsupportedTemperamentError(f"ABC export needs 12-TET, got {ph.eta}-TET")
    lines = [
        f"X:{index}",
        f"T:{title}",
        f"K:{key}",
        f"M:{BAR_UNITS}/8",
        "L:1/8",
        f"Q:1/8={ph.tempo.eighths_per_minute}",
    ]
    for v in range(1, ph.voices + 1):
        lines.append(f"V:voice{v}")
        lines.append(" ".join(_voice_tokens(ph.voice_events(v), ph.total_units)))
    return "\n".join(lines) + "\n"


_ABC_NOTE_RE = re.compile(r"(\^?[A-Ga-gz][,']*)(\d*)")


def read_abc_notes(body: str) -> list[tuple[str, int]]:
    """``(pitch, duration)`` pairs of an ABC voice line; bars are dropped, a missing duration is 1."""
    pairs = []
    for tok in body.replace("|", " ").split():
        match = _ABC_NOTE_RE.fullmatch(tok)
        if match is None:
            raise ParseError(f"unsupported ABC token {tok!r}")
        pairs.append((match.group(1), int(match.group(2) or 1)))
    return pairs


# -- JSON ---------------------------------------------------------------------


def to_json_events(ph: Phrase, tempo: Optional[Tempo] = None) -> str:
    tempo = tempo or ph.tempo
    events = sorted(ph.events, key=lambda e: (e.onset, e.voice))
    records = [
        {
            "voice": e.voice,
            "onset_units": e.onset,
            "duration_units": e.duration,
            "step": e.note.step,
            "octave": e.note.octave,
            "semitone": e.note.semitone,
            "onset_seconds": tempo.seconds(e.onset),
            "duration_seconds": tempo.seconds(e.duration),
        }
        for e in events
    ]
    doc = {
        "eta": ph.eta,
        "tempo": tempo.eighths_per_minute,
        "voices": ph.voices,
        "total_units": ph.total_units,
        "events": records,
    }
    return json.dumps(doc, indent=2) + "\n"
