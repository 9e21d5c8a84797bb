"""Degree patterns, rhythm patterns, patterns and multi-patterns.

A pattern is stored as its concise word: a tuple whose letters are either an
``int`` (a degree sounding on a beat) or ``None`` (a rest). The degree pattern
is the subword of integers and the rhythm pattern replaces each integer by a
beat, so both views are derived rather than stored.

All four families are nonsymmetric operads under the ``*_compose`` functions
below; multi-patterns compose voice by voice.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DimensionError, ParseError, PositionError, ValidationError

Letter = Optional[int]

REST: Letter = None
REST_TOKEN = "."
VOICE_SEPARATOR = " ; "

# Accepted on input only: the box glyph for a rest and the typographic minus.
_REST_ALIASES = {".", "□"}
_MINUS = "−"
_DEGREE_RE = re.compile(r"[+-]?\d+\Z")


class NegativeZeroWarning(UserWarning):
    """The token ``-0`` was read as degree 0."""


def _check_position(i: int, arity: int) -> None:
    if not 1 <= i <= arity:
        raise PositionError(f"position {i} outside [1, {arity}]")


@dataclass(frozen=True)
class DegreePattern:
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(d) for d in self.entries))

    @property
    def arity(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return " ".join(map(str, self.entries))


@dataclass(frozen=True)
class RhythmPattern:
    """Word over {rest, beat}; ``True`` is a beat."""

    letters: tuple[bool, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(bool(b) for b in self.letters))

    @property
    def arity(self) -> int:
        return sum(self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    @classmethod
    def parse(cls, text: str) -> RhythmPattern:
        """Read ``x``/``.`` letters (whitespace ignored); ``■``/``□`` also work."""
        letters = []
        for pos, ch in enumerate(text):
            if ch.isspace():
                continue
            if ch in "xX■":
                letters.append(True)
            elif ch in _REST_ALIASES:
                letters.append(False)
            else:
                raise ParseError(f"bad rhythm letter {ch!r} at offset {pos}", pos)
        return cls(tuple(letters))

    def __str__(self) -> str:
        return "".join("x" if b else "." for b in self.letters)


@dataclass(frozen=True)
class Pattern:
    word: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "word", tuple(None if a is None else int(a) for a in self.word)
        )

    @classmethod
    def from_parts(cls, degrees: DegreePattern, rhythm: RhythmPattern) -> Pattern:
        if degrees.arity != rhythm.arity:
            raise ValidationError(
                f"degree pattern has arity {degrees.arity}, rhythm pattern {rhythm.arity}"
            )
        it = iter(degrees.entries)
        return cls(tuple(next(it) if beat else None for beat in rhythm.letters))

    @classmethod
    def parse(cls, text: str) -> Pattern:
        mp = parse_multipattern(text)
        if mp.m != 1:
            raise DimensionError(f"expected a single voice, got {mp.m}")
        return mp.voices[0]

    @property
    def degrees(self) -> DegreePattern:
        return DegreePattern(tuple(a for a in self.word if a is not None))

    @property
    def rhythm(self) -> RhythmPattern:
        return RhythmPattern(tuple(a is not None for a in self.word))

    @property
    def arity(self) -> int:
        return sum(a is not None for a in self.word)

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return " ".join(REST_TOKEN if a is None else str(a) for a in self.word)


@dataclass(frozen=True)
class MultiPattern:
    """``m`` patterns of one arity and one length, stacked as voices."""

    voices: tuple[Pattern, ...]

    def __post_init__(self):
        voices = tuple(v if isinstance(v, Pattern) else Pattern(tuple(v)) for v in self.voices)
        if not voices:
            raise ValidationError("a multi-pattern needs at least one voice")
        arity, length = voices[0].arity, voices[0].length
        for r, v in enumerate(voices[1:], start=2):
            if v.arity != arity:
                raise ValidationError(
                    f"row {r} has arity {v.arity}, row 1 has arity {arity}", row=r
                )
            if v.length != length:
                raise ValidationError(
                    f"row {r} has length {v.length}, row 1 has length {length}", row=r
                )
        object.__setattr__(self, "voices", voices)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Letter]]) -> MultiPattern:
        return cls(tuple(Pattern(tuple(r)) for r in rows))

    @classmethod
    def parse(cls, text: str) -> MultiPattern:
        return parse_multipattern(text)

    @property
    def m(self) -> int:
        return len(self.voices)

    @property
    def arity(self) -> int:
        return self.voices[0].arity

    @property
    def length(self) -> int:
        return self.voices[0].length

    @property
    def rows(self) -> tuple[tuple[Letter, ...], ...]:
        return tuple(v.word for v in self.voices)

    def __getitem__(self, j: int) -> Pattern:
        return self.voices[j]

    def __str__(self) -> str:
        return format_multipattern(self)


@dataclass(frozen=True)
class MorphismParams:
    """Per-voice degree multipliers and the number of rests replacing each rest."""

    alphas: tuple[int, ...]
    beta: int = 1

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(int(a) for a in self.alphas))
        if self.beta < 0:
            raise ValidationError(f"beta must be nonnegative, got {self.beta}")


# -- units --------------------------------------------------------------------

DP_UNIT = DegreePattern((0,))
RP_UNIT = RhythmPattern((True,))
P_UNIT = Pattern((0,))


def mp_unit(m: int) -> MultiPattern:
    if m < 1:
        raise DimensionError(f"voice count must be positive, got {m}")
    return MultiPattern((P_UNIT,) * m)


# -- partial compositions -----------------------------------------------------


def dp_compose(d: DegreePattern, i: int, d2: DegreePattern) -> DegreePattern:
    _check_position(i, d.arity)
    shift = d.entries[i - 1]
    return DegreePattern(
        d.entries[: i - 1] + tuple(shift + e for e in d2.entries) + d.entries[i:]
    )


def _nth_beat(letters: Sequence[bool], i: int) -> int:
    seen = 0
    for k, a in enumerate(letters):
        if a:
            seen += 1
            if seen == i:
                return k
    raise PositionError(f"position {i} outside [1, {seen}]")


def rp_compose(r: RhythmPattern, i: int, r2: RhythmPattern) -> RhythmPattern:
    _check_position(i, r.arity)
    k = _nth_beat(r.letters, i)
    return RhythmPattern(r.letters[:k] + r2.letters + r.letters[k + 1 :])


def pattern_compose(p: Pattern, i: int, p2: Pattern) -> Pattern:
    """Hadamard product of :func:`dp_compose` and :func:`rp_compose`."""
    _check_position(i, p.arity)
    return Pattern.from_parts(
        dp_compose(p.degrees, i, p2.degrees), rp_compose(p.rhythm, i, p2.rhythm)
    )


def _check_same_m(x: MultiPattern, y: MultiPattern) -> None:
    if x.m != y.m:
        raise DimensionError(f"voice counts differ: {x.m} and {y.m}")


def mp_compose(x: MultiPattern, i: int, y: MultiPattern) -> MultiPattern:
    _check_same_m(x, y)
    _check_position(i, x.arity)
    return MultiPattern(tuple(pattern_compose(a, i, b) for a, b in zip(x.voices, y.voices)))


def full_compose(x: MultiPattern, ys: Sequence[MultiPattern]) -> MultiPattern:
    """``x ∘ [y1, ..., yn]``: graft every ``y`` at once.

    Equal to folding :func:`mp_compose` from the right, ``(...(x ∘n yn)...) ∘1 y1``,
    but done in one pass over the columns of ``x``.
    """
    if len(ys) != x.arity:
        raise DimensionError(f"expected {x.arity} operands, got {len(ys)}")
    for y in ys:
        _check_same_m(x, y)
    rows = []
    for j, voice in enumerate(x.voices):
        row: list[Letter] = []
        n = 0
        for a in voice.word:
            if a is None:
                row.append(None)
            else:
                row.extend(None if b is None else a + b for b in ys[n].voices[j].word)
                n += 1
        rows.append(row)
    return MultiPattern.from_rows(rows)


# -- morphisms ----------------------------------------------------------------


def phi(x: MultiPattern, params: MorphismParams) -> MultiPattern:
    """Scale degrees of voice ``j`` by ``alphas[j]``; expand each rest into ``beta`` rests."""
    if len(params.alphas) != x.m:
        raise DimensionError(f"{len(params.alphas)} multipliers for {x.m} voices")
    rows = []
    for alpha, voice in zip(params.alphas, x.voices):
        row: list[Letter] = []
        for a in voice.word:
            if a is None:
                row.extend([None] * params.beta)
            else:
                row.append(alpha * a)
        rows.append(row)
    return MultiPattern.from_rows(rows)


def mirror(x: MultiPattern) -> MultiPattern:
    return MultiPattern.from_rows(v.word[::-1] for v in x.voices)


# -- durations ----------------------------------------------------------------


def duration_sequence(r: RhythmPattern) -> tuple[int, ...]:
    """Lengths of the rest runs around the beats: ``(alpha_0, ..., alpha_n)``."""
    runs = [0]
    for beat in r.letters:
        if beat:
            runs.append(0)
        else:
            runs[-1] += 1
    return tuple(runs)


def rhythm_from_durations(alphas: Sequence[int]) -> RhythmPattern:
    if not alphas:
        raise ValidationError("a duration sequence has at least one entry")
    if any(a < 0 for a in alphas):
        raise ValidationError("duration sequence entries must be nonnegative")
    letters = [False] * alphas[0]
    for a in alphas[1:]:
        letters.append(True)
        letters.extend([False] * a)
    return RhythmPattern(tuple(letters))


# -- text form ----------------------------------------------------------------


def _parse_token(tok: str, offset: int) -> Letter:
    if tok in _REST_ALIASES:
        return None
    norm = tok.replace(_MINUS, "-")
    if not _DEGREE_RE.match(norm):
        raise ParseError(f"bad token {tok!r} at offset {offset}", offset)
    value = int(norm)
    if value == 0 and norm.startswith("-"):
        warnings.warn(
            f"token {tok!r} at offset {offset} read as degree 0", NegativeZeroWarning, stacklevel=4
        )
    return value


def parse_multipattern(text: str) -> MultiPattern:
    """Read the canonical text form.

    Voices are separated by ``;`` or newlines, tokens by whitespace. A rest is
    ``.`` and a degree is a decimal integer (``-0`` reads as 0 with a
    :class:`NegativeZeroWarning`).
    """
    stripped = text.strip()
    base = text.find(stripped) if stripped else 0
    rows: list[list[Letter]] = []
    start = base
    for chunk in re.split(r"[;\n]", stripped):
        rows.append(
            [_parse_token(t.group(), start + t.start()) for t in re.finditer(r"\S+", chunk)]
        )
        start += len(chunk) + 1
    return MultiPattern.from_rows(rows)


def format_multipattern(x: MultiPattern) -> str:
    return VOICE_SEPARATOR.join(str(v) for v in x.voices)
