"""Colored multi-patterns: elements ``(out, body, ins)`` of the bud operad.

Colors are plain strings compared by name. Partial and full composition
refuse mismatched colors with :class:`ColorError`; only the colored
composition :func:`colored_compose` tolerates them, by grafting units.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ColorError, DimensionError, ParseError, PositionError, ValidationError
from .patterns import MultiPattern, full_compose, mp_compose, mp_unit, parse_multipattern

Color = str


@dataclass(frozen=True)
class ColoredMultiPattern:
    out: Color
    body: MultiPattern
    ins: tuple[Color, ...]

    def __post_init__(self):
        object.__setattr__(self, "ins", tuple(self.ins))
        if not self.out or any(not c for c in self.ins):
            raise ValidationError("colors must be nonempty names")
        if len(self.ins) != self.body.arity:
            raise ValidationError(
                f"{len(self.ins)} input colors for a body of arity {self.body.arity}"
            )

    @property
    def arity(self) -> int:
        return len(self.ins)

    @property
    def m(self) -> int:
        return self.body.m

    @classmethod
    def parse(cls, text: str) -> ColoredMultiPattern:
        """Read ``out | pattern | in1 in2 ...``."""
        parts = text.split("|")
        if len(parts) != 3:
            raise ParseError(f"expected 'out | pattern | ins', got {len(parts)} field(s)")
        out = parts[0].strip()
        if not out or len(out.split()) != 1:
            raise ParseError(f"bad output color {parts[0].strip()!r}")
        return cls(out, parse_multipattern(parts[1]), tuple(parts[2].split()))

    def __str__(self) -> str:
        return f"{self.out} | {self.body} | {' '.join(self.ins)}"


def colored_unit(a: Color, m: int) -> ColoredMultiPattern:
    return ColoredMultiPattern(a, mp_unit(m), (a,))


def pruning(x: ColoredMultiPattern) -> MultiPattern:
    return x.body


def bud_compose(x: ColoredMultiPattern, i: int, y: ColoredMultiPattern) -> ColoredMultiPattern:
    if x.m != y.m:
        raise DimensionError(f"voice counts differ: {x.m} and {y.m}")
    if not 1 <= i <= x.arity:
        raise PositionError(f"position {i} outside [1, {x.arity}]")
    if x.ins[i - 1] != y.out:
        raise ColorError(
            f"input {i} has color {x.ins[i - 1]!r} but the grafted element outputs {y.out!r}",
            position=i,
        )
    return ColoredMultiPattern(
        x.out, mp_compose(x.body, i, y.body), x.ins[: i - 1] + y.ins + x.ins[i:]
    )


def bud_full_compose(
    x: ColoredMultiPattern, ys: Sequence[ColoredMultiPattern]
) -> ColoredMultiPattern:
    if len(ys) != x.arity:
        raise DimensionError(f"expected {x.arity} operands, got {len(ys)}")
    # check every color up front so the error names the first bad position
    for i, (color, y) in enumerate(zip(x.ins, ys), start=1):
        if color != y.out:
            raise ColorError(
                f"input {i} has color {color!r} but operand {i} outputs {y.out!r}", position=i
            )
    for y in ys:
        if y.m != x.m:
            raise DimensionError(f"voice counts differ: {x.m} and {y.m}")
    ins = tuple(c for y in ys for c in y.ins)
    return ColoredMultiPattern(x.out, full_compose(x.body, [y.body for y in ys]), ins)


def colored_compose(x: ColoredMultiPattern, y: ColoredMultiPattern) -> ColoredMultiPattern:
    """Graft a copy of ``y`` on every input of ``x`` colored ``y.out``; units elsewhere."""
    if x.m != y.m:
        raise DimensionError(f"voice counts differ: {x.m} and {y.m}")
    return bud_full_compose(
        x, [y if color == y.out else colored_unit(color, x.m) for color in x.ins]
    )
