"""Bud generating systems and the partial, full and colored random generators.

Every generator starts from the colored unit on the initial color and records
a :class:`GenerationTrace`. Randomness comes only from a :class:`RandomSource`;
passing ``steps=`` instead forces the choices, which is how fixed derivations
are replayed in tests.
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Sequence, Union

from .colored import (
    Color,
    ColoredMultiPattern,
    bud_compose,
    bud_full_compose,
    colored_compose,
    colored_unit,
)
from .errors import ParameterError, UnknownColorError, ValidationError
from .patterns import MultiPattern, parse_multipattern


class Mode(str, enum.Enum):
    PARTIAL = "partial"
    FULL = "full"
    COLORED = "colored"


@dataclass(frozen=True)
class Rule:
    name: str
    element: ColoredMultiPattern

    @property
    def out(self) -> Color:
        return self.element.out

    @property
    def ins(self) -> tuple[Color, ...]:
        return self.element.ins

    @property
    def body(self) -> MultiPattern:
        return self.element.body


@dataclass(frozen=True)
class BudGeneratingSystem:
    m: int
    colors: tuple[Color, ...]
    rules: tuple[Rule, ...]
    initial: Color

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        object.__setattr__(self, "rules", tuple(self.rules))
        if self.m < 1:
            raise ValidationError(f"voice count must be positive, got {self.m}")
        if not self.colors:
            raise ValidationError("a system needs at least one color")
        if len(set(self.colors)) != len(self.colors):
            raise ValidationError("duplicate colors")
        if self.initial not in self.colors:
            raise ValidationError(f"initial color {self.initial!r} is not declared")
        known = set(self.colors)
        names = set()
        for rule in self.rules:
            if rule.name in names:
                raise ValidationError(f"duplicate rule name {rule.name!r}")
            names.add(rule.name)
            if rule.body.m != self.m:
                raise ValidationError(
                    f"rule {rule.name!r} has {rule.body.m} voices, system has {self.m}"
                )
            for c in (rule.out, *rule.ins):
                if c not in known:
                    raise ValidationError(f"rule {rule.name!r} uses undeclared color {c!r}")

    def rules_for_color(self, a: Color) -> tuple[Rule, ...]:
        """Rules whose output color is ``a``, in declaration order."""
        if a not in self.colors:
            raise UnknownColorError(f"unknown color {a!r}")
        return tuple(r for r in self.rules if r.out == a)

    def rule(self, name: str) -> Rule:
        for r in self.rules:
            if r.name == name:
                return r
        raise ParameterError(f"no rule named {name!r}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "colors": list(self.colors),
            "initial": self.initial,
            "rules": [
                {"name": r.name, "out": r.out, "ins": list(r.ins), "pattern": str(r.body)}
                for r in self.rules
            ],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> BudGeneratingSystem:
        try:
            rules = tuple(
                Rule(
                    str(r["name"]),
                    ColoredMultiPattern(
                        str(r["out"]), parse_multipattern(r["pattern"]), tuple(r["ins"])
                    ),
                )
                for r in data["rules"]
            )
            return cls(int(data["m"]), tuple(data["colors"]), rules, str(data["initial"]))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed system description: {exc!r}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def loads(cls, text: str) -> BudGeneratingSystem:
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ValidationError(f"system file is not valid JSON: {exc}") from exc

    @classmethod
    def load(cls, path: Union[str, Path]) -> BudGeneratingSystem:
        return cls.loads(Path(path).read_text(encoding="utf-8"))


class RandomSource:
    """Seeded stream of uniform integer draws.

    Backed by CPython's Mersenne Twister; ``randrange(n)`` consumes whole
    32-bit words by rejection, so a seed gives the same draws on every
    platform.
    """

    ALGORITHM = "mt19937-randrange/1"

    def __init__(self, seed: int = 0):
        if seed < 0:
            raise ParameterError(f"seed must be unsigned, got {seed}")
        self.seed = seed
        self._rng = random.Random(seed)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        return self._rng.randrange(n)


# -- traces -------------------------------------------------------------------


@dataclass(frozen=True)
class PartialStep:
    """``rule`` is ``None`` for a skipped iteration; ``position`` is ``None`` on an arity-0 state."""

    position: Optional[int]
    rule: Optional[str]


@dataclass(frozen=True)
class FullStep:
    rules: Optional[tuple[str, ...]]

    def __post_init__(self):
        if self.rules is not None:
            object.__setattr__(self, "rules", tuple(self.rules))


@dataclass(frozen=True)
class ColoredStep:
    rule: Optional[str]


Step = Union[PartialStep, FullStep, ColoredStep]
_STEP_TYPES = {Mode.PARTIAL: PartialStep, Mode.FULL: FullStep, Mode.COLORED: ColoredStep}


def _is_skip(step: Step) -> bool:
    return (step.rules if isinstance(step, FullStep) else step.rule) is None


@dataclass(frozen=True)
class GenerationTrace:
    mode: Mode
    seed: Optional[int]
    steps: tuple[Step, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "steps", tuple(self.steps))

    @property
    def applied(self) -> int:
        return sum(not _is_skip(s) for s in self.steps)

    def to_dict(self) -> dict[str, Any]:
        steps: list[dict[str, Any]] = []
        for s in self.steps:
            if isinstance(s, PartialStep):
                steps.append({"position": s.position, "rule": s.rule})
            elif isinstance(s, FullStep):
                steps.append({"rules": None if s.rules is None else list(s.rules)})
            else:
                steps.append({"rule": s.rule})
        return {"mode": self.mode.value, "seed": self.seed, "steps": steps}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> GenerationTrace:
        try:
            mode = Mode(data["mode"])
            step_type = _STEP_TYPES[mode]
            steps = tuple(step_type(**s) for s in data["steps"])
            return cls(mode, data.get("seed"), steps)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed trace: {exc!r}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def loads(cls, text: str) -> GenerationTrace:
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ValidationError(f"trace file is not valid JSON: {exc}") from exc


# -- generators ---------------------------------------------------------------


def _initial(system: BudGeneratingSystem) -> ColoredMultiPattern:
    return colored_unit(system.initial, system.m)


def _plan(k: int, rng: Optional[RandomSource], steps: Optional[Sequence[Step]]):
    if steps is None:
        if k < 0:
            raise ParameterError(f"k must be nonnegative, got {k}")
        if rng is None:
            rng = RandomSource(0)
        return k, rng, None
    return len(steps), None, list(steps)


def generate_partial(
    system: BudGeneratingSystem,
    k: int = 0,
    rng: Optional[RandomSource] = None,
    *,
    steps: Optional[Sequence[PartialStep]] = None,
) -> tuple[MultiPattern, GenerationTrace]:
    """Repeat ``k`` times: pick an input at random and graft a random rule of its color."""
    k, rng, forced = _plan(k, rng, steps)
    x = _initial(system)
    record: list[PartialStep] = []
    for n in range(k):
        if forced is not None:
            step = forced[n]
            if step.position is None:
                if x.arity:
                    raise ParameterError(f"step {n + 1}: missing position")
                record.append(PartialStep(None, None))
                continue
            i = step.position
            if not 1 <= i <= x.arity:
                raise ParameterError(f"step {n + 1}: position {i} outside [1, {x.arity}]")
            candidates = system.rules_for_color(x.ins[i - 1])
            if step.rule is None:
                if candidates:
                    raise ParameterError(f"step {n + 1}: skip at position {i} but rules apply")
                record.append(PartialStep(i, None))
                continue
            rule = system.rule(step.rule)
        else:
            if x.arity == 0:
                record.append(PartialStep(None, None))
                continue
            i = rng.below(x.arity) + 1
            candidates = system.rules_for_color(x.ins[i - 1])
            if not candidates:
                record.append(PartialStep(i, None))
                continue
            rule = candidates[rng.below(len(candidates))]
        x = bud_compose(x, i, rule.element)
        record.append(PartialStep(i, rule.name))
    return x.body, GenerationTrace(Mode.PARTIAL, rng.seed if rng else None, record)


def generate_full(
    system: BudGeneratingSystem,
    k: int = 0,
    rng: Optional[RandomSource] = None,
    *,
    steps: Optional[Sequence[FullStep]] = None,
) -> tuple[MultiPattern, GenerationTrace]:
    """Repeat ``k`` times: if every input has rules, graft one random rule on each."""
    k, rng, forced = _plan(k, rng, steps)
    x = _initial(system)
    record: list[FullStep] = []
    for n in range(k):
        pools = [system.rules_for_color(c) for c in x.ins]
        blocked = any(not p for p in pools)
        if forced is not None:
            names = forced[n].rules
            if names is None:
                if not blocked:
                    raise ParameterError(f"step {n + 1}: skip but every input has rules")
                record.append(FullStep(None))
                continue
            chosen = [system.rule(name) for name in names]
        else:
            if blocked:
                record.append(FullStep(None))
                continue
            chosen = [pool[rng.below(len(pool))] for pool in pools]
        x = bud_full_compose(x, [r.element for r in chosen])
        record.append(FullStep(tuple(r.name for r in chosen)))
    return x.body, GenerationTrace(Mode.FULL, rng.seed if rng else None, record)


def generate_colored(
    system: BudGeneratingSystem,
    k: int = 0,
    rng: Optional[RandomSource] = None,
    *,
    steps: Optional[Sequence[ColoredStep]] = None,
) -> tuple[MultiPattern, GenerationTrace]:
    """Repeat ``k`` times: pick any rule at random and apply ``x := x ⊙ rule``."""
    k, rng, forced = _plan(k, rng, steps)
    x = _initial(system)
    record: list[ColoredStep] = []
    for n in range(k):
        if forced is not None:
            name = forced[n].rule
            if name is None:
                if system.rules:
                    raise ParameterError(f"step {n + 1}: skip but the system has rules")
                record.append(ColoredStep(None))
                continue
            rule = system.rule(name)
        else:
            if not system.rules:
                record.append(ColoredStep(None))
                continue
            rule = system.rules[rng.below(len(system.rules))]
        x = colored_compose(x, rule.element)
        record.append(ColoredStep(rule.name))
    return x.body, GenerationTrace(Mode.COLORED, rng.seed if rng else None, record)


GENERATORS = {
    Mode.PARTIAL: generate_partial,
    Mode.FULL: generate_full,
    Mode.COLORED: generate_colored,
}


def generate(
    system: BudGeneratingSystem, mode: Union[Mode, str], k: int, seed: int = 0
) -> tuple[MultiPattern, GenerationTrace]:
    return GENERATORS[Mode(mode)](system, k, RandomSource(seed))


def replay(system: BudGeneratingSystem, trace: GenerationTrace) -> list[ColoredMultiPattern]:
    """All states of a derivation, initial element first.

    Uses the colored compositions directly and never consults a generator, so
    it doubles as a soundness check on recorded traces.
    """
    x = _initial(system)
    states = [x]
    for step in trace.steps:
        if isinstance(step, PartialStep):
            if step.rule is not None:
                x = bud_compose(x, step.position, system.rule(step.rule).element)
        elif isinstance(step, FullStep):
            if step.rules is not None:
                x = bud_full_compose(x, [system.rule(n).element for n in step.rules])
        elif step.rule is not None:
            x = colored_compose(x, system.rule(step.rule).element)
        states.append(x)
    return states


def example_system() -> BudGeneratingSystem:
    """A 2-voice system over three colors with five rules (c1..c5)."""
    specs = [
        ("c1", "b1 | 0 2 . 1 . 0 4 ; -5 . . 0 0 0 0 | b3 b2 b1 b1 b3"),
        ("c2", "b1 | 1 . 0 ; 0 . 1 | b1 b1"),
        ("c3", "b2 | -1 ; -1 | b1"),
        ("c4", "b2 | 0 0 ; 0 0 | b1 b1"),
        ("c5", "b3 | 0 ; 0 | b3"),
    ]
    rules = tuple(Rule(name, ColoredMultiPattern.parse(text)) for name, text in specs)
    return BudGeneratingSystem(2, ("b1", "b2", "b3"), rules, "b1")
