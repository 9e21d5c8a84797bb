"""Bud generating systems that produce variations of a single pattern.

All four share the shape ``c1 = (b1, p, b2...)``, ``c2 = (b2, p, b2...)`` plus
one or more ``b2 -> b3`` rules that alter a single beat. Color ``b3`` has no
rules, so an altered beat is never altered again.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .budgen import BudGeneratingSystem, Rule
from .colored import ColoredMultiPattern
from .errors import ParameterError
from .patterns import DegreePattern, MultiPattern, Pattern, RhythmPattern

COLORS = ("b1", "b2", "b3")


class Kind(str, enum.Enum):
    TEM = "tem"
    RHY = "rhy"
    HAR = "har"
    ARP = "arp"


def _check_base(p: Pattern) -> None:
    if p.arity < 1:
        raise ParameterError("the base pattern needs at least one degree")


def _growth_rules(body: MultiPattern) -> list[Rule]:
    ins = ("b2",) * body.arity
    return [
        Rule("c1", ColoredMultiPattern("b1", body, ins)),
        Rule("c2", ColoredMultiPattern("b2", body, ins)),
    ]


def _system(m: int, rules: list[Rule]) -> BudGeneratingSystem:
    return BudGeneratingSystem(m, COLORS, tuple(rules), "b1")


def build_temporizator(p: Pattern, t: int) -> BudGeneratingSystem:
    """Lengthen some beats of ``p`` by 1 to ``t`` units, via rules ``0 .^j`` named ``c'j``."""
    _check_base(p)
    if t < 1:
        raise ParameterError(f"t must be at least 1, got {t}")
    rules = _growth_rules(MultiPattern((p,)))
    for j in range(1, t + 1):
        body = MultiPattern((Pattern((0,) + (None,) * j),))
        rules.append(Rule(f"c'{j}", ColoredMultiPattern("b2", body, ("b3",))))
    return _system(1, rules)


def build_rhythmic(p: Pattern, r: RhythmPattern) -> BudGeneratingSystem:
    """Replace some beats of ``p`` by the rhythm ``r`` (all degrees 0); ``r`` empty deletes a beat."""
    _check_base(p)
    repeat = Pattern.from_parts(DegreePattern((0,) * r.arity), r)
    rules = _growth_rules(MultiPattern((p,)))
    rules.append(Rule("c3", ColoredMultiPattern("b2", MultiPattern((repeat,)), ("b3",) * r.arity)))
    return _system(1, rules)


def _chord_degrees(d: DegreePattern) -> tuple[int, ...]:
    if d.arity < 1:
        raise ParameterError("the chord degree pattern must be nonempty")
    return d.entries


def build_harmonizator(p: Pattern, d: DegreePattern) -> BudGeneratingSystem:
    """``len(d)`` copies of ``p`` stacked; a beat may become the chord column ``d``."""
    _check_base(p)
    chord = _chord_degrees(d)
    m = len(chord)
    rules = _growth_rules(MultiPattern((p,) * m))
    column = MultiPattern(tuple(Pattern((di,)) for di in chord))
    rules.append(Rule("c3", ColoredMultiPattern("b2", column, ("b3",))))
    return _system(m, rules)


def build_arpeggiator(p: Pattern, d: DegreePattern) -> BudGeneratingSystem:
    """Like :func:`build_harmonizator` but the chord is spread over ``len(d)`` units, one voice each."""
    _check_base(p)
    chord = _chord_degrees(d)
    m = len(chord)
    rules = _growth_rules(MultiPattern((p,) * m))
    diagonal = MultiPattern(
        tuple(Pattern((None,) * i + (di,) + (None,) * (m - 1 - i)) for i, di in enumerate(chord))
    )
    rules.append(Rule("c3", ColoredMultiPattern("b2", diagonal, ("b3",))))
    return _system(m, rules)


@dataclass(frozen=True)
class VariationSpec:
    kind: Kind
    base: Pattern
    tem_t: Optional[int] = None
    rhy_r: Optional[RhythmPattern] = None
    degrees: Optional[DegreePattern] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        wanted = {
            Kind.TEM: "tem_t",
            Kind.RHY: "rhy_r",
            Kind.HAR: "degrees",
            Kind.ARP: "degrees",
        }[self.kind]
        for name in ("tem_t", "rhy_r", "degrees"):
            present = getattr(self, name) is not None
            if name == wanted and not present:
                raise ParameterError(f"{self.kind.value} needs {name}")
            if name != wanted and present:
                raise ParameterError(f"{self.kind.value} does not take {name}")

    def build(self) -> BudGeneratingSystem:
        if self.kind is Kind.TEM:
            return build_temporizator(self.base, self.tem_t)
        if self.kind is Kind.RHY:
            return build_rhythmic(self.base, self.rhy_r)
        if self.kind is Kind.HAR:
            return build_harmonizator(self.base, self.degrees)
        return build_arpeggiator(self.base, self.degrees)
