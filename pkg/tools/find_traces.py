"""Search for a forced partial-mode trace whose output equals a target pattern.

Used once to build the frozen fixtures in tests/fixtures/traces.json. The
search expands inputs left to right: at the current input it either moves on
or grafts a rule there. Every column left of the current input is final, so
a mismatch with the target prefix prunes the branch.
"""

from __future__ import annotations

import argparse
import json
import sys

from musicbox import PartialStep, VariationSpec, bud_compose, colored_unit, generate_partial
from musicbox.patterns import DegreePattern, Pattern, RhythmPattern, parse_multipattern


def _beat_column(word, i):
    seen = 0
    for k, a in enumerate(word):
        if a is not None:
            seen += 1
            if seen == i:
                return k
    return len(word)


def search(system, target, max_steps):
    rows = target.rows
    start = colored_unit(system.initial, system.m)

    def dfs(x, i, path):
        if len(path) > max_steps or x.body.length > target.length:
            return None
        cut = _beat_column(x.body.voices[0].word, i)
        for r, row in enumerate(x.body.rows):
            if row[:cut] != rows[r][:cut]:
                return None
        if i > x.arity:
            return path if x.body == target else None
        for rule in system.rules_for_color(x.ins[i - 1]):
            found = dfs(bud_compose(x, i, rule.element), i, path + [(i, rule.name)])
            if found is not None:
                return found
        return dfs(x, i + 1, path)

    return dfs(start, 1, [])


def pad(system, path, k):
    """Append skip steps at inputs without rules until the trace has ``k`` steps."""
    steps = [PartialStep(i, name) for i, name in path]
    if len(steps) < k:
        x = colored_unit(system.initial, system.m)
        for s in steps:
            x = bud_compose(x, s.position, system.rule(s.rule).element)
        dead = [n for n, c in enumerate(x.ins, start=1) if not system.rules_for_color(c)]
        if not dead:
            return None
        steps += [PartialStep(dead[0], None)] * (k - len(steps))
    return steps


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--kind", required=True)
    ap.add_argument("--pattern", required=True)
    ap.add_argument("--t", type=int)
    ap.add_argument("--rhythm")
    ap.add_argument("--degrees")
    ap.add_argument("--target", required=True)
    ap.add_argument("-k", type=int, required=True)
    args = ap.parse_args(argv)
    spec = VariationSpec(
        args.kind,
        Pattern.parse(args.pattern),
        tem_t=args.t,
        rhy_r=RhythmPattern.parse(args.rhythm) if args.rhythm else None,
        degrees=DegreePattern(Pattern.parse(args.degrees).degrees.entries) if args.degrees else None,
    )
    system = spec.build()
    target = parse_multipattern(args.target)
    path = search(system, target, args.k)
    if path is None:
        print("no derivation within k steps", file=sys.stderr)
        return 1
    steps = pad(system, path, args.k)
    if steps is None:
        print(f"derivation of {len(path)} steps cannot be padded", file=sys.stderr)
        return 1
    out, _ = generate_partial(system, steps=steps)
    assert out == target
    print(json.dumps([[s.position, s.rule] for s in steps]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
