"""Acceptance suite: nine criteria, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

import json
import random
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import laws  # noqa: E402
import oracles  # noqa: E402
from musicbox import (  # noqa: E402
    BUILTIN_SCALES,
    ColoredMultiPattern,
    ColoredStep,
    DegreePattern,
    FullStep,
    GenerationTrace,
    Mode,
    MorphismParams,
    Note,
    PartialStep,
    Pattern,
    RhythmPattern,
    RootedScale,
    Scale,
    bud_compose,
    decompose,
    dp_compose,
    duration_sequence,
    eval_tree,
    example_system,
    generate,
    mirror,
    mp_compose,
    parse_multipattern,
    parse_tree,
    pattern_compose,
    phi,
    render,
    replay,
    rp_compose,
    scale_note,
    to_abc,
)
from musicbox.budgen import GENERATORS  # noqa: E402
from musicbox.render import abc_pitch, read_abc_notes  # noqa: E402

P = parse_multipattern
C = ColoredMultiPattern.parse


def _notes(rs, degrees):
    return [(n.step, n.octave) for n in (scale_note(rs, d) for d in degrees)]


def _bodies(abc):
    return [ln for ln in abc.splitlines() if ln and ln[1:2] != ":"]


def criterion_1():
    start = time.perf_counter()
    trials = 1000
    for name in laws.FAMILIES:
        failures = laws.check_family(name, trials, seed=2024)
        assert not failures, f"{name}: {len(failures)} failures, first {failures[0]}"
    elapsed = time.perf_counter() - start
    assert elapsed < 10, f"took {elapsed:.2f}s"
    return f"{trials} triples x 3 laws x {len(laws.FAMILIES)} operads in {elapsed:.2f}s"


def criterion_2():
    checks = {
        "degree composition": dp_compose(DegreePattern((0, 1, 2, 3, 4)), 2, DegreePattern((-1, 1, 0)))
        == DegreePattern((0, 0, 2, 1, 2, 3, 4)),
        "rhythm composition": rp_compose(RhythmPattern.parse("xx.x..x"), 3, RhythmPattern.parse(".x.x"))
        == RhythmPattern.parse("xx..x.x..x"),
        "pattern composition": pattern_compose(Pattern.parse(". -2 1 . 1"), 2, Pattern.parse("0 . -1"))
        == Pattern.parse(". -2 1 . 0 . 1"),
        "bud composition": bud_compose(
            C("b3 | 0 1 . ; -1 . 0 | b2 b1"), 2, C("b1 | 1 1 2 ; 2 -1 -2 | b3 b3 b2")
        )
        == C("b3 | 0 2 2 3 . ; -1 . 2 -1 -2 | b2 b3 b3 b2"),
        "phi": phi(P("1 . . 2 ; . 1 . 3 ; 3 1 . ."), MorphismParams((2, 0, -1), 2))
        == P("2 . . . . 4 ; . . 0 . . 0 ; -3 -1 . . . ."),
        "mirror": mirror(P("1 . . 2 ; . 1 . 3 ; 3 1 . .")) == P("2 . . 1 ; 3 . 1 . ; . . 1 3"),
        "duration sequence": duration_sequence(RhythmPattern.parse(".xx.x...xx.x"))
        == (1, 0, 1, 3, 0, 1, 0),
        "hirajoshi notes": _notes(RootedScale(Scale(BUILTIN_SCALES["hirajoshi"]), Note(0, 4)), range(-2, 6))
        == [(7, 3), (8, 3), (0, 4), (2, 4), (3, 4), (7, 4), (8, 4), (0, 5)],
        "major notes": _notes(RootedScale(Scale(BUILTIN_SCALES["major"]), Note(2, 4)), range(-1, 8))
        == [(1, 4), (2, 4), (4, 4), (6, 4), (7, 4), (9, 4), (11, 4), (1, 5), (2, 5)],
        "degree pattern notes": _notes(
            RootedScale(Scale(BUILTIN_SCALES["major"]), Note(0, 4)), (1, 0, -2, -3, 5, 0, 7)
        )
        == [(2, 4), (0, 4), (9, 3), (7, 3), (9, 4), (0, 4), (0, 5)],
    }
    bad = [k for k, ok in checks.items() if not ok]
    assert not bad, f"mismatch: {', '.join(bad)}"
    return f"{len(checks)} fixtures match"


def criterion_3():
    x = P(". -2 -1 . 0 ; 0 1 . . 1")
    y = P("1 . 0 0 ; -3 . 0 4")
    got = mp_compose(x, 2, y)
    ref = oracles.compose_rows([list(r) for r in x.rows], 2, [list(r) for r in y.rows])
    assert [list(r) for r in got.rows] == ref, "two-voice composition disagrees with the oracle"
    assert got.rows[0] == (None, -2, 0, None, -1, -1, None, 0), f"row 1 is {got.rows[0]}"

    lib = {"m1": P("0 . ; . 0"), "m2": P("1 0 1 ; -7 0 0"), "m3": P("1 2 . 3 ; -1 0 . 1")}
    tree = eval_tree(parse_tree("(m2 _ (m1 (m2 _ _ _)) (m3 _ _ _))", lib))
    rows = {k: [list(r) for r in v.rows] for k, v in lib.items()}
    ref = oracles.compose_rows(
        oracles.compose_rows(rows["m2"], 3, rows["m3"]), 2, oracles.compose_rows(rows["m1"], 1, rows["m2"])
    )
    assert [list(r) for r in tree.rows] == ref, "tree evaluation disagrees with the oracle"
    assert tree.rows[0][-1] == 4, f"final degree {tree.rows[0][-1]}"
    return "row 1 = . -2 0 . -1 -1 . 0; tree final degree = 4; both match the oracle"


CHAINS = {
    Mode.PARTIAL: (
        [PartialStep(1, "c2"), PartialStep(2, "c1"), PartialStep(3, "c4")],
        [
            "b1 | 1 . 0 ; 0 . 1 | b1 b1",
            "b1 | 1 . 0 2 . 1 . 0 4 ; 0 . -4 . . 1 1 1 1 | b1 b3 b2 b1 b1 b3",
            "b1 | 1 . 0 2 2 . 1 . 0 4 ; 0 . -4 . . 1 1 1 1 1 | b1 b3 b1 b1 b1 b1 b3",
        ],
    ),
    Mode.FULL: (
        [FullStep(("c1",)), FullStep(("c5", "c3", "c2", "c1", "c5"))],
        [
            "b1 | 0 2 . 1 . 0 4 ; -5 . . 0 0 0 0 | b3 b2 b1 b1 b3",
            "b1 | 0 1 . 2 . 1 . 0 2 . 1 . 0 4 4 ; -5 . . -1 0 . 1 -5 . . 0 0 0 0 0 "
            "| b3 b1 b1 b1 b3 b2 b1 b1 b3 b3",
        ],
    ),
    Mode.COLORED: (
        [ColoredStep("c1"), ColoredStep("c2"), ColoredStep("c3")],
        [
            "b1 | 0 2 . 1 . 0 4 ; -5 . . 0 0 0 0 | b3 b2 b1 b1 b3",
            "b1 | 0 2 . 2 . 1 . 1 . 0 4 ; -5 . . 0 0 . 1 0 . 1 0 | b3 b2 b1 b1 b1 b1 b3",
            "b1 | 0 1 . 2 . 1 . 1 . 0 4 ; -5 . . -1 0 . 1 0 . 1 0 | b3 b1 b1 b1 b1 b1 b3",
        ],
    ),
}


def criterion_4():
    system = example_system()
    for mode, (steps, shown) in CHAINS.items():
        states = replay(system, GenerationTrace(mode, None, steps))[1:]
        assert [str(s) for s in states] == [str(C(t)) for t in shown], f"{mode.value} chain differs"
        out, _ = GENERATORS[mode](system, steps=steps)
        assert out == states[-1].body, f"{mode.value} generator disagrees with replay"
    return "partial 3, full 2, colored 3 intermediates reproduced"


def criterion_5():
    rng = random.Random(5)
    seen = set()
    for _ in range(100):
        name, system, mode, seed, cap = laws.random_system_run(rng)
        k = rng.randint(0, cap)
        out, trace = generate(system, mode, k, seed)
        assert replay(system, trace)[-1].body == out, f"{name}/{mode} seed={seed} k={k}"
        seen.add((name, mode))
    return f"100 runs over {len(seen)} (system, mode) pairs, k caps {laws.K_CAP}"


def criterion_6():
    rng = random.Random(6)
    trials = 1000
    for _ in range(trials):
        m = rng.randint(1, 3)
        x = laws.sample_mp(rng, m, min_arity=1)
        y = laws.sample_mp(rng, m)
        i = rng.randint(1, x.arity)
        params = MorphismParams(tuple(rng.randint(-3, 3) for _ in range(m)), rng.randint(0, 3))
        assert phi(mp_compose(x, i, y), params) == mp_compose(phi(x, params), i, phi(y, params)), (x, i, y)
        assert mirror(mp_compose(x, i, y)) == mp_compose(mirror(x), x.arity + 1 - i, mirror(y)), (x, i, y)
    return f"{trials} pairs each for phi and mirror"


def criterion_7():
    rng = random.Random(7)
    trials = 1000
    for _ in range(trials):
        length = rng.randint(0, 24)
        arity = rng.randint(0, min(12, length))
        beats = set(rng.sample(range(length), arity))
        p = Pattern(tuple(rng.randint(-10, 10) if k in beats else None for k in range(length)))
        assert eval_tree(decompose(p)).voices[0] == p, p
    return f"{trials} patterns recomposed"


def criterion_8():
    hm = RootedScale(Scale(BUILTIN_SCALES["harmonic-minor"]), Note(9, 3))
    ph = render(P("0 . 1 2 -1 . 0 1 -2 . -1 0 0 . . ."), hm)
    got = read_abc_notes(_bodies(to_abc(ph))[0])
    assert got == read_abc_notes("A,2 B, C ^G,2 A, B, | F,2 ^G, A, A,4 |"), got

    nm = RootedScale(Scale(BUILTIN_SCALES["natural-minor"]), Note(9, 3))
    ph = render(P("0 4 . 4 0 0 ; -7 -7 0 . -3 -3"), nm)
    got = [read_abc_notes(b) for b in _bodies(to_abc(ph))]
    want = [read_abc_notes("A,1 E2 E1 A,1 A,1"), read_abc_notes("A,,1 A,,1 A,2 E,1 E,1")]
    assert got == want, got

    rng = random.Random(8)
    for name, parts in BUILTIN_SCALES.items():
        rs = RootedScale(Scale(parts), Note(9, 3))
        for d in range(-100, 101):
            assert scale_note(rs, d + len(parts)).semitone == scale_note(rs, d).semitone + 12, (name, d)
        for _ in range(50):
            x = laws.sample_mp(rng, rng.randint(1, 3), max_length=16)
            out = render(x, rs)
            for v, voice in enumerate(x.voices, start=1):
                events = out.voice_events(v)
                rests = next((k for k, a in enumerate(voice.word) if a is not None), voice.length)
                assert sum(e.duration for e in events) + rests == x.length, (name, x)
                assert [abc_pitch(e.note) for e in events] == [
                    abc_pitch(scale_note(rs, a)) for a in voice.word if a is not None
                ]
    return "both scores match; periodicity and conservation hold for 4 scales"


def _cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "musicbox", *args], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0, f"{args[0]} exited {proc.returncode}: {proc.stderr.strip()}"
    return proc.stdout


def criterion_9():
    start = time.perf_counter()
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        lib = tmp / "lib.json"
        lib.write_text(json.dumps({"m1": "0 . ; . 0", "m2": "1 0 1 ; -7 0 0", "m3": "1 2 . 3 ; -1 0 . 1"}))
        system = tmp / "har.json"

        def pipeline():
            outs = [
                _cli("compose", ". -2 -1 . 0 ; 0 1 . . 1", "1 . 0 0 ; -3 . 0 4", "--at", "2"),
                _cli("eval-tree", "(m2 _ (m1 (m2 _ _ _)) (m3 _ _ _))", "--library", str(lib)),
                _cli("vary", "--kind", "har", "--pattern", "2 1 0 2 . 1 . 0 .", "--degrees", "0 5 -7",
                     "-o", str(system)),
                _cli("generate", "--system", str(system), "--mode", "partial", "-k", "12",
                     "--seed", "18446744073709551615"),
                _cli("decompose", "1 . -1 2"),
            ]
            generated = outs[3].strip()
            outs.append(_cli("render", generated, "--scale", "natural-minor", "--root", "9:3",
                             "--format", "abc"))
            outs.append(_cli("render", generated, "--format", "json", "--tempo", "96"))
            return outs

        first = pipeline()
        second = pipeline()
    elapsed = time.perf_counter() - start
    assert first == second, "outputs differ between identical runs"
    assert first[0] == ". -2 0 . -1 -1 . 0 ; 0 -2 . 1 5 . . 1\n"
    assert elapsed < 5, f"took {elapsed:.2f}s"
    return f"6 subcommands, 2 identical runs of 7 invocations in {elapsed:.2f}s"


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 10)}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, acceptance_log):
    try:
        detail = CRITERIA[n]()
    except AssertionError as exc:
        acceptance_log.append(f"criterion {n}: FAIL ({exc})")
        raise
    acceptance_log.append(f"criterion {n}: PASS ({detail})")


if __name__ == "__main__":
    failed = 0
    for n, fn in CRITERIA.items():
        try:
            print(f"criterion {n}: PASS ({fn()})")
        except AssertionError as exc:
            failed += 1
            print(f"criterion {n}: FAIL ({exc})")
    sys.exit(1 if failed else 0)
