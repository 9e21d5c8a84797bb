"""Command-line front end.

Exit codes: 0 success, 1 validation or color error, 2 I/O error, 64 usage
error. Errors print one line on stderr and nothing on stdout.

Pattern arguments are read literally, or from a file when written ``@path``
(``@-`` reads standard input).
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .budgen import BudGeneratingSystem, Mode, RandomSource, GENERATORS as MODE_GENERATORS
from .colored import ColoredMultiPattern, bud_compose
from .errors import MusicBoxError
from .patterns import DegreePattern, MultiPattern, Pattern, RhythmPattern, mp_compose
from .patterns import parse_multipattern  # noqa: F401  (re-exported entry point)
from .render import RootedScale, Tempo, parse_root, parse_scale, render, to_abc, to_json_events
from .trees import decompose, eval_tree, format_tree, parse_tree
from .variations import Kind, VariationSpec

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2
EXIT_USAGE = 64

SUBCOMMANDS = ("compose", "eval-tree", "generate", "vary", "render", "decompose")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class Invocation:
    subcommand: str
    flags: dict = field(default_factory=dict)


@dataclass
class Output:
    stdout: str = ""
    files: dict[Path, str] = field(default_factory=dict)


def _read_arg(value: str) -> str:
    if value == "@-":
        return sys.stdin.read()
    if value.startswith("@"):
        return Path(value[1:]).read_text(encoding="utf-8")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer: {text}")
    return value


def _nonneg(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="musicbox", description="Compose and generate multi-patterns.")
    sub = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")
    sub.required = True

    p = sub.add_parser("compose", help="partial composition x ∘i y")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--at", type=int, required=True, metavar="I")
    p.add_argument(
        "--colored", action="store_true", help="operands are 'out | pattern | ins'"
    )

    p = sub.add_parser("eval-tree", help="evaluate a composition tree")
    p.add_argument("tree")
    p.add_argument("--library", metavar="FILE", help="JSON object of name -> pattern")
    p.add_argument("-m", type=int, default=None, help="voice count for a bare leaf")

    p = sub.add_parser("generate", help="run a bud generating system")
    p.add_argument("--system", required=True, metavar="FILE")
    _add_generation_flags(p, required=True)

    p = sub.add_parser("vary", help="build a variation system (and optionally run it)")
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--pattern", required=True)
    p.add_argument("--t", type=int, dest="tem_t", help="tem: maximal lengthening")
    p.add_argument("--rhythm", help="rhy: rhythm pattern, e.g. 'xx.x.'")
    p.add_argument("--degrees", help="har/arp: chord degrees, e.g. '0 5 -7'")
    p.add_argument("-o", "--output", metavar="FILE", help="write the system file here")
    _add_generation_flags(p, required=False)

    p = sub.add_parser("render", help="render a multi-pattern as ABC or JSON")
    p.add_argument("pattern")
    p.add_argument("--scale", default="major")
    p.add_argument("--root", default="0:4")
    p.add_argument("--tempo", type=int, default=128)
    p.add_argument("--format", choices=("abc", "json"), default="abc")
    p.add_argument("--title", default="")
    p.add_argument("--key", default="Am")
    p.add_argument("--plot", metavar="FILE", help="also write a piano-roll figure")

    p = sub.add_parser("decompose", help="express a pattern over the generators")
    p.add_argument("pattern")
    return parser


def _add_generation_flags(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--mode", choices=[m.value for m in Mode], default="partial")
    p.add_argument("-k", type=_nonneg, required=required)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--trace", metavar="FILE", help="write the generation trace here")


def _run_generation(system: BudGeneratingSystem, args, out: Output) -> MultiPattern:
    pattern, trace = MODE_GENERATORS[Mode(args.mode)](system, args.k, RandomSource(args.seed))
    if args.trace:
        out.files[Path(args.trace)] = trace.dumps()
    return pattern


def _cmd_compose(args, out: Output) -> None:
    if args.colored:
        x = ColoredMultiPattern.parse(_read_arg(args.x))
        y = ColoredMultiPattern.parse(_read_arg(args.y))
        out.stdout = f"{bud_compose(x, args.at, y)}\n"
    else:
        x = parse_multipattern(_read_arg(args.x))
        y = parse_multipattern(_read_arg(args.y))
        out.stdout = f"{mp_compose(x, args.at, y)}\n"


def _cmd_eval_tree(args, out: Output) -> None:
    library = {}
    if args.library:
        raw = json.loads(Path(args.library).read_text(encoding="utf-8"))
        if not isinstance(raw, dict):
            raise MusicBoxError("library file must hold a JSON object")
        library = {name: parse_multipattern(text) for name, text in raw.items()}
    tree = parse_tree(_read_arg(args.tree), library)
    out.stdout = f"{eval_tree(tree, args.m)}\n"


def _cmd_generate(args, out: Output) -> None:
    system = BudGeneratingSystem.loads(Path(args.system).read_text(encoding="utf-8"))
    out.stdout = f"{_run_generation(system, args, out)}\n"


def _cmd_vary(args, out: Output) -> None:
    spec = VariationSpec(
        Kind(args.kind),
        Pattern.parse(_read_arg(args.pattern)),
        tem_t=args.tem_t,
        rhy_r=None if args.rhythm is None else RhythmPattern.parse(args.rhythm),
        degrees=None if args.degrees is None else DegreePattern(
            Pattern.parse(args.degrees).degrees.entries
        ),
    )
    system = spec.build()
    if args.output:
        out.files[Path(args.output)] = system.dumps()
    if args.k is None:
        if not args.output:
            out.stdout = system.dumps()
        return
    out.stdout = f"{_run_generation(system, args, out)}\n"


def _cmd_render(args, out: Output) -> None:
    pattern = parse_multipattern(_read_arg(args.pattern))
    scale = parse_scale(args.scale)
    rs = RootedScale(scale, parse_root(args.root, scale.eta))
    phrase = render(pattern, rs, Tempo(args.tempo))
    if args.format == "abc":
        out.stdout = to_abc(phrase, title=args.title, key=args.key)
    else:
        out.stdout = to_json_events(phrase)
    if args.plot:
        from .plotting import save_piano_roll

        save_piano_roll(phrase, args.plot, title=args.title)


def _cmd_decompose(args, out: Output) -> None:
    pattern = parse_multipattern(_read_arg(args.pattern))
    out.stdout = f"{format_tree(decompose(pattern))}\n"


_COMMANDS = {
    "compose": _cmd_compose,
    "eval-tree": _cmd_eval_tree,
    "generate": _cmd_generate,
    "vary": _cmd_vary,
    "render": _cmd_render,
    "decompose": _cmd_decompose,
}


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"musicbox: warning: {message}", file=sys.stderr)


def run(inv: Invocation, stdout=None) -> int:
    """Execute an already-parsed invocation; ``flags`` are the argparse attributes."""
    stdout = stdout or sys.stdout
    args = argparse.Namespace(subcommand=inv.subcommand, **inv.flags)
    out = Output()
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            warnings.showwarning = _show_warning
            _COMMANDS[inv.subcommand](args, out)
        for path, text in out.files.items():
            path.write_text(text, encoding="utf-8")
    except MusicBoxError as exc:
        print(f"musicbox {inv.subcommand}: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except json.JSONDecodeError as exc:
        print(f"musicbox {inv.subcommand}: error: invalid JSON: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"musicbox {inv.subcommand}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    stdout.write(out.stdout)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"{exc}", file=sys.stderr)
        return EXIT_USAGE
    flags = {k: v for k, v in vars(ns).items() if k != "subcommand"}
    return run(Invocation(ns.subcommand, flags), stdout)


if __name__ == "__main__":
    sys.exit(main())
