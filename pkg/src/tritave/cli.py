"""Command-line interface.

Exit codes: 0 on success, 1 when `verify` finds a mismatch, 2 on usage or
parse errors.  Chords are given as three separate note-name arguments
(names may themselves contain commas, e.g. ``G,^``).
"""

from __future__ import annotations

import argparse
import sys

from . import exports, harmony, notation, scales, temperament, tonnetz, verify
from .ratios import FreqRatio


def _parse_ratio_or_note(text: str) -> FreqRatio:
    head = text.split("/", 1)[0]
    if head.isdigit():
        if "/" in text:
            num, den = text.split("/", 1)
            return FreqRatio.from_fraction(int(num), int(den))
        return FreqRatio.from_fraction(int(text))
    try:
        return notation.parse_note(text)
    except ValueError as primary:
        # fall back to octave-system spellings such as G' or G#,; where the
        # two grammars overlap they agree on the frequency
        try:
            return notation.parse_pyth2_note(text)
        except ValueError:
            raise primary from None


def _chord_from_args(args) -> harmony.Chord:
    if args.system == "456":
        return harmony.chord_456([notation.parse_edo12_note(n) for n in args.notes])
    return harmony.chord_234([notation.parse_note(n) for n in args.notes])


def _note_names(chord: harmony.Chord) -> str:
    return " ".join(chord.names())


def _cmd_scale(args) -> int:
    if args.scl:
        sys.stdout.write(exports.emit_scl(args.system, args.description))
        return 0
    if args.system in ("pyth2", "pyth3"):
        pair = "pyth2_edo12" if args.system == "pyth2" else "pyth3_edt19"
        if args.format in ("csv", "json"):
            table = "t1" if args.system == "pyth2" else "t2"
            sys.stdout.write(exports.emit_table(table, args.format))
            return 0
        for row in scales.deviation_table(pair):
            mark = " *" if row.boundary else ""
            print(
                f"{row.scale_degree:>4}  {row.note:<5} {str(row.just_ratio):>9}"
                f"  h={row.harmonic_degree:>3}  {row.equal_value:7.4f}"
                f"  {row.deviation_cents:+6.2f}c{mark}"
            )
        return 0
    system = scales.EDT19 if args.system == "edt19" else scales.EDO12
    for degree in range(0, system.notes_per_period + 1):
        print(f"{degree:>4}  {scales.note_at_scale_degree(degree, system):10.3f}c")
    return 0


def _cmd_table(args) -> int:
    sys.stdout.write(exports.emit_table(args.which, args.format))
    return 0


def _cmd_reduce(args) -> int:
    ratio = _parse_ratio_or_note(args.note)
    system = scales.PYTH3 if args.system == "pyth3" else scales.PYTH2
    reduced, power = scales.reduce_to_fundamental(ratio, system)
    rep, shift = scales.period_reduce(reduced, system)
    if system is scales.PYTH3:
        name = str(notation.name_of(reduced))
        rep_name = str(notation.name_of(rep))
    else:
        name = notation.pyth2_name_of(reduced)
        rep_name = notation.pyth2_name_of(rep)
    print(f"input            {ratio}  (2^{ratio.u} * 3^{ratio.v})")
    print(f"enharmonic       {name}  = {reduced}  (comma power {power:+d})")
    print(f"class rep        {rep_name}  = {rep}  (period shift {shift:+d})")
    return 0


def _cmd_name(args) -> int:
    ratio = _parse_ratio_or_note(args.ratio)
    print(notation.name_of(ratio))
    return 0


def _cmd_keyboard(args) -> int:
    for label in notation.keyboard_labels(args.lo, args.hi):
        print(
            f"{label.midi:>4}  {str(label.name):<7} degree {label.scale_degree:>4}"
            f"  {label.color}"
        )
    return 0


def _cmd_convergents(args) -> int:
    coefficients = temperament.cf_coefficients(args.count)
    print("coefficients:", " ".join(str(a) for a in coefficients))
    for i, conv in enumerate(temperament.convergents(args.count), start=1):
        _, size = temperament.comma_for(conv.p, conv.q)
        print(f"{i:>3}  {str(conv):>12}  comma {size:10.4f}c")
    return 0


def _cmd_plr(args) -> int:
    triad = tonnetz.triad_from_chord(_chord_from_args(args))
    print(f"start  {_note_names(triad.chord())}  ({triad.quality})")
    for move in args.moves:
        triad = tonnetz.apply_plr(triad, move)
        print(f"{move.upper():<5}  {_note_names(triad.chord())}  ({triad.quality})")
    return 0


def _cmd_reach(args) -> int:
    if args.system == "456":
        start = tonnetz.major_triad(notation.parse_edo12_note(args.start or "C"),
                                    tonnetz.TONNETZ_456)
        order = notation.NAMES_EDO12
    else:
        start = tonnetz.major_triad(notation.parse_note(args.start or "A"))
        order = notation.BASE_NAMES_PYTH3
    for level in tonnetz.reachable_note_classes(start, args.k):
        names = " ".join(sorted(level.classes, key=order.index))
        print(f"{level.moves:>2} moves: {level.count:>2} classes  [{names}]")
    return 0


def _cmd_sequence(args) -> int:
    tonic = _chord_from_args(args)
    seq = (harmony.cadence_sequence if args.cadence else harmony.basic_sequence)(tonic)
    roles = (
        ["tonic", "dominant", "second dominant", "tonic"]
        if args.cadence
        else ["tonic", "subdominant", "dominant", "tonic"]
    )
    for role, chord in zip(roles, seq):
        print(f"{role:<16} {_note_names(chord)}  ({harmony.classify(chord)})")
    return 0


def _cmd_purity(args) -> int:
    report = harmony.purity(_chord_from_args(args))
    a, b, c = report.ratio
    x, y, z = report.reciprocal
    print(f"harmonics   {a}:{b}:{c}  (reciprocal 1/{x}:1/{y}:1/{z})")
    print(f"base        {'='.join(report.base_names) or report.base_frequency}"
          f"  = {report.base_frequency}  d_B = {report.d_base}")
    print(f"overtone    {'='.join(report.overtone_names) or report.overtone_frequency}"
          f"  = {report.overtone_frequency}  d_O = {report.d_overtone}")
    return 0


def _cmd_tonnetz_path(args) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as handle:
            text = handle.read()
    chords = exports.parse_progression(text)
    if args.dot:
        sys.stdout.write(exports.emit_tonnetz_path(chords))
        return 0
    for i, chord in enumerate(chords, start=1):
        print(f"{i:>3}  {_note_names(chord):<18} {harmony.classify(chord)}")
    return 0


def _cmd_verify(args) -> int:
    report = verify.verify_tables()
    print(report.render())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tritave",
        description="Tritave-based Pythagorean scales, 2:3:4 harmony and Tonnetz tools",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scale", help="print a scale table or a Scala .scl file")
    p.add_argument("system", choices=("pyth3", "pyth2", "edt19", "edo12"))
    p.add_argument("--scl", action="store_true", help="emit Scala .scl text")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--description", help=".scl description line")
    p.set_defaults(func=_cmd_scale)

    p = sub.add_parser("table", help="emit a reference table (csv/json)")
    p.add_argument("which", choices=exports.TABLE_IDS)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("reduce", help="enharmonic + period reduction of a note")
    p.add_argument("note", help="note name or ratio like 531441/524288")
    p.add_argument("--system", choices=("pyth3", "pyth2"), default="pyth3")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("name", help="name of a 3-smooth frequency ratio")
    p.add_argument("ratio", help="ratio like 3/2")
    p.set_defaults(func=_cmd_name)

    p = sub.add_parser("keyboard", help="key labels for a MIDI range")
    p.add_argument("--lo", type=int, default=21)
    p.add_argument("--hi", type=int, default=108)
    p.set_defaults(func=_cmd_keyboard)

    p = sub.add_parser("convergents", help="continued fraction of log2/log3")
    p.add_argument("-n", "--count", type=int, default=8)
    p.set_defaults(func=_cmd_convergents)

    p = sub.add_parser("plr", help="apply P/L/R moves to a triad")
    p.add_argument("notes", nargs=3, help="three note names")
    p.add_argument("moves", help="move string such as PLR")
    p.add_argument("--system", choices=("234", "456"), default="234")
    p.set_defaults(func=_cmd_plr)

    p = sub.add_parser("reach", help="note classes reachable by P/L/R moves")
    p.add_argument("--system", choices=("234", "456"), default="234")
    p.add_argument("--k", type=int, default=8, help="maximum number of moves")
    p.add_argument("--start", help="root of the starting major triad")
    p.set_defaults(func=_cmd_reach)

    p = sub.add_parser("sequence", help="basic or cadence sequence from a tonic")
    p.add_argument("notes", nargs=3, help="tonic chord as three note names")
    p.add_argument("--cadence", action="store_true")
    p.add_argument("--system", choices=("234", "456"), default="234")
    p.set_defaults(func=_cmd_sequence)

    p = sub.add_parser("purity", help="base-note and overtone distances of a chord")
    p.add_argument("notes", nargs=3, help="chord as three note names")
    p.add_argument("--system", choices=("234", "456"), default="234")
    p.set_defaults(func=_cmd_purity)

    p = sub.add_parser("tonnetz-path", help="lattice path of a progression file")
    p.add_argument("file", help="progression file, or - for stdin")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of a summary")
    p.set_defaults(func=_cmd_tonnetz_path)

    p = sub.add_parser("verify", help="recompute all reference tables")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
