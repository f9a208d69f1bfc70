"""File emitters: Scala tuning files, CSV/JSON tables, DOT lattice paths.

All emitters are deterministic (byte-identical across runs): rows are
ordered by the data they describe, numbers use '.' decimals regardless of
locale, and nothing depends on time or environment.
"""

from __future__ import annotations

import csv
import io
import json
import math
from importlib import resources

from . import harmony, notation, scales, tonnetz
from .ratios import FreqRatio

__all__ = [
    "ProgressionError",
    "emit_scl",
    "parse_scl",
    "emit_table",
    "TABLE_IDS",
    "parse_progression",
    "sample_progression_text",
    "emit_tonnetz_path",
]

SCL_SCALES = ("pyth3", "edt19", "pyth2", "edo12")

_SCL_DESCRIPTIONS = {
    "pyth3": "Pythagorean scale of 19 notes per tritave (just intonation)",
    "edt19": "19 equal divisions of the tritave",
    "pyth2": "Pythagorean scale of 12 notes per octave (just intonation)",
    "edo12": "12 equal divisions of the octave",
}


def emit_scl(scale: str = "pyth3", description: str | None = None) -> str:
    """Scala .scl text for one of the four scales.

    Line 1 is the description, line 2 the note count, then one pitch per
    degree ascending: exact ``N/D`` ratios for the just scales, cents with
    five decimals for the equal ones.  The final entry is the period
    (``3/1`` for the tritave scales -- synths that assume octave repetition
    need to be told otherwise).
    """
    if scale not in SCL_SCALES:
        raise ValueError(f"unknown scale {scale!r}; choose from {SCL_SCALES}")
    system = {"pyth3": scales.PYTH3, "edt19": scales.EDT19,
              "pyth2": scales.PYTH2, "edo12": scales.EDO12}[scale]
    n = system.notes_per_period
    lines = [description or _SCL_DESCRIPTIONS[scale], str(n)]
    for degree in range(1, n + 1):
        if system.just:
            pitch = scales.note_at_scale_degree(degree, system, "just")
            frac = pitch.as_fraction()
            lines.append(f"{frac.numerator}/{frac.denominator}")
        else:
            lines.append(f"{scales.note_at_scale_degree(degree, system):.5f}")
    return "\n".join(lines) + "\n"


def parse_scl(text: str) -> tuple[str, list[float]]:
    """Minimal .scl reader: returns (description, pitches in cents)."""
    lines = [ln for ln in text.splitlines() if not ln.startswith("!")]
    if len(lines) < 2:
        raise ValueError("truncated .scl: need a description and a note count")
    description = lines[0]
    count = int(lines[1].strip())
    pitches = []
    for raw in lines[2:]:
        token = raw.strip().split()[0] if raw.strip() else ""
        if not token:
            continue
        if "/" in token:
            num, den = token.split("/", 1)
            pitches.append(1200.0 * math.log2(int(num) / int(den)))
        elif "." in token:
            pitches.append(float(token))
        else:
            pitches.append(1200.0 * math.log2(int(token)))
    if len(pitches) != count:
        raise ValueError(f"expected {count} pitches, found {len(pitches)}")
    return description, pitches


TABLE_IDS = ("t1", "t2", "diff", "plr456", "plr234", "purity234", "purity456")

_PURITY_234_ROWS = [
    ("major", ("A", "E", "A'")),
    ("minor", ("A", "D", "A'")),
    ("augmented", ("A", "E", "B'")),
    ("diminished", ("A", "D", "G")),
]

_PURITY_456_ROWS = [
    ("major", (0, 4, 7)),
    ("major, 1st inv", (4, 7, 12)),
    ("major, 2nd inv", (7, 12, 16)),
    ("minor", (-3, 0, 4)),
    ("minor, 1st inv", (0, 4, 9)),
    ("minor, 2nd inv", (4, 9, 12)),
    ("augmented", (0, 4, 8)),
    ("diminished", (-1, 2, 5)),
]


def _exponent_str(r: FreqRatio) -> str:
    return f"2^{r.u}*3^{r.v}"


def _deviation_rows(pair: str):
    header = ["scale_degree", "note", "ratio", "exponents", "harmonic_degree",
              "equal", "deviation_cents", "boundary"]
    rows = []
    for row in scales.deviation_table(pair):
        rows.append([
            row.scale_degree,
            row.note,
            str(row.just_ratio),
            _exponent_str(row.just_ratio),
            row.harmonic_degree,
            f"{row.equal_value:.4f}",
            f"{row.deviation_cents:+.2f}",
            int(row.boundary),
        ])
    return header, rows


def _diff_rows(degree_lo: int, degree_hi: int):
    header = ["scale_degree", "pyth3_note", "pyth2_note", "quotient", "comma_power"]
    rows = []
    for degree, p3, p2, quotient in scales.pyth2_pyth3_differences(degree_lo, degree_hi):
        power = quotient.v // 12          # quotient is always comma**(+-1)
        rows.append([degree, str(p3), p2, str(quotient), power])
    return header, rows


def _plr_rows(system: str):
    if system == "234":
        start = tonnetz.major_triad(notation.parse_note("A"))
        max_moves = 8
    else:
        start = tonnetz.major_triad(0, tonnetz.TONNETZ_456)
        max_moves = 3
    header = ["moves", "reachable"]
    rows = [[lvl.moves, lvl.count]
            for lvl in tonnetz.reachable_note_classes(start, max_moves)]
    return header, rows


def _purity_rows(system: str):
    header = ["quality", "chord", "harmonics", "reciprocal",
              "base_note", "d_base", "overtone_note", "d_overtone"]
    rows = []
    source_rows = _PURITY_234_ROWS if system == "234" else _PURITY_456_ROWS
    for label, notes in source_rows:
        if system == "234":
            chord = harmony.chord_234([notation.parse_note(nm) for nm in notes])
        else:
            chord = harmony.chord_456(notes)
        report = harmony.purity(chord)
        a, b, c = report.ratio
        x, y, z = report.reciprocal
        rows.append([
            label,
            str(chord),
            f"{a}:{b}:{c}",
            f"1/{x}:1/{y}:1/{z}",
            "=".join(report.base_names),
            report.d_base,
            "=".join(report.overtone_names),
            report.d_overtone,
        ])
    return header, rows


def emit_table(
    which: str,
    format: str = "csv",
    degree_lo: int = scales.PIANO_DEGREE_LO,
    degree_hi: int = scales.PIANO_DEGREE_HI,
) -> str:
    """Render one of the package's reference tables as CSV or JSON.

    ``which`` is one of ``t1`` (12-per-octave vs 12-EDO), ``t2``
    (19-per-tritave vs 19-EDT), ``diff`` (degrees where the just scales
    differ; range configurable), ``plr234``/``plr456`` (note classes
    reachable by P/L/R moves) and ``purity234``/``purity456``.
    """
    key = which.lower()
    if key == "t1":
        header, rows = _deviation_rows("pyth2_edo12")
    elif key == "t2":
        header, rows = _deviation_rows("pyth3_edt19")
    elif key == "diff":
        header, rows = _diff_rows(degree_lo, degree_hi)
    elif key == "plr456":
        header, rows = _plr_rows("456")
    elif key == "plr234":
        header, rows = _plr_rows("234")
    elif key == "purity234":
        header, rows = _purity_rows("234")
    elif key == "purity456":
        header, rows = _purity_rows("456")
    else:
        raise ValueError(f"unknown table {which!r}; choose from {TABLE_IDS}")

    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    if format == "json":
        return json.dumps(
            [dict(zip(header, row)) for row in rows], indent=2
        ) + "\n"
    raise ValueError(f"format must be 'csv' or 'json', not {format!r}")


# --- progression files --------------------------------------------------


class ProgressionError(ValueError):
    """A progression file line failed to parse."""


def parse_progression(text: str) -> list[harmony.Chord]:
    """Parse a progression file: three note names per line, '#' comments."""
    chords = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise ProgressionError(
                f"line {lineno}: expected 3 note names, found {len(tokens)}"
            )
        try:
            ratios = [notation.parse_note(tok) for tok in tokens]
        except ValueError as exc:
            raise ProgressionError(f"line {lineno}: {exc}") from exc
        try:
            chords.append(harmony.chord_234(ratios))
        except ValueError as exc:
            raise ProgressionError(f"line {lineno}: {exc}") from exc
    return chords


def sample_progression_text() -> str:
    """The bundled sample progression (a 2:3:4 closing sequence)."""
    return (
        resources.files("tritave").joinpath("data/sample_progression.txt")
        .read_text(encoding="ascii")
    )


def emit_tonnetz_path(chords: list[harmony.Chord]) -> str:
    """DOT graph of a chord progression on the 2:3:4 lattice.

    One circle node per note (positioned at its lattice point), one filled
    triangle node per chord at the triangle's centroid, and a directed
    chain through the chord nodes in playing order.  Chords that are not
    major/minor/augmented/diminished are kept but flagged with '?'.
    """
    if not chords:
        raise ValueError("empty progression")
    notes: dict[FreqRatio, str] = {}
    for chord in chords:
        if chord.system != "234":
            raise ValueError("lattice paths are drawn for 2:3:4 progressions")
        for note in chord.notes:
            if note not in notes:
                try:
                    notes[note] = str(notation.name_of(note))
                except ValueError:
                    notes[note] = str(note)

    lines = [
        "digraph tonnetz_path {",
        "  // octave (+2,0), fifth (+1,+1), fourth (+1,-1)",
        "  node [fontsize=10];",
    ]
    for note in sorted(notes, key=lambda r: (r.u, r.v)):
        x, y = tonnetz.note_coordinates(note)
        lines.append(f'  "{notes[note]}" [shape=circle, pos="{x},{y}!"];')
    for i, chord in enumerate(chords, start=1):
        quality = harmony.classify(chord)
        flagged = quality is harmony.ChordQuality.OTHER
        label = f"{i}?" if flagged else str(i)
        fill = "white" if flagged else "lightgray"
        coords = [tonnetz.note_coordinates(n) for n in chord.notes]
        cx = sum(c[0] for c in coords) / 3
        cy = sum(c[1] for c in coords) / 3
        lines.append(
            f'  chord{i} [label="{label}", shape=triangle, style=filled, '
            f'fillcolor={fill}, pos="{cx:.4f},{cy:.4f}!"];'
        )
        for note in chord.notes:
            lines.append(
                f'  chord{i} -> "{notes[note]}" [style=dotted, arrowhead=none];'
            )
    for i in range(1, len(chords)):
        lines.append(f"  chord{i} -> chord{i + 1} [penwidth=2];")
    lines.append("}")
    return "\n".join(lines) + "\n"
