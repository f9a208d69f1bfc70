"""Machine-checkable reproduction of the package's reference numbers.

`verify_tables` recomputes every published table (scale comparisons, the
just-scale difference list, P/L/R reachability, purity measures) plus a
set of invariant spot checks, and reports pass/fail per section.  The
expected values are frozen here so a regression in any module trips the
matching section.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import exports, harmony, notation, scales, temperament, tonnetz
from .ratios import COMMA, FreqRatio, LOG2_3

__all__ = ["SectionResult", "VerifyReport", "verify_tables"]


@dataclass
class SectionResult:
    name: str
    kind: str                      # "table" | "invariants"
    passed: bool
    failures: list[str] = field(default_factory=list)


@dataclass
class VerifyReport:
    sections: list[SectionResult]

    @property
    def passed(self) -> bool:
        return all(section.passed for section in self.sections)

    def render(self) -> str:
        lines = []
        for section in self.sections:
            status = "PASS" if section.passed else "FAIL"
            lines.append(f"{status} {section.name}")
            for failure in section.failures:
                lines.append(f"     {failure}")
        verdict = "all sections passed" if self.passed else "verification FAILED"
        lines.append(verdict)
        return "\n".join(lines)


# (degree, note, ratio, harmonic degree, printed deviation, boundary row)
EXPECTED_T2 = [
    (-10, "E,", "9/16", -4, 4.94, True),
    (-9, "F,", "16/27", 4, -4.94, False),
    (-8, "F#,", "81/128", -7, 8.64, False),
    (-7, "G,", "2/3", 1, -1.23, False),
    (-6, "Ab", "512/729", 9, -11.11, False),
    (-5, "A", "3/4", -2, 2.47, False),
    (-4, "Bb", "64/81", 6, -7.41, False),
    (-3, "B", "27/32", -5, 6.17, False),
    (-2, "C", "8/9", 3, -3.70, False),
    (-1, "C#", "243/256", -8, 9.88, False),
    (0, "D", "1", 0, 0.0, False),
    (1, "Eb", "256/243", 8, -9.88, False),
    (2, "E", "9/8", -3, 3.70, False),
    (3, "F", "32/27", 5, -6.17, False),
    (4, "F#", "81/64", -6, 7.41, False),
    (5, "G", "4/3", 2, -2.47, False),
    (6, "G#", "729/512", -9, 11.11, False),
    (7, "A'", "3/2", -1, 1.24, False),
    (8, "Bb'", "128/81", 7, -8.64, False),
    (9, "B'", "27/16", -4, 4.94, False),
    (10, "C'", "16/9", 4, -4.94, True),
]

EXPECTED_T1 = [
    (-6, "Ab", "512/729", -6, -11.73, True),
    (-5, "A", "3/4", 1, 1.96, False),
    (-4, "Bb", "64/81", -4, -7.82, False),
    (-3, "B", "27/32", 3, 5.87, False),
    (-2, "C", "8/9", -2, -3.91, False),
    (-1, "C#", "243/256", 5, 9.78, False),
    (0, "D", "1", 0, 0.0, False),
    (1, "Eb", "256/243", -5, -9.78, False),
    (2, "E", "9/8", 2, 3.91, False),
    (3, "F", "32/27", -3, -5.87, False),
    (4, "F#", "81/64", 4, 7.82, False),
    (5, "G", "4/3", -1, -1.96, False),
    (6, "G#", "729/512", 6, 11.73, False),
]

# (degree, tritave-system name, octave-system name, comma power of pyth3/pyth2)
EXPECTED_DIFF = [
    (-37, "Ebvv", "C#,,,", -1),
    (-30, "Bb'vv", "G#,,,", -1),
    (-25, "Abv", "C#,,", -1),
    (-18, "Ebv", "G#,,", -1),
    (-6, "Ab", "G#,", -1),
    (25, "G#^", "Eb''", 1),
    (37, "C#^^", "Eb'''", 1),
    (44, "G#^^", "Bb''''", 1),
]

EXPECTED_PLR_234 = [3, 5, 7, 9, 11, 13, 15, 17, 19]
EXPECTED_PLR_456 = [3, 6, 11, 12]

# (quality, harmonics, d_base, base names, d_overtone, overtone names)
EXPECTED_PURITY_234 = [
    ("major", (2, 3, 4), 2, ("Ev", "A,"), 3, ("A'^", "E''")),
    ("minor", (3, 4, 6), 3, ("Av", "D,,"), 2, ("D^", "A''")),
    ("augmented", (4, 6, 9), 4, ("B'vv", "A,,"), 4, ("A^^", "B'''")),
    ("diminished", (9, 12, 16), 9, ("Avv", "G,,,,"), 9, ("G^^", "A''''")),
]

EXPECTED_PURITY_456 = [
    ("major", (4, 5, 6), 4, ("C,,",), 10, ("B''''",)),
    ("major, 1st inv", (5, 6, 8), 5, ("C,,",), 15, ("B'''''",)),
    ("major, 2nd inv", (3, 4, 5), 3, ("C,",), 12, ("B'''''",)),
    ("minor", (10, 12, 15), 10, ("F,,,,",), 4, ("E''",)),
    ("minor, 1st inv", (12, 15, 20), 12, ("F,,,,",), 3, ("E''",)),
    ("minor, 2nd inv", (15, 20, 24), 15, ("F,,,,",), 5, ("E'''",)),
    ("augmented", (16, 20, 25), 16, ("C,,,,",), 16, ("G#''''",)),
    ("diminished", (25, 30, 36), 25, ("Eb,,,,,",), 25, ("C#'''''",)),
]

EXPECTED_CF_PREFIX = [1, 1, 1, 2, 2, 3, 1, 5]

DEVIATION_TOL = 0.01


def _check_deviation_table(name: str, pair: str, expected) -> SectionResult:
    failures = []
    rows = scales.deviation_table(pair)
    if len(rows) != len(expected):
        failures.append(f"expected {len(expected)} rows, got {len(rows)}")
    for row, (degree, note, ratio, harm, dev, boundary) in zip(rows, expected):
        where = f"degree {degree}"
        if row.scale_degree != degree:
            failures.append(f"{where}: misplaced row {row.scale_degree}")
            continue
        if row.note != note:
            failures.append(f"{where}: note {row.note} != {note}")
        if str(row.just_ratio) != ratio:
            failures.append(f"{where}: ratio {row.just_ratio} != {ratio}")
        if row.harmonic_degree != harm:
            failures.append(f"{where}: harmonic degree {row.harmonic_degree} != {harm}")
        if abs(row.deviation_cents - dev) > DEVIATION_TOL:
            failures.append(
                f"{where}: deviation {row.deviation_cents:+.3f} != {dev:+.2f}"
            )
        if row.boundary != boundary:
            failures.append(f"{where}: boundary flag {row.boundary} != {boundary}")
    return SectionResult(name, "table", not failures, failures)


def _check_diff() -> SectionResult:
    failures = []
    rows = scales.pyth2_pyth3_differences()
    got = [(d, str(p3), p2, q.v // 12) for d, p3, p2, q in rows]
    expected_degrees = [r[0] for r in EXPECTED_DIFF]
    if [g[0] for g in got] != expected_degrees:
        failures.append(f"difference degrees {[g[0] for g in got]} != {expected_degrees}")
    for g, e in zip(got, EXPECTED_DIFF):
        if g != e:
            failures.append(f"degree {e[0]}: {g} != {e}")
    return SectionResult("table_differences", "table", not failures, failures)


def _check_plr(name: str, system: str, expected) -> SectionResult:
    failures = []
    if system == "234":
        start = tonnetz.major_triad(notation.parse_note("A"))
    else:
        start = tonnetz.major_triad(0, tonnetz.TONNETZ_456)
    levels = tonnetz.reachable_note_classes(start, len(expected) - 1)
    counts = [lvl.count for lvl in levels]
    if counts != expected:
        failures.append(f"reach counts {counts} != {expected}")
    if system == "456":
        missing = set(notation.NAMES_EDO12) - set(levels[2].classes)
        if missing != {"F#"}:
            failures.append(f"classes missing after 2 moves: {sorted(missing)} != ['F#']")
    return SectionResult(name, "table", not failures, failures)


def _check_purity(name: str, system: str, expected) -> SectionResult:
    failures = []
    source_rows = (
        exports._PURITY_234_ROWS if system == "234" else exports._PURITY_456_ROWS
    )
    for (label, notes), (elabel, ratio, d_b, base, d_o, over) in zip(source_rows, expected):
        if system == "234":
            chord = harmony.chord_234([notation.parse_note(nm) for nm in notes])
        else:
            chord = harmony.chord_456(notes)
        report = harmony.purity(chord)
        if label != elabel:
            failures.append(f"{label}: row order mismatch")
        if report.ratio != ratio:
            failures.append(f"{label}: ratio {report.ratio} != {ratio}")
        if (report.d_base, report.d_overtone) != (d_b, d_o):
            failures.append(
                f"{label}: distances {(report.d_base, report.d_overtone)} != {(d_b, d_o)}"
            )
        if report.base_names != base or report.overtone_names != over:
            failures.append(
                f"{label}: names {report.base_names}/{report.overtone_names}"
                f" != {base}/{over}"
            )
    return SectionResult(name, "table", not failures, failures)


def _check_invariants() -> SectionResult:
    failures = []
    comma_cents = COMMA.cents()
    if abs(comma_cents - 23.460) > 0.001:
        failures.append(f"comma is {comma_cents:.4f} cents, expected 23.460")
    gap = 1200.0 * LOG2_3 / 19 - 100.0
    if abs(gap - 0.103) > 0.001:
        failures.append(f"per-step gap {gap:.4f} != 0.103")
    worst_equal = max(
        abs(
            scales.note_at_scale_degree(n, scales.EDO12)
            - scales.note_at_scale_degree(n, scales.EDT19)
        )
        for n in range(scales.PIANO_DEGREE_LO, scales.PIANO_DEGREE_HI + 1)
    )
    if not worst_equal < 5.0:
        failures.append(f"12-EDO vs 19-EDT spread {worst_equal:.3f} not under 5 cents")
    worst_just = max(
        abs(
            scales.note_at_scale_degree(n, scales.PYTH3).cents()
            - scales.note_at_scale_degree(n, scales.EDT19)
        )
        for n in range(scales.PIANO_DEGREE_LO, scales.PIANO_DEGREE_HI + 1)
    )
    if not worst_just <= 11.12:
        failures.append(f"just vs 19-EDT spread {worst_just:.3f} not within 11.12 cents")
    return SectionResult("invariants", "invariants", not failures, failures)


def _check_continued_fractions() -> SectionResult:
    failures = []
    prefix = temperament.cf_coefficients(8)
    if prefix != EXPECTED_CF_PREFIX:
        failures.append(f"coefficients {prefix} != {EXPECTED_CF_PREFIX}")
    convs = temperament.convergents(8)
    if (convs[4].p, convs[4].q) != (12, 19):
        failures.append(f"convergent 5 is {convs[4]}, expected 12/19")
    if (convs[6].p, convs[6].q) != (53, 84):
        failures.append(f"convergent 7 is {convs[6]}, expected 53/84")
    return SectionResult("continued_fractions", "invariants", not failures, failures)


def _check_keyboard() -> SectionResult:
    failures = []
    labels = notation.keyboard_labels(21, 108)
    names = [str(label.name) for label in labels]
    if len(set(names)) != 88:
        failures.append("88 key names are not pairwise distinct")
    anchors = {21: "Bvv", 62: "D", 108: "Bb'^^"}
    for midi, expected in anchors.items():
        got = names[midi - 21]
        if got != expected:
            failures.append(f"midi {midi} labelled {got}, expected {expected}")
    whites = sum(
        notation.key_color_by_harmonic_degree(h) == "white" for h in range(-9, 10)
    )
    if whites != 11:
        failures.append(f"{whites} white keys per tritave, expected 11")
    return SectionResult("keyboard", "invariants", not failures, failures)


def _check_harmony_identities() -> SectionResult:
    failures = []
    tonic = harmony.chord_234([notation.parse_note(n) for n in ("A", "E", "A'")])
    seq = [str(c) for c in harmony.basic_sequence(tonic)]
    if seq != ["A-E-A'", "A-E-B'", "A-D-A'", "A-E-A'"]:
        failures.append(f"basic sequence {seq}")
    for exponents in [(0, 0), (-2, 1), (3, -2), (5, -3)]:
        root = FreqRatio(*exponents)
        dom = harmony.reduce_chord_to_domain(
            harmony.shift_in_circle(harmony.major_triad_234(root), 1), root
        )
        p_image = tonnetz.apply_plr(tonnetz.major_triad(root), "P").chord()
        if dom != p_image:
            failures.append(f"root {root}: reduced dominant != P image")
        triple = harmony.major_triad_234(root)
        for _ in range(3):
            triple = harmony.invert(triple, "first")
        lifted = harmony.chord_234(
            n * FreqRatio(0, 1) for n in harmony.major_triad_234(root).notes
        )
        if triple != lifted:
            failures.append(f"root {root}: triple first inversion != tritave shift")
    return SectionResult("harmony_identities", "invariants", not failures, failures)


def _check_scl_round_trip() -> SectionResult:
    failures = []
    for scale in exports.SCL_SCALES:
        text = exports.emit_scl(scale)
        if text != exports.emit_scl(scale):
            failures.append(f"{scale}: emitter not byte-stable")
        _, cents_list = exports.parse_scl(text)
        system = {"pyth3": scales.PYTH3, "edt19": scales.EDT19,
                  "pyth2": scales.PYTH2, "edo12": scales.EDO12}[scale]
        for degree, got in enumerate(cents_list, start=1):
            pitch = scales.note_at_scale_degree(degree, system)
            want = pitch.cents() if isinstance(pitch, FreqRatio) else pitch
            if abs(got - want) > 1e-4:
                failures.append(f"{scale} degree {degree}: {got} != {want}")
                break
    return SectionResult("scl_round_trip", "invariants", not failures, failures)


def verify_tables() -> VerifyReport:
    """Recompute all reference tables and invariants; report per section."""
    sections = [
        _check_deviation_table("table_pyth2_vs_edo12", "pyth2_edo12", EXPECTED_T1),
        _check_deviation_table("table_pyth3_vs_edt19", "pyth3_edt19", EXPECTED_T2),
        _check_diff(),
        _check_plr("table_plr_456", "456", EXPECTED_PLR_456),
        _check_plr("table_plr_234", "234", EXPECTED_PLR_234),
        _check_purity("table_purity_234", "234", EXPECTED_PURITY_234),
        _check_purity("table_purity_456", "456", EXPECTED_PURITY_456),
        _check_invariants(),
        _check_continued_fractions(),
        _check_keyboard(),
        _check_harmony_identities(),
        _check_scl_round_trip(),
    ]
    return VerifyReport(sections)
