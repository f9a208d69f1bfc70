"""Acceptance suite: one test per release criterion.

Each criterion prints its own pass line so a plain ``pytest -s
tests/test_acceptance.py`` reads as a checklist.  Expected values are
frozen literals; tolerances are stated inline and never loosened.
"""

import math
import random
import re

from tritave.exports import (
    emit_scl,
    emit_table,
    emit_tonnetz_path,
    parse_progression,
    parse_scl,
    sample_progression_text,
)
from tritave.harmony import (
    basic_sequence,
    chord_234,
    invert,
    minor_triad_234,
    major_triad_234,
    reduce_chord_to_domain,
    shift_in_circle,
)
from tritave.notation import (
    BASE_NAMES_PYTH3,
    NoteName,
    key_color_by_harmonic_degree,
    keyboard_labels,
    name_of,
    parse_note,
)
from tritave.ratios import COMMA, FreqRatio, LOG2_3, TRITAVE, cents
from tritave.scales import (
    EDO12,
    EDT19,
    PYTH2,
    PYTH3,
    deviation_table,
    note_at_scale_degree,
    pyth2_pyth3_differences,
)
from tritave.temperament import cf_coefficients, convergents
from tritave.tonnetz import TONNETZ_456, apply_plr, major_triad, reachable_note_classes


def report(number: int, text: str) -> None:
    print(f"[acceptance] criterion {number:>2}: PASS  {text}")


TABLE2 = [
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

TABLE1 = [
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


def check_rows(rows, expected):
    assert len(rows) == len(expected)
    for row, (degree, note, ratio, harm, dev, boundary) in zip(rows, expected):
        assert row.scale_degree == degree
        assert row.note == note
        assert str(row.just_ratio) == ratio
        assert row.harmonic_degree == harm
        assert abs(row.deviation_cents - dev) <= 0.01
        assert row.boundary == boundary


def test_criterion_01_table_pyth3_vs_edt19():
    check_rows(deviation_table("pyth3_edt19"), TABLE2)
    report(1, "19+2 rows of the tritave comparison table, deviations +-0.01c")


def test_criterion_02_table_pyth2_vs_edo12():
    check_rows(deviation_table("pyth2_edo12"), TABLE1)
    report(2, "12+1 rows of the octave comparison table, deviations +-0.01c")


def test_criterion_03_just_scale_differences():
    diffs = pyth2_pyth3_differences(-41, 46)
    assert [d for d, *_ in diffs] == [-37, -30, -25, -18, -6, 25, 37, 44]
    for degree, _, _, quotient in diffs:
        expected = COMMA.inverse() if degree in (-37, -30, -25, -18, -6) else COMMA
        assert quotient == expected
    report(3, "exactly 8 differing degrees over [-41, 46], comma quotients exact")


def test_criterion_04_comma_and_temperament_gaps():
    assert abs(cents(COMMA) - 23.460) <= 0.001
    gap = 1200 * LOG2_3 / 19 - 100
    assert abs(gap - 0.103) <= 0.001
    worst_equal = max(
        abs(note_at_scale_degree(n, EDO12) - note_at_scale_degree(n, EDT19))
        for n in range(-41, 47)
    )
    assert worst_equal < 5.0
    worst_just = max(
        abs(cents(note_at_scale_degree(n, PYTH3)) - note_at_scale_degree(n, EDT19))
        for n in range(-41, 47)
    )
    assert worst_just <= 11.12
    report(4, f"comma 23.460c, step gap 0.103c, spreads {worst_equal:.2f}/{worst_just:.2f}c")


def test_criterion_05_plr_reachability():
    levels_234 = reachable_note_classes(major_triad(parse_note("A")), 8)
    assert [lvl.count for lvl in levels_234] == [3, 5, 7, 9, 11, 13, 15, 17, 19]
    levels_456 = reachable_note_classes(major_triad(0, TONNETZ_456), 3)
    assert [lvl.count for lvl in levels_456] == [3, 6, 11, 12]
    missing = set("C C# D Eb E F F# G G# A Bb B".split()) - set(levels_456[2].classes)
    assert missing == {"F#"}
    report(5, "reach counts 3,5,...,19 and 3,6,11,12 with F# the two-move gap")


def test_criterion_06_purity_tables():
    from tritave.harmony import chord_456, purity

    rows_234 = [
        (("A", "E", "A'"), 2, 3),
        (("A", "D", "A'"), 3, 2),
        (("A", "E", "B'"), 4, 4),
        (("A", "D", "G"), 9, 9),
    ]
    for names, d_b, d_o in rows_234:
        rep = purity(chord_234([parse_note(n) for n in names]))
        assert (rep.d_base, rep.d_overtone) == (d_b, d_o)
        a, b, c = rep.ratio
        assert rep.d_base == a and rep.d_overtone == math.lcm(a, b, c) // c
    rows_456 = [
        ((0, 4, 7), 4, 10), ((4, 7, 12), 5, 15), ((7, 12, 16), 3, 12),
        ((-3, 0, 4), 10, 4), ((0, 4, 9), 12, 3), ((4, 9, 12), 15, 5),
        ((0, 4, 8), 16, 16), ((-1, 2, 5), 25, 25),
    ]
    for notes, d_b, d_o in rows_456:
        rep = purity(chord_456(notes))
        assert (rep.d_base, rep.d_overtone) == (d_b, d_o)
        a, b, c = rep.ratio
        assert rep.d_base == a and rep.d_overtone == math.lcm(a, b, c) // c
    report(6, "all 4 + 8 purity rows via the lcm/gcd identities")


def test_criterion_07_continued_fractions():
    assert cf_coefficients(8) == [1, 1, 1, 2, 2, 3, 1, 5]
    convs = convergents(7)
    assert (convs[4].p, convs[4].q) == (12, 19)
    assert (convs[6].p, convs[6].q) == (53, 84)
    report(7, "coefficients 1,1,1,2,2,3,1,5 with convergents 12/19 and 53/84")


def test_criterion_08_keyboard_labels():
    labels = keyboard_labels(21, 108)
    names = [str(label.name) for label in labels]
    assert len(names) == 88 and len(set(names)) == 88
    assert names[0] == "Bvv"
    assert names[62 - 21] == "D"
    assert names[-1] == "Bb'^^"
    colors = [key_color_by_harmonic_degree(h) for h in range(-9, 10)]
    assert colors.count("white") == 11 and colors.count("black") == 8
    report(8, "88 distinct labels anchored Bvv/D/Bb'^^, 11 white + 8 black per tritave")


def test_criterion_09_harmony_identities():
    a = parse_note("A")
    tonic = major_triad_234(a)
    assert [str(c) for c in basic_sequence(tonic)] == [
        "A-E-A'", "A-E-B'", "A-D-A'", "A-E-A'",
    ]

    rng = random.Random(2026)
    roots = [FreqRatio(rng.randint(-9, 9), rng.randint(-6, 6)) for _ in range(200)]
    for root in roots:
        triad = major_triad(root)
        for move in "PLR":
            assert apply_plr(apply_plr(triad, move), move) == triad
        dom = reduce_chord_to_domain(shift_in_circle(major_triad_234(root), 1), root)
        assert dom == minor_triad_234(root)      # the P image of the tonic
        chord = major_triad_234(root)
        for _ in range(3):
            chord = invert(chord, "first")
        assert chord.notes == tuple(n * TRITAVE for n in major_triad_234(root).notes)

    for base in BASE_NAMES_PYTH3:
        for shift in range(-4, 5):
            name = NoteName(base, shift)
            assert name_of(parse_note(str(name))) == name
    report(9, "basic sequence, P=dominant, inversion and naming identities hold")


def test_criterion_10_emitter_round_trips():
    systems = {"pyth3": PYTH3, "edt19": EDT19, "pyth2": PYTH2, "edo12": EDO12}
    for scale, system in systems.items():
        text = emit_scl(scale)
        assert text == emit_scl(scale)
        _, pitches = parse_scl(text)
        for degree, got in enumerate(pitches, start=1):
            pitch = note_at_scale_degree(degree, system)
            want = pitch if isinstance(pitch, float) else cents(pitch)
            assert abs(got - want) <= 1e-4
    for table in ("t1", "t2", "diff", "plr456", "plr234", "purity234", "purity456"):
        assert emit_table(table) == emit_table(table)
    chords = parse_progression(sample_progression_text())
    dot = emit_tonnetz_path(chords)
    assert dot == emit_tonnetz_path(chords)
    assert len(re.findall(r"^  chord\d+ \[", dot, re.M)) == 10
    report(10, "scl round-trips within 1e-4c; all emitters byte-stable")
