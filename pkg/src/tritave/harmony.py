"""Chords, inversions, circle shifts, sequences and purity measures.

Two harmonic systems share one chord type:

* ``"234"`` -- chords are triples of exact 3-smooth ratios.  Major stacks
  a fifth then a fourth (2:3:4), minor a fourth then a fifth (3:4:6);
  two fifths make an augmented chord, two fourths a diminished one.
  Inversions move notes by whole tritaves, the circle shift by octaves.
* ``"456"`` -- chords are triples of 12-EDO pitches (integer semitones
  relative to the central C, plain B one semitone below it).  Major is
  4+3 semitones, minor 3+4; inversions move by octaves, the circle shift
  by fifths.

Purity distances: write a chord as coprime integers a:b:c.  The common
base note (all chord notes are among its overtones) sits ``a`` steps below
the lowest note, and the first common overtone ``lcm(a,b,c)/c`` steps
above the highest.  Small values on both sides mean the chord hugs a
single overtone series.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from . import notation
from .ratios import FreqRatio, FIFTH, FOURTH, OCTAVE, TRITAVE

__all__ = [
    "ChordQuality",
    "Chord",
    "PurityReport",
    "chord_234",
    "chord_456",
    "major_triad_234",
    "minor_triad_234",
    "classify",
    "invert",
    "shift_in_circle",
    "reduce_chord_to_domain",
    "basic_sequence",
    "cadence_sequence",
    "purity",
]


class ChordQuality(enum.Enum):
    MAJOR = "major"
    MINOR = "minor"
    AUGMENTED = "augmented"
    DIMINISHED = "diminished"
    OTHER = "other"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Chord:
    """Three strictly ascending notes in one of the two systems."""

    notes: tuple
    system: str = "234"

    def __post_init__(self) -> None:
        if self.system not in ("234", "456"):
            raise ValueError(f"unknown system {self.system!r}")
        if len(self.notes) != 3:
            raise ValueError("a chord needs exactly 3 notes")
        a, b, c = self.notes
        if not (a < b < c):
            raise ValueError("chord notes must be strictly ascending")

    def names(self) -> tuple[str, str, str]:
        if self.system == "234":
            return tuple(str(notation.name_of(n)) for n in self.notes)
        return tuple(notation.edo12_name(n) for n in self.notes)

    def __str__(self) -> str:
        return "-".join(self.names())


def chord_234(notes) -> Chord:
    return Chord(tuple(sorted(notes)), "234")


def chord_456(notes) -> Chord:
    return Chord(tuple(sorted(int(n) for n in notes)), "456")


def major_triad_234(root: FreqRatio) -> Chord:
    return chord_234((root, root * FIFTH, root * OCTAVE))


def minor_triad_234(root: FreqRatio) -> Chord:
    return chord_234((root, root * FOURTH, root * OCTAVE))


def _steps(c: Chord):
    a, b, top = c.notes
    if c.system == "234":
        return b / a, top / b
    return b - a, top - b


_QUALITY_234 = {
    (FIFTH, FOURTH): ChordQuality.MAJOR,
    (FOURTH, FIFTH): ChordQuality.MINOR,
    (FIFTH, FIFTH): ChordQuality.AUGMENTED,
    (FOURTH, FOURTH): ChordQuality.DIMINISHED,
}

_QUALITY_456 = {
    (4, 3): ChordQuality.MAJOR,
    (3, 4): ChordQuality.MINOR,
    (4, 4): ChordQuality.AUGMENTED,
    (3, 3): ChordQuality.DIMINISHED,
}


def classify(c: Chord) -> ChordQuality:
    """Quality from the ordered pair of step intervals."""
    table = _QUALITY_234 if c.system == "234" else _QUALITY_456
    return table.get(_steps(c), ChordQuality.OTHER)


def _period(c: Chord):
    return TRITAVE if c.system == "234" else 12


def invert(c: Chord, direction: str = "first") -> Chord:
    """First inversion lifts the bottom note one period; second drops the top.

    Three first inversions of a 2:3:4 chord land a whole tritave higher.
    """
    a, b, top = c.notes
    per = _period(c)
    if direction == "first":
        moved = a * per if c.system == "234" else a + per
        notes = (b, top, moved)
    elif direction == "second":
        moved = top / per if c.system == "234" else top - per
        notes = (moved, a, b)
    else:
        raise ValueError(f"direction must be 'first' or 'second', not {direction!r}")
    return Chord(tuple(sorted(notes)), c.system)


def shift_in_circle(c: Chord, steps: int) -> Chord:
    """Move every note along the harmonic circle; +1 is the dominant.

    The step is an octave for 2:3:4 chords (circle of octaves) and a fifth
    for 4:5:6 chords (circle of fifths).  No register reduction is applied.
    """
    if c.system == "234":
        return Chord(tuple(n * OCTAVE ** steps for n in c.notes), "234")
    return Chord(tuple(n + 7 * steps for n in c.notes), "456")


def reduce_chord_to_domain(c: Chord, root: FreqRatio | None = None) -> Chord:
    """Shift each note by whole tritaves into [root, 3*root).

    ``root`` names the tonic register and defaults to the chord's own
    lowest note (chords spanning less than a tritave are then untouched).
    Each note keeps its tritave class, so this is a stack of first/second
    inversions; it is idempotent for a fixed root.
    """
    if c.system != "234":
        raise ValueError("domain reduction by tritaves applies to 2:3:4 chords")
    if root is None:
        root = c.notes[0]
    root_frac = root.as_fraction()
    reduced = []
    for n in c.notes:
        rel = n.as_fraction() / root_frac
        k = -round(math.log(float(rel), 3))
        while rel * Fraction(3) ** k >= 3:
            k -= 1
        while rel * Fraction(3) ** k < 1:
            k += 1
        reduced.append(n * TRITAVE ** k)
    if len(set(reduced)) != 3:
        raise ValueError("domain reduction collapses two notes onto one")
    return chord_234(reduced)


def _closest_voicing_456(c: Chord, reference: Chord) -> Chord:
    """Close voicing (span under an octave) nearest the reference chord."""
    r0 = reference.notes[0]
    base = sorted(r0 + (n - r0) % 12 for n in c.notes)
    candidates = {0: base}
    low = base
    for j in (1, 2):
        low = sorted([low[2] - 12] + low[:2])
        candidates[-j] = low
    high = base
    for j in (1, 2):
        high = sorted(high[1:] + [high[0] + 12])
        candidates[j] = high

    def cost(item):
        j, notes = item
        return (sum(abs(a - b) for a, b in zip(notes, reference.notes)), abs(j), j)

    _, best = min(candidates.items(), key=cost)
    return chord_456(best)


def _reduce_for(tonic: Chord, c: Chord) -> Chord:
    if tonic.system == "234":
        return reduce_chord_to_domain(c, root=tonic.notes[0])
    return _closest_voicing_456(c, tonic)


def basic_sequence(tonic: Chord) -> list[Chord]:
    """tonic -- subdominant -- dominant -- tonic, voiced near the tonic."""
    if classify(tonic) is not ChordQuality.MAJOR:
        raise ValueError("basic sequence defined for major tonic")
    sub = _reduce_for(tonic, shift_in_circle(tonic, -1))
    dom = _reduce_for(tonic, shift_in_circle(tonic, +1))
    return [tonic, sub, dom, tonic]


def cadence_sequence(tonic: Chord) -> list[Chord]:
    """tonic -- dominant -- second dominant -- tonic.

    The drop from the second dominant back to the tonic gives a stronger
    sense of finality than the plain dominant-tonic step.
    """
    if classify(tonic) is not ChordQuality.MAJOR:
        raise ValueError("cadence sequence defined for major tonic")
    dom = _reduce_for(tonic, shift_in_circle(tonic, +1))
    dom2 = _reduce_for(tonic, shift_in_circle(tonic, +2))
    return [tonic, dom, dom2, tonic]


# --- purity -----------------------------------------------------------------

# Just interpretation of 12-EDO steps (5-limit); only steps of 3..5
# semitones occur in the classified triads and their inversions.
_JUST_STEP = {
    1: Fraction(16, 15),
    2: Fraction(9, 8),
    3: Fraction(6, 5),
    4: Fraction(5, 4),
    5: Fraction(4, 3),
    6: Fraction(45, 32),
    7: Fraction(3, 2),
    8: Fraction(8, 5),
    9: Fraction(5, 3),
    10: Fraction(9, 5),
    11: Fraction(15, 8),
}

# Canonical just frequencies of the 12-EDO pitch classes relative C = 1,
# keyed by pitch class at semitones 0..11 (so the plain B of the naming
# window, one semitone below C, comes out as 15/8 / 2 = 15/16).
_CANON_FREQ = {
    0: Fraction(1),
    1: Fraction(135, 128),
    2: Fraction(9, 8),
    3: Fraction(6, 5),
    4: Fraction(5, 4),
    5: Fraction(4, 3),
    6: Fraction(45, 32),
    7: Fraction(3, 2),
    8: Fraction(25, 16),
    9: Fraction(5, 3),
    10: Fraction(9, 5),
    11: Fraction(15, 8),
}

_FIVE_LIMIT_NAMES = {
    Fraction(15, 16): "B",
    Fraction(1): "C",
    Fraction(135, 128): "C#",
    Fraction(9, 8): "D",
    Fraction(6, 5): "Eb",
    Fraction(5, 4): "E",
    Fraction(4, 3): "F",
    Fraction(45, 32): "F#",
    Fraction(3, 2): "G",
    Fraction(25, 16): "G#",
    Fraction(5, 3): "A",
    Fraction(9, 5): "Bb",
}

_WINDOW_LO = Fraction(15, 16)


def _canon_freq(semitone: int) -> Fraction:
    pc = semitone % 12
    return _CANON_FREQ[pc] * Fraction(2) ** ((semitone - pc) // 12)


def _five_limit_name(freq: Fraction) -> str | None:
    k = 0
    g = freq
    while g >= 2 * _WINDOW_LO:
        g /= 2
        k += 1
    while g < _WINDOW_LO:
        g *= 2
        k -= 1
    letter = _FIVE_LIMIT_NAMES.get(g)
    if letter is None:
        return None
    return letter + ("'" * k if k >= 0 else "," * -k)


def _pyth_names(freq: Fraction) -> tuple[str, ...]:
    ratio = FreqRatio.from_fraction(freq.numerator, freq.denominator)
    names = []
    try:
        names.append(str(notation.name_of(ratio)))
    except ValueError:
        pass
    try:
        names.append(notation.pyth2_name_of(ratio))
    except ValueError:
        pass
    return tuple(names)


@dataclass(frozen=True)
class PurityReport:
    """Coprime chord ratio with base-note and overtone distances."""

    ratio: tuple[int, int, int]
    d_base: int
    d_overtone: int
    base_frequency: Fraction
    overtone_frequency: Fraction
    base_names: tuple[str, ...]
    overtone_names: tuple[str, ...]

    @property
    def reciprocal(self) -> tuple[int, int, int]:
        """Denominators of the 1/x : 1/y : 1/z form of the chord."""
        a, b, c = self.ratio
        lcm = math.lcm(a, b, c)
        return (lcm // a, lcm // b, lcm // c)


def purity(c: Chord) -> PurityReport:
    """Express the chord as a:b:c and report both purity distances."""
    if c.system == "234":
        freqs = [n.as_fraction() for n in c.notes]
        namer = _pyth_names
    else:
        s1, s2 = _steps(c)
        if s1 not in _JUST_STEP or s2 not in _JUST_STEP:
            raise ValueError("no just interpretation for these step intervals")
        f0 = _canon_freq(c.notes[0])
        freqs = [f0, f0 * _JUST_STEP[s1], f0 * _JUST_STEP[s1] * _JUST_STEP[s2]]

        def namer(freq: Fraction) -> tuple[str, ...]:
            name = _five_limit_name(freq)
            return (name,) if name else ()

    rel = [f / freqs[0] for f in freqs]
    denom_lcm = math.lcm(*(r.denominator for r in rel))
    ints = [int(r * denom_lcm) for r in rel]
    g = math.gcd(*ints)
    a, b, top = (i // g for i in ints)
    d_overtone = math.lcm(a, b, top) // top
    base = freqs[0] / a
    overtone = freqs[2] * d_overtone
    return PurityReport(
        ratio=(a, b, top),
        d_base=a,
        d_overtone=d_overtone,
        base_frequency=base,
        overtone_frequency=overtone,
        base_names=namer(base),
        overtone_names=namer(overtone),
    )
