"""Note names for both Pythagorean scales, plus keyboard labelling.

The 19 tritave-based notes carry the names of their octave-based cousins
where the two scales agree; the extra ones are marked with an intra-domain
octave mark that is part of the base name (``","`` one octave down,
``"'"`` one octave up).  Whole-tritave shifts are then written with hats
and checks, so every 3-smooth note in the tritave system has exactly one
spelling::

    F, F#, G, Ab A Bb B C C# D Eb E F F# G G# A' Bb' B'   (base names)
    C^   = one tritave above the C
    F#,^ = the F#, raised a tritave

Octave-based names instead repeat ``"'"`` and ``","`` for whole octaves
(``G,`` in that spelling is reserved for the octave system; the same
frequency is written ``C^`` here).  Everything is plain ASCII so files
and CLI output are byte-stable; `NoteName.render` offers the pretty
unicode marks for display.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import scales
from .ratios import TRITAVE, OCTAVE, FreqRatio

__all__ = [
    "NoteName",
    "KeyLabel",
    "BASE_NAMES_PYTH3",
    "BASE_NAMES_PYTH2",
    "NAMES_EDO12",
    "name_of",
    "parse_note",
    "note_name_at_degree",
    "pyth2_name_of",
    "parse_pyth2_note",
    "edo12_name",
    "parse_edo12_note",
    "keyboard_labels",
    "key_color_by_harmonic_degree",
]

#: Fundamental-domain names in scale-degree order (degrees -9 .. 9).
BASE_NAMES_PYTH3 = [
    "F,", "F#,", "G,", "Ab", "A", "Bb", "B", "C", "C#", "D",
    "Eb", "E", "F", "F#", "G", "G#", "A'", "Bb'", "B'",
]

#: Octave-system fundamental names in scale-degree order (degrees -5 .. 6).
BASE_NAMES_PYTH2 = [
    "A", "Bb", "B", "C", "C#", "D", "Eb", "E", "F", "F#", "G", "G#",
]

#: 12-EDO pitch-class names; the plain B sits one semitone *below* the
#: plain C so that close chord voicings read naturally.
NAMES_EDO12 = ["C", "C#", "D", "Eb", "E", "F", "F#", "G", "G#", "A", "Bb", "B"]

_UNICODE_MARKS = {"#": "♯", "b": "♭", "'": "′", ",": "⌄",
                  "^": "ˆ", "v": "ˇ"}


def _base_ratio_pyth3(degree: int) -> FreqRatio:
    return scales.fundamental_note(
        scales.scale_to_harmonic(degree, scales.PYTH3), scales.PYTH3
    )


_PYTH3_BASE_RATIO = {
    name: _base_ratio_pyth3(degree - 9) for degree, name in enumerate(BASE_NAMES_PYTH3)
}
_PYTH3_BASE_BY_U = {ratio.u: name for name, ratio in _PYTH3_BASE_RATIO.items()}

_PYTH2_BASE_RATIO = {
    name: scales.fundamental_note(
        scales.scale_to_harmonic(degree - 5, scales.PYTH2), scales.PYTH2
    )
    for degree, name in enumerate(BASE_NAMES_PYTH2)
}
_PYTH2_BASE_BY_V = {ratio.v: name for name, ratio in _PYTH2_BASE_RATIO.items()}

# Longest match first so "F#," wins over "F#" wins over "F".
_PYTH3_BASES_DESC = sorted(BASE_NAMES_PYTH3, key=len, reverse=True)
_PYTH2_BASES_DESC = sorted(BASE_NAMES_PYTH2, key=len, reverse=True)
_EDO12_BASES_DESC = sorted(NAMES_EDO12, key=len, reverse=True)


@dataclass(frozen=True)
class NoteName:
    """A tritave-system note: base name plus whole-tritave shift."""

    base: str
    tritave_shift: int = 0

    def __post_init__(self) -> None:
        if self.base not in _PYTH3_BASE_RATIO:
            raise ValueError(f"unknown base name {self.base!r}")

    def ratio(self) -> FreqRatio:
        return _PYTH3_BASE_RATIO[self.base] * TRITAVE ** self.tritave_shift

    def __str__(self) -> str:
        marks = "^" * self.tritave_shift if self.tritave_shift >= 0 else (
            "v" * -self.tritave_shift
        )
        return self.base + marks

    def render(self, unicode: bool = False) -> str:
        text = str(self)
        if not unicode:
            return text
        return "".join(_UNICODE_MARKS.get(ch, ch) for ch in text)


def name_of(ratio: FreqRatio) -> NoteName:
    """The unique tritave-system name of a note.

    The 2-adic harmonic degree must already lie in [-9, 9]; callers holding
    an arbitrary 3-smooth ratio reduce it to the fundamental set first.
    """
    if not -9 <= ratio.u <= 9:
        raise ValueError(
            f"harmonic degree {ratio.u} outside [-9, 9]: "
            "not a tritave-system note, reduce to the fundamental set first"
        )
    rep, shift = scales.period_reduce(ratio, scales.PYTH3)
    return NoteName(_PYTH3_BASE_BY_U[rep.u], shift)


def note_name_at_degree(degree: int) -> NoteName:
    """Name of the tritave-system note at an absolute scale degree."""
    t = (degree + 9) // 19
    s = (degree + 9) % 19 - 9
    return NoteName(BASE_NAMES_PYTH3[s + 9], t)


def _split_marks(text: str, bases: list[str]) -> tuple[str, str]:
    for base in bases:
        if text.startswith(base):
            return base, text[len(base):]
    raise ValueError(f"unknown note name {text!r}")


def parse_note(text: str) -> FreqRatio:
    """Parse a tritave-system name (inverse of :func:`name_of`)."""
    base, marks = _split_marks(text, _PYTH3_BASES_DESC)
    if marks and (set(marks) == {"'"} or set(marks) == {","}):
        raise ValueError(
            f"{text!r} uses octave-system marks; in the tritave system write "
            "whole-tritave shifts with '^' and 'v'"
        )
    if marks and set(marks) not in ({"^"}, {"v"}):
        raise ValueError(f"bad shift marks in {text!r}: use only '^' or only 'v'")
    shift = len(marks) if marks.startswith("^") else -len(marks)
    return NoteName(base, shift).ratio()


def pyth2_name_of(ratio: FreqRatio) -> str:
    """Octave-system spelling: base name plus repeated primes/commas."""
    if not -5 <= ratio.v <= 6:
        raise ValueError(
            f"harmonic degree {ratio.v} outside [-5, 6]: "
            "not an octave-system note, reduce to the fundamental set first"
        )
    rep, shift = scales.period_reduce(ratio, scales.PYTH2)
    base = _PYTH2_BASE_BY_V[rep.v]
    return base + ("'" * shift if shift >= 0 else "," * -shift)


def parse_pyth2_note(text: str) -> FreqRatio:
    base, marks = _split_marks(text, _PYTH2_BASES_DESC)
    if marks and set(marks) not in ({"'"}, {","}):
        raise ValueError(f"bad octave marks in {text!r}: use only \"'\" or only ','")
    shift = len(marks) if marks.startswith("'") else -len(marks)
    return _PYTH2_BASE_RATIO[base] * OCTAVE ** shift


def edo12_name(semitone: int) -> str:
    """Name of a 12-EDO pitch (semitones relative to the central C)."""
    pc = semitone % 12
    octaves = (semitone - pc) // 12
    if pc == 11:          # plain B is the semitone below plain C
        octaves += 1
    return NAMES_EDO12[pc] + ("'" * octaves if octaves >= 0 else "," * -octaves)


def parse_edo12_note(text: str) -> int:
    base, marks = _split_marks(text, _EDO12_BASES_DESC)
    if marks and set(marks) not in ({"'"}, {","}):
        raise ValueError(f"bad octave marks in {text!r}: use only \"'\" or only ','")
    shift = len(marks) if marks.startswith("'") else -len(marks)
    pc = NAMES_EDO12.index(base)
    return (pc - 12 if pc == 11 else pc) + 12 * shift


@dataclass(frozen=True)
class KeyLabel:
    midi: int
    name: NoteName
    scale_degree: int
    color: str  # "white" | "black"


_BLACK_PCS = {1, 3, 6, 8, 10}


def keyboard_labels(midi_lo: int = 21, midi_hi: int = 108) -> list[KeyLabel]:
    """Tritave-system labels for a run of piano keys (D4 = MIDI 62 = degree 0)."""
    if not 0 <= midi_lo <= midi_hi <= 127:
        raise ValueError("midi range must satisfy 0 <= lo <= hi <= 127")
    labels = []
    for midi in range(midi_lo, midi_hi + 1):
        degree = midi - 62
        labels.append(
            KeyLabel(
                midi=midi,
                name=note_name_at_degree(degree),
                scale_degree=degree,
                color="black" if midi % 12 in _BLACK_PCS else "white",
            )
        )
    return labels


def key_color_by_harmonic_degree(h: int) -> str:
    """Key colour on the tritave-periodic keyboard: low degrees are white.

    Eleven white and eight black keys per tritave; the harmonic degree is
    tritave-invariant so the colouring repeats exactly.
    """
    if not -9 <= h <= 9:
        raise ValueError(f"harmonic degree {h} outside [-9, 9]")
    return "white" if abs(h) <= 5 else "black"
