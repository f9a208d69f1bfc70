"""Tone lattices for both harmonic systems and the P/L/R moves on them.

In the 2:3:4 lattice the octave runs horizontally, split into a fifth up
the diagonal and a fourth down it; major and minor triads are the up- and
down-pointing triangles.  The 4:5:6 lattice is the classical one on 12-EDO
pitch classes with fifths horizontal and the two thirds on the diagonals.

Each elementary move flips a triangle across one of its edges, exchanging
major and minor while changing exactly one note:

* P keeps the shared octave (2:3:4) or fifth (4:5:6),
* R keeps the shared fifth (2:3:4) or relative-third edge (4:5:6),
* L keeps the shared fourth (2:3:4) or leading-tone edge (4:5:6).

2:3:4 moves act on exact ratios in the infinite lattice (inversions are
not invisible here, so the plane cannot be rolled up), while note
counting identifies tritave- and comma-equivalent notes, i.e. works with
the 19 classes of the finite lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import notation, scales
from .harmony import Chord, ChordQuality, chord_234, chord_456, classify
from .ratios import FreqRatio, FIFTH, FOURTH, OCTAVE

__all__ = [
    "TonnetzSystem",
    "TONNETZ_234",
    "TONNETZ_456",
    "Triad",
    "ReachLevel",
    "major_triad",
    "minor_triad",
    "triad_from_chord",
    "apply_plr",
    "apply_plr_sequence",
    "note_class",
    "reachable_note_classes",
    "note_coordinates",
    "lattice_coordinates",
]


@dataclass(frozen=True)
class TonnetzSystem:
    """Lattice geometry: horizontal step split into the two diagonals."""

    id: str
    horizontal: FreqRatio | int
    up_diagonal: FreqRatio | int
    down_diagonal: FreqRatio | int

    def __post_init__(self) -> None:
        if isinstance(self.horizontal, FreqRatio):
            assert self.up_diagonal * self.down_diagonal == self.horizontal
        else:
            assert self.up_diagonal + self.down_diagonal == self.horizontal


TONNETZ_234 = TonnetzSystem("234", OCTAVE, FIFTH, FOURTH)
TONNETZ_456 = TonnetzSystem("456", 7, 4, 3)


@dataclass(frozen=True)
class Triad:
    """A major or minor triangle: system, root and quality."""

    system: TonnetzSystem
    root: FreqRatio | int
    quality: ChordQuality

    def __post_init__(self) -> None:
        if self.quality not in (ChordQuality.MAJOR, ChordQuality.MINOR):
            raise ValueError("a lattice triad is major or minor")

    def notes(self) -> tuple:
        if self.system.id == "234":
            mid = FIFTH if self.quality is ChordQuality.MAJOR else FOURTH
            return (self.root, self.root * mid, self.root * OCTAVE)
        third = 4 if self.quality is ChordQuality.MAJOR else 3
        return (self.root % 12, (self.root + third) % 12, (self.root + 7) % 12)

    def chord(self) -> Chord:
        if self.system.id == "234":
            return chord_234(self.notes())
        return chord_456((self.root, self.root + (4 if self.quality is ChordQuality.MAJOR else 3), self.root + 7))


def major_triad(root, system: TonnetzSystem = TONNETZ_234) -> Triad:
    return Triad(system, root, ChordQuality.MAJOR)


def minor_triad(root, system: TonnetzSystem = TONNETZ_234) -> Triad:
    return Triad(system, root, ChordQuality.MINOR)


def triad_from_chord(c: Chord) -> Triad:
    quality = classify(c)
    if quality not in (ChordQuality.MAJOR, ChordQuality.MINOR):
        raise ValueError(f"P/L/R moves need a major or minor triad, got {quality}")
    system = TONNETZ_234 if c.system == "234" else TONNETZ_456
    return Triad(system, c.notes[0], quality)


# Root maps for the three moves; each is its own inverse.
_MINOR_THIRD_DOWN = FreqRatio(-2, 1)   # 3/4: major root -> R-partner root


def apply_plr(t: Triad, move: str) -> Triad:
    """One parallel / relative / leading-tone exchange; an involution."""
    move = move.upper()
    if move not in ("P", "L", "R"):
        raise ValueError(f"move must be P, L or R, not {move!r}")
    major = t.quality is ChordQuality.MAJOR
    flipped = ChordQuality.MINOR if major else ChordQuality.MAJOR
    if t.system.id == "234":
        if move == "P":
            root = t.root
        elif move == "R":
            root = t.root * (_MINOR_THIRD_DOWN if major else FOURTH)
        else:  # L
            root = t.root * (FIFTH if major else FIFTH.inverse())
    else:
        if move == "P":
            root = t.root
        elif move == "R":
            root = (t.root + (9 if major else 3)) % 12
        else:
            root = (t.root + (4 if major else -4)) % 12
    return Triad(t.system, root, flipped)


def apply_plr_sequence(t: Triad, moves: str) -> Triad:
    for move in moves:
        t = apply_plr(t, move)
    return t


def note_class(note, system: TonnetzSystem) -> str:
    """Class label of a note: one of 19 (2:3:4) or 12 (4:5:6) names.

    2:3:4 notes are identified up to tritaves and commas, which leaves the
    2-adic harmonic degree modulo 19; the label is the fundamental-domain
    name of that class.
    """
    if system.id == "234":
        h = (note.u + 9) % 19 - 9
        degree = scales.harmonic_to_scale_degree(h, scales.PYTH3)
        return notation.BASE_NAMES_PYTH3[degree + 9]
    return notation.NAMES_EDO12[note % 12]


@dataclass(frozen=True)
class ReachLevel:
    moves: int
    count: int
    classes: frozenset


def reachable_note_classes(start: Triad, max_moves: int) -> list[ReachLevel]:
    """Breadth-first search over triads under P, L and R.

    Level ``k`` reports how many distinct note classes occur in any triad
    reachable with at most ``k`` moves.  In the 2:3:4 system this grows by
    two classes per move until all 19 are reached after eight moves; the
    4:5:6 system covers its 12 classes in three.
    """
    if not 0 <= max_moves <= 12:
        raise ValueError("max_moves must be in [0, 12]")
    seen = {(start.root, start.quality)}
    frontier = [start]
    classes = {note_class(n, start.system) for n in start.notes()}
    levels = [ReachLevel(0, len(classes), frozenset(classes))]
    for k in range(1, max_moves + 1):
        nxt = []
        for triad in frontier:
            for move in "PLR":
                image = apply_plr(triad, move)
                key = (image.root, image.quality)
                if key not in seen:
                    seen.add(key)
                    nxt.append(image)
        for triad in nxt:
            classes.update(note_class(n, start.system) for n in triad.notes())
        levels.append(ReachLevel(k, len(classes), frozenset(classes)))
        frontier = nxt
    return levels


def note_coordinates(ratio: FreqRatio) -> tuple[int, int]:
    """Plane embedding of a 2:3:4 note: octave (+2, 0), fifth (+1, +1)."""
    return (2 * ratio.u + 3 * ratio.v, ratio.v)


def lattice_coordinates(t: Triad) -> tuple[tuple[int, int], ...]:
    """Vertices of the triad's triangle, root first.

    Major triads point up, minor triads down; the base is always two units
    wide (one octave) with the middle vertex one unit off the base line.
    """
    if t.system.id != "234":
        raise ValueError("lattice coordinates are defined for the 2:3:4 system")
    return tuple(note_coordinates(n) for n in t.notes())
