"""Cutting sequences on the square torus.

The fundamental domain is the unit square with the left side labeled A, the
right side Ā, the bottom B and the top B̄; a curve takes the label of each
side from the copy it enters.  A line of slope p/q (p vertical crossings, q
horizontal ones per period) is encoded exactly: the A crossing at x = i and
the B crossing at y = l are merged by comparing i*p with l*q, with an
implicit upward offset so that ties never occur inside the segment.

Every crossing carries an integer rank giving its position along its side,
which is all the geometry needed to classify strands, find the middle
strand, and draw crossing-free pictures of simple curves.
"""

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional, Union

from .farey import INFINITY, ZERO, ExtRational
from .words import Word

WORD_A = Word("A")
WORD_B = Word("B")


class EmptyWordError(ValueError):
    """The identity word has no strand diagram."""


@dataclass(frozen=True)
class CuttingSpec:
    """A slope plus the starting strand of its fundamental segment.

    start is "lowest_a" (the lowest crossing on an A side), "rightmost_bottom"
    (the last bottom crossing before the segment closes up), "middle_strand"
    (the centered start used for palindromes), or an integer offset into the
    lowest_a rotation.
    """

    slope: ExtRational
    start: Union[str, int] = "lowest_a"


# (entry code, next entry code) -> (kind, corner_type, entry_side, exit_side)
_PAIR_INFO = {
    (1, 1): ("horizontal", "none", "left", "right"),
    (1, 2): ("corner", "left_top", "left", "top"),
    (1, -2): ("corner", "left_bottom", "left", "bottom"),
    (-1, -1): ("horizontal", "none", "right", "left"),
    (-1, 2): ("corner", "top_right", "right", "top"),
    (-1, -2): ("corner", "bottom_right", "right", "bottom"),
    (2, 2): ("vertical", "none", "bottom", "top"),
    (2, 1): ("corner", "bottom_right", "bottom", "right"),
    (2, -1): ("corner", "left_bottom", "bottom", "left"),
    (-2, -2): ("vertical", "none", "top", "bottom"),
    (-2, 1): ("corner", "top_right", "top", "right"),
    (-2, -1): ("corner", "left_top", "top", "left"),
}

_OPPOSITE_CORNER_PAIRS = (
    frozenset(("left_top", "bottom_right")),
    frozenset(("left_bottom", "top_right")),
)


class Strand(NamedTuple):
    index: int
    kind: str  # "vertical", "horizontal" or "corner"
    corner_type: str  # "none" for non-corner strands
    entry_side: str
    exit_side: str


class StrandCounts(NamedTuple):
    vertical: int
    horizontal: int
    corner: int


@dataclass(frozen=True)
class StrandDiagram:
    strands: tuple
    counts: StrandCounts
    simple: bool
    word: Word

    def to_json_dict(self) -> dict:
        return {
            "word": str(self.word),
            "simple": self.simple,
            "counts": {
                "vertical": self.counts.vertical,
                "horizontal": self.counts.horizontal,
                "corner": self.counts.corner,
            },
            "strands": [
                {"index": s.index, "kind": s.kind, "corner_type": s.corner_type}
                for s in self.strands
            ],
        }


def _crossings(p: int, q: int) -> list:
    """Merged crossing list for the segment of slope p/q: (code, rank) pairs.

    Ranks order the crossings along their side, 1-based; the lowest A
    crossing has rank 1 and the rightmost bottom crossing has rank p.
    """
    seq = []
    i, l = 0, 1
    while i < q or l <= p:
        if l > p or (i < q and i * p < l * q):
            seq.append((1, (i * p) % q + 1))
            i += 1
        else:
            seq.append((2, (l * q - 1) % p + 1))
            l += 1
    return seq


def _start_index(seq: list, p: int, q: int, start, pq_even: bool) -> int:
    if isinstance(start, int):
        if not 0 <= start < p + q:
            raise ValueError(f"start offset {start} out of range")
        return start
    if start == "lowest_a":
        return 0
    if start == "rightmost_bottom":
        return max(range(len(seq)), key=lambda j: (seq[j][0] == 2, seq[j][1]))
    if start == "middle_strand":
        if not pq_even:
            raise ValueError("no middle strand: pq is odd")
        block = 2 if p > q else 1
        inner = [
            (seq[j][1], j)
            for j in range(len(seq) - 1)
            if seq[j][0] == block and seq[j + 1][0] == block
        ]
        inner.sort()
        _, j = inner[len(inner) // 2]
        return j + 1
    raise ValueError(f"unknown start {start!r}")


def cutting_word(spec: CuttingSpec) -> Word:
    """The cyclic side-label word of a rational-slope line, rotated to the
    requested starting strand."""
    x = spec.slope
    if x == ZERO:
        return WORD_A
    if x == INFINITY:
        return WORD_B
    negative = x < ZERO
    p, q = abs(x.p), x.q
    seq = _crossings(p, q)
    j = _start_index(seq, p, q, spec.start, (p * q) % 2 == 0)
    codes = tuple(code for code, _ in seq[j:] + seq[:j])
    if negative:
        codes = tuple(-c if abs(c) == 2 else c for c in codes)
    return Word._from_reduced(codes)


@functools.lru_cache(maxsize=4096)
def _cutting_doubled(x: ExtRational) -> bytes:
    enc = bytes(c + 2 for c in cutting_word(CuttingSpec(x)).codes)
    return enc + enc


def _simple_match(codes: tuple) -> Optional[tuple]:
    """Match a cyclically reduced word against the cutting word of its slope.

    Returns (offset, flip_a, flip_b, slope) such that flipping signs and
    rotating left by offset reproduces the cutting word, or None.
    """
    a_signs = set()
    b_signs = set()
    p = q = 0
    for c in codes:
        if abs(c) == 1:
            a_signs.add(c)
            q += 1
        else:
            b_signs.add(c)
            p += 1
    if len(a_signs) > 1 or len(b_signs) > 1:
        return None
    if gcd(p, q) != 1:
        return None
    flip_a, flip_b = -1 in a_signs, -2 in b_signs
    x = INFINITY if q == 0 else ExtRational(p, q)
    positive = bytes(
        (-c if (flip_a and abs(c) == 1) or (flip_b and abs(c) == 2) else c) + 2
        for c in codes
    )
    idx = _cutting_doubled(x).find(positive)
    if idx < 0:
        return None
    return idx % len(codes), flip_a, flip_b, x


def strand_diagram(w: Word) -> StrandDiagram:
    """Fold the word's strands into one fundamental domain and classify them.

    Simplicity is decided by exact comparison with the cutting word of the
    word's slope (up to rotation and generator sign flips), with the cheap
    structural rejections run first.
    """
    codes = w.codes
    n = len(codes)
    if n == 0:
        raise EmptyWordError("the identity word has no strands")
    if not w.is_cyclically_reduced():
        raise ValueError("word must be cyclically reduced")
    strands = []
    vertical = horizontal = corner = 0
    corner_types = set()
    for j in range(n):
        info = _PAIR_INFO[(codes[j], codes[(j + 1) % n])]
        kind, corner_type = info[0], info[1]
        if kind == "vertical":
            vertical += 1
        elif kind == "horizontal":
            horizontal += 1
        else:
            corner += 1
            corner_types.add(corner_type)
        strands.append(Strand(j, kind, corner_type, info[2], info[3]))
    if vertical and horizontal:
        simple = False
    elif not any(corner_types <= pair for pair in _OPPOSITE_CORNER_PAIRS):
        simple = False
    else:
        simple = _simple_match(codes) is not None
    return StrandDiagram(
        tuple(strands), StrandCounts(vertical, horizontal, corner), simple, w
    )


def centered_palindrome(x: ExtRational) -> Word:
    """Cutting word started at the end of the middle non-corner strand.

    Exists exactly when pq is even; the result is the palindromic rotation
    of the slope word, starting and ending with A below slope 1 and with B
    above it.
    """
    if x in (ZERO, INFINITY):
        return WORD_A if x == ZERO else WORD_B
    if (x.p * x.q) % 2:
        raise ValueError(f"pq is odd for {x}: no palindromic representative")
    return cutting_word(CuttingSpec(x, "middle_strand"))


# SVG rendering ---------------------------------------------------------

_CANVAS = 512
_MARGIN = 32
_COLORS = {"vertical": "#1f77b4", "horizontal": "#2ca02c", "corner": "#ff7f0e"}
_CROSSING_COLOR = "#d62728"


def _crossing_scalars(d: StrandDiagram) -> list:
    """One boundary coordinate per crossing: a height for A-type crossings,
    a horizontal position for B-type ones, as exact fractions.

    Simple words reuse the rank layout of their slope line (mirrored to
    match sign flips), so their strands never intersect; other words place
    crossings in visit order, as when drawing the curve by hand.
    """
    codes = d.word.codes
    n = len(codes)
    match = _simple_match(codes) if d.simple else None
    if match is not None:
        idx, flip_a, flip_b, x = match
        p, q = (abs(x.p), x.q)
        ranks = [r for _, r in _crossings(p, q)] if q else [1]
        out = []
        for k in range(n):
            rank = ranks[(k + idx) % n]
            if abs(codes[k]) == 1:
                v = Fraction(rank, q + 1)
                out.append(1 - v if flip_b else v)
            else:
                v = Fraction(rank, p + 1)
                out.append(1 - v if flip_a else v)
        return out
    n_a = sum(1 for c in codes if abs(c) == 1)
    n_b = n - n_a
    out = []
    seen_a = seen_b = 0
    for c in codes:
        if abs(c) == 1:
            seen_a += 1
            out.append(Fraction(seen_a, n_a + 1))
        else:
            seen_b += 1
            out.append(Fraction(seen_b, n_b + 1))
    return out


_ENTRY_POINT = {
    1: lambda t: (Fraction(0), t),
    -1: lambda t: (Fraction(1), t),
    2: lambda t: (t, Fraction(0)),
    -2: lambda t: (t, Fraction(1)),
}
_EXIT_POINT = {
    1: lambda t: (Fraction(1), t),
    -1: lambda t: (Fraction(0), t),
    2: lambda t: (t, Fraction(1)),
    -2: lambda t: (t, Fraction(0)),
}


def _segments(d: StrandDiagram) -> list:
    coords = _crossing_scalars(d)
    codes = d.word.codes
    n = len(codes)
    segs = []
    for j in range(n):
        k = (j + 1) % n
        segs.append((_ENTRY_POINT[codes[j]](coords[j]), _EXIT_POINT[codes[k]](coords[k])))
    return segs


def _intersections(segs: list) -> list:
    points = set()
    for a in range(len(segs)):
        (x1, y1), (x2, y2) = segs[a]
        rx, ry = x2 - x1, y2 - y1
        for b in range(a + 1, len(segs)):
            (x3, y3), (x4, y4) = segs[b]
            sx, sy = x4 - x3, y4 - y3
            den = rx * sy - ry * sx
            if den == 0:
                continue
            t = ((x3 - x1) * sy - (y3 - y1) * sx) / den
            u = ((x3 - x1) * ry - (y3 - y1) * rx) / den
            if 0 < t < 1 and 0 < u < 1:
                points.add((x1 + t * rx, y1 + t * ry))
    return sorted(points)


def _px(x: Fraction) -> str:
    return f"{_MARGIN + (_CANVAS - 2 * _MARGIN) * float(x):.3f}"


def _py(y: Fraction) -> str:
    return f"{_CANVAS - _MARGIN - (_CANVAS - 2 * _MARGIN) * float(y):.3f}"


def emit_svg(d: StrandDiagram) -> str:
    """Deterministic SVG picture of the diagram: labeled unit square, one
    colored segment per strand, red markers on crossings when not simple."""
    side = _CANVAS - 2 * _MARGIN
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_CANVAS}" height="{_CANVAS}" '
        f'viewBox="0 0 {_CANVAS} {_CANVAS}">',
        f'<rect x="0" y="0" width="{_CANVAS}" height="{_CANVAS}" fill="#ffffff"/>',
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{side}" height="{side}" '
        f'fill="none" stroke="#000000" stroke-width="1"/>',
        f'<text x="10" y="{_CANVAS // 2 + 5}" font-size="16">A</text>',
        f'<text x="{_CANVAS - 24}" y="{_CANVAS // 2 + 5}" font-size="16">Ā</text>',
        f'<text x="{_CANVAS // 2 - 5}" y="{_CANVAS - 8}" font-size="16">B</text>',
        f'<text x="{_CANVAS // 2 - 5}" y="22" font-size="16">B̄</text>',
    ]
    segs = _segments(d)
    for strand, ((xa, ya), (xb, yb)) in zip(d.strands, segs):
        lines.append(
            f'<line x1="{_px(xa)}" y1="{_py(ya)}" x2="{_px(xb)}" y2="{_py(yb)}" '
            f'stroke="{_COLORS[strand.kind]}" stroke-width="2"/>'
        )
    if not d.simple:
        for (cx, cy) in _intersections(segs):
            lines.append(
                f'<circle cx="{_px(cx)}" cy="{_py(cy)}" r="4" fill="{_CROSSING_COLOR}"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
