"""The three Farey-driven enumeration schemes for primitive words and the
exact primitivity decision procedure.

Index convention, fixed for the whole package: the word attached to p/q
contains p letters B and q letters A, so abelianize gives (p, q).  The bases
are A at 0/1, B at 1/0 and BA at 1/1.
"""

import functools
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

from .farey import (
    INFINITY,
    ZERO,
    ExtRational,
    continued_fraction,
    distinguished_neighbors,
    is_neighbor,
    mediant,
)
from .words import Word

WORD_A = Word("A")
WORD_B = Word("B")


class MixedSignsError(ValueError):
    """A generator occurs with both signs; the word cannot be primitive."""


def _require_nonnegative(x: ExtRational) -> None:
    if x < ZERO:
        raise ValueError(f"{x} is negative; apply a generator sign flip first")


def _cat(u: Word, v: Word) -> Word:
    # Scheme products never cancel (all letters positive), so skip rescanning.
    return Word._from_reduced(u.codes + v.codes)


@functools.lru_cache(maxsize=4096)
def w_word(x: ExtRational) -> Word:
    """Slope word by the high-neighbor-first recursion along the Farey path."""
    _require_nonnegative(x)
    if x == ZERO:
        return WORD_A
    if x == INFINITY:
        return WORD_B
    lo, w_lo = ZERO, WORD_A
    hi, w_hi = INFINITY, WORD_B
    while True:
        m = mediant(lo, hi)
        w_m = _cat(w_hi, w_lo)
        if m == x:
            return w_m
        if x < m:
            hi, w_hi = m, w_m
        else:
            lo, w_lo = m, w_m


def cf_word(x: ExtRational) -> Word:
    """The same word rebuilt from continued-fraction digits.

    Walks the approximants, multiplying the previous word on the side
    determined by whether the two-back approximant overshoots the target.
    Agrees with w_word letter for letter.
    """
    if x.is_infinite:
        raise ValueError("cf_word needs a finite slope")
    _require_nonnegative(x)
    digits = continued_fraction(x).digits
    x2, w2 = ZERO, WORD_A
    x1, w1 = INFINITY, WORD_B
    for a in digits:
        if x < x2:
            w = _cat(w2, w1 ** a)
        else:
            w = _cat(w1 ** a, w2)
        x_new = ExtRational(a * x1.p + x2.p, a * x1.q + x2.q)
        x2, w2 = x1, w1
        x1, w1 = x_new, w
    return w1


def v_sequence(x: ExtRational) -> tuple:
    """Block-form recursion for slopes above 1: starts (B, A B^a0), then each
    term is the two-back term times a digit power of the previous one.

    Rejects slopes <= 1; callers below 1 swap generators and use 1/x.
    """
    if x.is_infinite:
        raise ValueError("v_sequence needs a finite slope")
    if not ExtRational(1, 1) < x:
        raise ValueError("v_sequence needs a slope above 1")
    digits = continued_fraction(x).digits
    v_prev = WORD_B
    v_cur = _cat(WORD_A, WORD_B ** digits[0])
    out = [v_prev, v_cur]
    for a in digits[1:]:
        v_prev, v_cur = v_cur, _cat(v_prev, v_cur ** a)
        out.append(v_cur)
    return tuple(out)


@dataclass(frozen=True)
class ExponentSequence:
    """Block exponents of a single-signed word: blocks of the majority
    generator, one exponent per gap between consecutive minority letters,
    plus the leading block (which may be 0)."""

    slope_class: str  # "B-heavy" or "A-heavy"
    exponents: tuple
    separator_sign: int


def primitive_exponents(w: Word) -> ExponentSequence:
    """Read off the block exponents of a cyclically reduced word.

    Requires both generators present, each with a single sign; raises
    MixedSignsError otherwise (such words are never primitive).
    """
    if not w.is_cyclically_reduced():
        raise ValueError("word must be cyclically reduced")
    codes = w.codes
    a_signs = {c for c in codes if abs(c) == 1}
    b_signs = {c for c in codes if abs(c) == 2}
    if len(a_signs) > 1 or len(b_signs) > 1:
        raise MixedSignsError("a generator occurs with both signs")
    if not a_signs or not b_signs:
        raise ValueError("word must use both generators")
    na = sum(1 for c in codes if abs(c) == 1)
    nb = len(codes) - na
    if nb >= na:
        slope_class, block = "B-heavy", 2
        sep_sign = 1 if 1 in a_signs else -1
    else:
        slope_class, block = "A-heavy", 1
        sep_sign = 1 if 2 in b_signs else -1
    exponents = [0]
    for c in codes:
        if abs(c) == block:
            exponents[-1] += 1
        else:
            exponents.append(0)
    return ExponentSequence(slope_class, tuple(exponents), sep_sign)


def cyclic_block_exponents(codes: tuple, block: int) -> list:
    # One run per minority letter, read cyclically starting at a separator.
    start = next(i for i, c in enumerate(codes) if abs(c) != block)
    runs = []
    for c in codes[start:] + codes[:start]:
        if abs(c) == block:
            runs[-1] += 1
        else:
            runs.append(0)
    return runs


def _cyclic_block_values_ok(codes: tuple, n_block: int, n_sep: int, block: int) -> bool:
    # Necessary condition: cyclic runs of the majority generator all have
    # length floor(n_block/n_sep) or that plus one.
    a0 = n_block // n_sep
    return all(r == a0 or r == a0 + 1 for r in cyclic_block_exponents(codes, block))


@dataclass(frozen=True)
class PrimitiveVerdict:
    """Outcome of the primitivity test.  When primitive, x is the slope,
    symmetry names the generator sign flips mapping the core into the
    positive quadrant, and rotating the flipped core left by `rotation`
    gives the canonical slope word."""

    primitive: bool
    x: Optional[ExtRational] = None
    rotation: Optional[int] = None
    symmetry: Optional[str] = None
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.primitive


_SYMMETRY_TAGS = {
    (False, False): "identity",
    (True, False): "invert_a",
    (False, True): "invert_b",
    (True, True): "invert_both",
}


@functools.lru_cache(maxsize=4096)
def _canonical_doubled(x: ExtRational) -> bytes:
    canon = w_word(x).codes
    enc = bytes(c + 2 for c in canon)
    return enc + enc


def is_primitive(w: Word) -> PrimitiveVerdict:
    """Decide primitivity: normalize signs, then match against the canonical
    slope word up to rotation."""
    core, _ = w.cyclic_reduce()
    codes = core.codes
    n = len(codes)
    if n == 0:
        return PrimitiveVerdict(False, reason="identity word")
    a_pos = a_neg = b_pos = b_neg = 0
    for c in codes:
        if c == 1:
            a_pos += 1
        elif c == -1:
            a_neg += 1
        elif c == 2:
            b_pos += 1
        else:
            b_neg += 1
    if (a_pos and a_neg) or (b_pos and b_neg):
        return PrimitiveVerdict(False, reason="a generator occurs with both signs")
    flip_a, flip_b = a_neg > 0, b_neg > 0
    symmetry = _SYMMETRY_TAGS[(flip_a, flip_b)]
    p = b_pos + b_neg
    q = a_pos + a_neg
    if n == 1:
        x = INFINITY if p else ZERO
        return PrimitiveVerdict(True, x=x, rotation=0, symmetry=symmetry)
    if gcd(p, q) != 1:
        return PrimitiveVerdict(False, reason="exponent sums are not coprime")
    if p and q and not _cyclic_block_values_ok(
        codes, max(p, q), min(p, q), 2 if p >= q else 1
    ):
        return PrimitiveVerdict(False, reason="block exponents out of range")
    x = ExtRational(p, q)
    positive = bytes((-c if (flip_a and abs(c) == 1) or (flip_b and abs(c) == 2) else c) + 2 for c in codes)
    idx = _canonical_doubled(x).find(positive)
    if idx < 0 or idx >= n:
        return PrimitiveVerdict(False, reason=f"not the cutting pattern of slope {x}")
    return PrimitiveVerdict(True, x=x, rotation=(n - idx) % n, symmetry=symmetry)


@functools.lru_cache(maxsize=4096)
def e_word(x: ExtRational) -> Word:
    """Palindromic-scheme word: neighbor products ordered by the parity of pq."""
    _require_nonnegative(x)
    if x == ZERO:
        return WORD_A
    if x == INFINITY:
        return WORD_B
    lo, e_lo = ZERO, WORD_A
    hi, e_hi = INFINITY, WORD_B
    while True:
        m = mediant(lo, hi)
        if (m.p * m.q) % 2:
            e_m = _cat(e_hi, e_lo)
        else:
            e_m = _cat(e_lo, e_hi)
        if m == x:
            return e_m
        if x < m:
            hi, e_hi = m, e_m
        else:
            lo, e_lo = m, e_m


@dataclass(frozen=True)
class PalindromicParts:
    """Palindromic factorization: the whole word when pq is even, otherwise
    the two palindromic neighbor words whose product it is."""

    kind: str  # "single_palindrome" or "palindrome_pair"
    first: Word
    second: Word

    def product(self) -> Word:
        return self.first * self.second


def palindromic_parts(x: ExtRational) -> PalindromicParts:
    _require_nonnegative(x)
    if x in (ZERO, INFINITY):
        return PalindromicParts("single_palindrome", e_word(x), Word())
    if (x.p * x.q) % 2 == 0:
        return PalindromicParts("single_palindrome", e_word(x), Word())
    lo, hi = distinguished_neighbors(x)
    return PalindromicParts("palindrome_pair", e_word(hi), e_word(lo))


def enumerate_primitives(max_level: int) -> Iterator[tuple]:
    """Yield (x, w, e) for every slope of level at most max_level, by level
    and left to right, starting with the two base letters."""
    if max_level < 0:
        raise ValueError("max_level must be nonnegative")
    yield ZERO, WORD_A, WORD_A
    yield INFINITY, WORD_B, WORD_B
    # Queue of tree edges; each edge carries its endpoints' words and the
    # level of the mediant it will produce.
    edges = [(ZERO, INFINITY, WORD_A, WORD_B, WORD_A, WORD_B, 1)]
    while edges:
        next_edges = []
        for lo, hi, w_lo, w_hi, e_lo, e_hi, lvl in edges:
            if lvl > max_level:
                continue
            m = mediant(lo, hi)
            w_m = _cat(w_hi, w_lo)
            if (m.p * m.q) % 2:
                e_m = _cat(e_hi, e_lo)
            else:
                e_m = _cat(e_lo, e_hi)
            yield m, w_m, e_m
            next_edges.append((lo, m, w_lo, w_m, e_lo, e_m, lvl + 1))
            next_edges.append((m, hi, w_m, w_hi, e_m, e_hi, lvl + 1))
        edges = next_edges


def associates(x: ExtRational, y: ExtRational) -> bool:
    """Do the slope words of x and y form a generating pair?  Equivalent to
    the Farey neighbor test."""
    return is_neighbor(x, y)
