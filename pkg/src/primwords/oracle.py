"""Independent ground truth for primitivity: greedy Whitehead reduction and
the Nielsen commutator criterion for generating pairs.

These share no code with the enumeration schemes; they are the referee the
rest of the package is checked against.  The reduction works on cyclic
words: a primitive word always admits a length-decreasing elementary
automorphism until a single letter remains, while non-primitive words get
stuck at some longer local minimum.
"""

from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Optional

from .farey import ExtRational, is_neighbor
from .words import Word
from .enumerate import is_primitive, w_word
from .cutting import strand_diagram


@dataclass(frozen=True)
class WhiteheadMove:
    """An elementary automorphism given by its action on the generators."""

    kind: str  # "multiplier" or "permutation"
    description: str
    images: dict  # letter code -> replacement tuple
    cancels: tuple  # junction 2-grams that shorten the image by one pair
    target: int = 0  # the generator a multiplier move lengthens

    def apply(self, codes: tuple) -> tuple:
        out = []
        images = self.images
        for c in codes:
            out.extend(images[c])
        stack = []
        for c in out:
            if stack and stack[-1] == -c:
                stack.pop()
            else:
                stack.append(c)
        return tuple(stack)


def _identity_images() -> dict:
    return {1: (1,), -1: (-1,), 2: (2,), -2: (-2,)}


def _multiplier(x: int, d: int, right: bool) -> WhiteheadMove:
    images = _identity_images()
    if right:
        images[x] = (x, d)
        images[-x] = (-d, -x)
        cancels = ((x, -d), (d, -x))
    else:
        images[x] = (d, x)
        images[-x] = (-x, -d)
        cancels = ((-x, d), (-d, x))
    name = {1: "A", -1: "a", 2: "B", -2: "b"}
    xs, ds = name[x], name[d]
    desc = f"{xs}->{xs}{ds}" if right else f"{xs}->{ds}{xs}"
    return WhiteheadMove("multiplier", desc, images, cancels, x)


# Fixed order: the first strictly-reducing move is always taken.
MULTIPLIER_MOVES = (
    _multiplier(1, 2, True),    # A->AB
    _multiplier(1, -2, True),   # A->Ab
    _multiplier(1, 2, False),   # A->BA
    _multiplier(1, -2, False),  # A->bA
    _multiplier(2, 1, True),    # B->BA
    _multiplier(2, -1, True),   # B->Ba
    _multiplier(2, 1, False),   # B->AB
    _multiplier(2, -1, False),  # B->aB
)


def _permutation(mapping: dict, desc: str) -> WhiteheadMove:
    images = {c: (mapping[c],) for c in (1, -1, 2, -2)}
    return WhiteheadMove("permutation", desc, images, ())


def whitehead_moves() -> tuple:
    """The full rank-2 move set: length-neutral letter permutations plus the
    eight one-sided multiplier maps."""
    perms = []
    for swap in (False, True):
        for sa in (1, -1):
            for sb in (1, -1):
                if not swap and sa == 1 and sb == 1:
                    continue  # identity
                if swap:
                    mapping = {1: sa * 2, -1: -sa * 2, 2: sb * 1, -2: -sb * 1}
                    desc = f"A->{'B' if sa > 0 else 'b'}, B->{'A' if sb > 0 else 'a'}"
                else:
                    mapping = {1: sa * 1, -1: -sa * 1, 2: sb * 2, -2: -sb * 2}
                    desc = f"A->{'A' if sa > 0 else 'a'}, B->{'B' if sb > 0 else 'b'}"
                perms.append(_permutation(mapping, desc))
    return tuple(perms) + MULTIPLIER_MOVES


def _cyclic_core(codes: tuple) -> tuple:
    i, j = 0, len(codes)
    while j - i >= 2 and codes[i] == -codes[j - 1]:
        i += 1
        j -= 1
    return codes[i:j]


def whitehead_is_primitive(w: Word) -> bool:
    """Greedily shorten the cyclic word with multiplier moves; primitive
    words and only they reach cyclic length one."""
    t = _cyclic_core(w.codes)
    while True:
        n = len(t)
        if n <= 1:
            return n == 1
        # Length change of each move from the cyclic 2-gram counts: the
        # image grows by one letter per moved generator and loses a pair at
        # each cancelling junction.
        grams = {}
        letters = {1: 0, -1: 0, 2: 0, -2: 0}
        prev = t[-1]
        for c in t:
            key = (prev, c)
            grams[key] = grams.get(key, 0) + 1
            letters[c] += 1
            prev = c
        for move in MULTIPLIER_MOVES:
            x = move.target
            growth = letters[x] + letters[-x]
            c1, c2 = move.cancels
            if growth - 2 * (grams.get(c1, 0) + grams.get(c2, 0)) < 0:
                t = _cyclic_core(move.apply(t))
                break
        else:
            return False


_COMMUTATOR = Word("ABab")
_COMMUTATOR_INV = Word("BAba")


def is_generating_pair(u: Word, v: Word) -> bool:
    """Nielsen's criterion: u, v generate the group exactly when their
    commutator is conjugate to the commutator of the generators or its
    inverse."""
    comm = u * v * u.inverse() * v.inverse()
    return comm.cyclic_equal(_COMMUTATOR) or comm.cyclic_equal(_COMMUTATOR_INV)


_NEXT_LETTER = {1: (1, 2, -2), -1: (-1, 2, -2), 2: (1, -1, 2), -2: (1, -1, -2)}


def reduced_words(max_len: int) -> Iterator[tuple]:
    """Every freely reduced word of length 1..max_len, as letter codes."""
    def extend(prefix: tuple, remaining: int) -> Iterator[tuple]:
        for c in _NEXT_LETTER[prefix[-1]]:
            w = prefix + (c,)
            yield w
            if remaining > 1:
                yield from extend(w, remaining - 1)

    for c in (1, -1, 2, -2):
        w = (c,)
        yield w
        if max_len > 1:
            yield from extend(w, max_len - 1)


def _rationals_up_to(total: int) -> list:
    out = [ExtRational(0, 1), ExtRational(1, 0)]
    for n in range(2, total + 1):
        for p in range(1, n):
            if gcd(p, n - p) == 1:
                out.append(ExtRational(p, n - p))
    return out


@dataclass
class CrossCheckReport:
    checked: int = 0
    primitives: int = 0
    disagreements: list = field(default_factory=list)
    pairs_checked: int = 0
    pair_disagreements: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.pair_disagreements

    def to_json_dict(self) -> dict:
        return {
            "checked": self.checked,
            "primitives": self.primitives,
            "disagreements": self.disagreements,
            "pairs_checked": self.pairs_checked,
            "pair_disagreements": self.pair_disagreements,
        }


def cross_check(max_len: int, pair_total: int = 20) -> CrossCheckReport:
    """Compare the decision procedure, the strand-diagram test and the
    Whitehead oracle on every reduced word up to max_len, and the neighbor
    criterion against the commutator test on all slope pairs with
    numerator + denominator up to pair_total."""
    if max_len > 14:
        raise ValueError("max_len above 14 is too expensive")
    report = CrossCheckReport()
    for codes in reduced_words(max_len):
        w = Word._from_reduced(codes)
        verdict = is_primitive(w).primitive
        core = Word._from_reduced(_cyclic_core(codes))
        simple = strand_diagram(core).simple
        oracle = whitehead_is_primitive(w)
        report.checked += 1
        if verdict:
            report.primitives += 1
        if verdict != simple or verdict != oracle:
            if len(report.disagreements) < 10:
                report.disagreements.append(
                    {
                        "word": str(w),
                        "is_primitive": verdict,
                        "simple": simple,
                        "whitehead": oracle,
                    }
                )
    rationals = _rationals_up_to(pair_total)
    slope_words = {x: w_word(x) for x in rationals}
    for x in rationals:
        for y in rationals:
            neighbor = is_neighbor(x, y)
            generates = is_generating_pair(slope_words[x], slope_words[y])
            report.pairs_checked += 1
            if neighbor != generates:
                if len(report.pair_disagreements) < 10:
                    report.pair_disagreements.append(
                        {"x": str(x), "y": str(y), "neighbor": neighbor, "generates": generates}
                    )
    return report
