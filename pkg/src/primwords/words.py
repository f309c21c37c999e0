"""Exact word algebra over the two generators A, B and their inverses.

Letters are stored as small integer codes: A = 1, B = 2, negatives for
inverses.  The text syntax uses uppercase for generators and lowercase for
inverses, so ``"ABa"`` is A * B * A^-1 and the empty string is the identity.
Words are freely reduced at construction time and never mutated afterwards,
so they are safe to share between threads.
"""

from typing import Iterable, Iterator, NamedTuple, Union

A_CODE = 1
B_CODE = 2

_CHAR_TO_CODE = {"A": 1, "a": -1, "B": 2, "b": -2}
_CODE_TO_CHAR = {1: "A", -1: "a", 2: "B", -2: "b"}


class Letter(NamedTuple):
    """A single generator occurrence: gen is "A" or "B", sign is +1 or -1."""

    gen: str
    sign: int

    @property
    def code(self) -> int:
        return (A_CODE if self.gen == "A" else B_CODE) * self.sign

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls("A" if abs(code) == A_CODE else "B", 1 if code > 0 else -1)

    def __str__(self) -> str:
        return _CODE_TO_CHAR[self.code]


class AbelianImage(NamedTuple):
    """Net signed letter counts of a word; b_sum first, then a_sum."""

    b_sum: int
    a_sum: int

    def __add__(self, other):
        return AbelianImage(self.b_sum + other.b_sum, self.a_sum + other.a_sum)

    def __neg__(self):
        return AbelianImage(-self.b_sum, -self.a_sum)


LetterLike = Union[Letter, int, str]


def _code_of(item: LetterLike) -> int:
    if isinstance(item, Letter):
        return item.code
    if isinstance(item, int):
        if item in _CODE_TO_CHAR:
            return item
        raise ValueError(f"invalid letter code {item!r}")
    if item in _CHAR_TO_CODE:
        return _CHAR_TO_CODE[item]
    raise ValueError(f"invalid letter {item!r}")


def _reduce_codes(codes: Iterable[int]) -> tuple:
    stack = []
    push = stack.append
    pop = stack.pop
    for c in codes:
        if stack and stack[-1] == -c:
            pop()
        else:
            push(c)
    return tuple(stack)


class Word:
    """A freely reduced word.  Accepts text, letter codes, Letters or Words."""

    __slots__ = ("codes",)

    def __init__(self, letters: Union[str, "Word", Iterable[LetterLike]] = ()):
        if isinstance(letters, Word):
            codes = letters.codes
        elif isinstance(letters, str):
            codes = _reduce_codes(_code_of(ch) for ch in letters)
        else:
            codes = _reduce_codes(_code_of(item) for item in letters)
        object.__setattr__(self, "codes", codes)

    @classmethod
    def _from_reduced(cls, codes: tuple) -> "Word":
        # Fast path for callers that guarantee the codes are already reduced.
        w = object.__new__(cls)
        object.__setattr__(w, "codes", codes)
        return w

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @property
    def letters(self) -> tuple:
        return tuple(Letter.from_code(c) for c in self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.codes == other.codes

    def __hash__(self) -> int:
        return hash(self.codes)

    def __str__(self) -> str:
        return "".join(_CODE_TO_CHAR[c] for c in self.codes)

    def __repr__(self) -> str:
        return f'Word("{self}")'

    def __mul__(self, other: "Word") -> "Word":
        return Word._from_reduced(_reduce_codes(self.codes + other.codes))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = Word._from_reduced(())
        for _ in range(n):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return not self.codes

    def inverse(self) -> "Word":
        """Reverse the letters and flip every sign."""
        return Word._from_reduced(tuple(-c for c in reversed(self.codes)))

    def flipped(self, gens: str = "AB") -> "Word":
        """Replace each listed generator by its inverse, in place (no reversal)."""
        flip = set()
        if "A" in gens or "a" in gens:
            flip.update((1, -1))
        if "B" in gens or "b" in gens:
            flip.update((2, -2))
        return Word._from_reduced(tuple(-c if c in flip else c for c in self.codes))

    def swapped_generators(self) -> "Word":
        """Exchange the roles of A and B."""
        sign = lambda c: 1 if c > 0 else -1
        return Word._from_reduced(
            tuple(sign(c) * (3 - abs(c)) for c in self.codes)
        )

    def rotated(self, k: int) -> "Word":
        """Cyclic left rotation by k letters (meaningful for cyclically reduced words)."""
        if not self.codes:
            return self
        k %= len(self.codes)
        return Word(self.codes[k:] + self.codes[:k])

    def cyclic_reduce(self) -> tuple:
        """Split into (core, conjugator) with self == conjugator * core * conjugator^-1."""
        codes = self.codes
        i, j = 0, len(codes)
        while j - i >= 2 and codes[i] == -codes[j - 1]:
            i += 1
            j -= 1
        return Word._from_reduced(codes[i:j]), Word._from_reduced(codes[:i])

    def is_cyclically_reduced(self) -> bool:
        c = self.codes
        return len(c) < 2 or c[0] != -c[-1]

    def is_palindrome(self) -> bool:
        """True when the word reads the same in both directions (identity included)."""
        c = self.codes
        n = len(c)
        return all(c[i] == c[n - 1 - i] for i in range(n // 2))

    def abelianize(self) -> AbelianImage:
        b = a = 0
        for c in self.codes:
            if c == 1:
                a += 1
            elif c == -1:
                a -= 1
            elif c == 2:
                b += 1
            else:
                b -= 1
        return AbelianImage(b, a)

    def syllables(self) -> tuple:
        """Run-length view: tuple of (generator, signed exponent) blocks."""
        out = []
        for c in self.codes:
            gen = "A" if abs(c) == A_CODE else "B"
            step = 1 if c > 0 else -1
            if out and out[-1][0] == gen:
                out[-1][1] += step
            else:
                out.append([gen, step])
        return tuple((g, e) for g, e in out)

    def cyclic_equal(self, other: "Word") -> bool:
        """Conjugacy test: the cyclic reductions are rotations of one another."""
        u, _ = self.cyclic_reduce()
        v, _ = other.cyclic_reduce()
        if len(u) != len(v):
            return False
        if not u.codes:
            return True
        ub = bytes(c + 2 for c in u.codes)
        vb = bytes(c + 2 for c in v.codes)
        return ub in vb + vb


IDENTITY = Word._from_reduced(())


def reduce(raw: Union[str, Iterable[LetterLike]]) -> Word:
    """Freely reduce a raw letter sequence into a Word."""
    return Word(raw)


def inverse(w: Word) -> Word:
    return w.inverse()


def cyclic_reduce(w: Word) -> tuple:
    return w.cyclic_reduce()


def is_palindrome(w: Word) -> bool:
    return w.is_palindrome()


def abelianize(w: Word) -> AbelianImage:
    return w.abelianize()


def cyclic_equal(w1: Word, w2: Word) -> bool:
    return w1.cyclic_equal(w2)
