"""Exact Farey-tree arithmetic: mediants, neighbors, continued fractions,
approximants, tree levels and distinguished neighbors.

All values are exact integers.  The point at infinity is written 1/0 and
compares greater than every finite rational.
"""

import functools
from dataclasses import dataclass
from math import gcd
from typing import Optional


@functools.total_ordering
class ExtRational:
    """A fraction p/q in lowest terms, q >= 0, with 1/0 allowed as infinity."""

    __slots__ = ("p", "q")

    def __init__(self, p: int, q: int):
        if q == 0:
            if p == 0:
                raise ValueError("0/0 is not a rational")
            p = 1
        elif q < 0:
            p, q = -p, -q
        g = gcd(abs(p), q)
        if g > 1:
            p //= g
            q //= g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("ExtRational is immutable")

    @classmethod
    def parse(cls, text: str) -> "ExtRational":
        """Parse "p/q" (or a bare integer "p")."""
        parts = text.strip().split("/")
        try:
            if len(parts) == 1:
                return cls(int(parts[0]), 1)
            if len(parts) == 2:
                return cls(int(parts[0]), int(parts[1]))
        except ValueError:
            pass
        raise ValueError(f"malformed rational {text!r}")

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtRational)
            and self.p == other.p
            and self.q == other.q
        )

    def __lt__(self, other: "ExtRational") -> bool:
        return self.p * other.q < other.p * self.q

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def __repr__(self) -> str:
        return f"ExtRational({self.p}, {self.q})"


ZERO = ExtRational(0, 1)
ONE = ExtRational(1, 1)
INFINITY = ExtRational(1, 0)


@dataclass(frozen=True)
class ContinuedFraction:
    """Canonical digit list [a0,...,ak]: a0 >= 0, interior digits >= 1,
    final digit >= 2 unless it is the only digit."""

    digits: tuple

    def __post_init__(self):
        d = tuple(int(a) for a in self.digits)
        object.__setattr__(self, "digits", d)
        if not d:
            raise ValueError("continued fraction needs at least one digit")
        if d[0] < 0:
            raise ValueError("first digit must be nonnegative")
        if any(a < 1 for a in d[1:]):
            raise ValueError("later digits must be positive")
        if len(d) > 1 and d[-1] < 2:
            raise ValueError("final digit must be at least 2 in canonical form")

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        t = text.strip()
        if not (t.startswith("[") and t.endswith("]")):
            raise ValueError(f"malformed continued fraction {text!r}")
        try:
            digits = tuple(int(s) for s in t[1:-1].split(","))
        except ValueError:
            raise ValueError(f"malformed continued fraction {text!r}") from None
        return cls(digits)

    def value(self) -> ExtRational:
        return evaluate_digits(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __len__(self):
        return len(self.digits)

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.digits) + "]"


@dataclass(frozen=True)
class FareyPath:
    """The triangle walk from the base edge (0/1, 1/0) down to a target.

    vertices are the new triangle vertices in order (the Farey sequence of
    the target), level counts the triangles crossed, and the neighbors are
    the final edge endpoints.  The base vertices 0/1 and 1/0 get the empty
    path with level 0 and no neighbors.
    """

    vertices: tuple
    level: int
    left_neighbor: Optional[ExtRational]
    right_neighbor: Optional[ExtRational]


def mediant(x: ExtRational, y: ExtRational) -> ExtRational:
    """Farey sum (p+r)/(q+s); lies strictly between Farey neighbors."""
    return ExtRational(x.p + y.p, x.q + y.q)


def is_neighbor(x: ExtRational, y: ExtRational) -> bool:
    """Farey neighbor test: |ps - qr| = 1."""
    return abs(x.p * y.q - x.q * y.p) == 1


def continued_fraction(x: ExtRational) -> ContinuedFraction:
    """Canonical continued fraction of a finite nonnegative rational."""
    if x.is_infinite:
        raise ValueError("1/0 has no continued fraction")
    if x < ZERO:
        raise ValueError("negative rationals are handled by generator symmetry")
    digits = []
    p, q = x.p, x.q
    while q:
        a, r = divmod(p, q)
        digits.append(a)
        p, q = q, r
    return ContinuedFraction(tuple(digits))


def evaluate_digits(digits) -> ExtRational:
    """Evaluate an arbitrary digit list via the approximant recursion.

    Not restricted to canonical form (used for truncated expansions); the
    empty list evaluates to 1/0.
    """
    p_prev, q_prev = 0, 1
    p_cur, q_cur = 1, 0
    for a in digits:
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
    return ExtRational(p_cur, q_cur)


def from_continued_fraction(cf: ContinuedFraction) -> ExtRational:
    """Inverse of continued_fraction."""
    return evaluate_digits(cf.digits)


def approximants(cf: ContinuedFraction) -> tuple:
    """Convergents p_j/q_j of the digit list, ending at its value."""
    out = []
    p_prev, q_prev = 0, 1
    p_cur, q_cur = 1, 0
    for a in cf.digits:
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        out.append(ExtRational(p_cur, q_cur))
    return tuple(out)


def farey_path(x: ExtRational) -> FareyPath:
    """Descend the Farey tree from the base edge to x by repeated mediants."""
    if x in (ZERO, INFINITY):
        return FareyPath((), 0, None, None)
    if x < ZERO:
        raise ValueError("negative rationals are handled by generator symmetry")
    lo, hi = ZERO, INFINITY
    vertices = []
    while True:
        m = mediant(lo, hi)
        vertices.append(m)
        if m == x:
            break
        if x < m:
            hi = m
        else:
            lo = m
    return FareyPath(tuple(vertices), len(vertices), lo, hi)


def distinguished_neighbors(x: ExtRational) -> tuple:
    """The unique pair of lower-level neighbors (lo, hi) with mediant x."""
    if x in (ZERO, INFINITY):
        raise ValueError(f"{x} has no distinguished neighbors")
    path = farey_path(x)
    return path.left_neighbor, path.right_neighbor


def level(x: ExtRational) -> int:
    """Farey level, computed as the digit sum of the continued fraction."""
    if x == INFINITY:
        return 0
    return sum(continued_fraction(x).digits)
