"""Generator letters, level domains, and word orders.

A letter is a plain tuple (i, j, r): row index i, column index j (both in
1..n), and an integer level r.  Levels live in one of three domains:

* "nat"  - nonnegative integers (level shifts below 0 are undefined),
* "int"  - all integers,
* "mod"  - residues modulo an even modulus 2d.

A word is a tuple of letters; the empty tuple UNIT is the unit monomial.
"""

from dataclasses import dataclass
from enum import Enum

UNIT = ()


@dataclass(frozen=True)
class LevelDomain:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in ("nat", "int", "mod"):
            raise ValueError("unknown level domain kind %r" % self.kind)
        if self.kind == "mod":
            m = self.modulus
            if not isinstance(m, int) or m < 2 or m % 2:
                raise ValueError("modular level domain needs an even modulus >= 2, got %r" % m)
        elif self.modulus is not None:
            raise ValueError("%s level domain takes no modulus" % self.kind)

    @classmethod
    def nat(cls):
        return cls("nat")

    @classmethod
    def integers(cls):
        return cls("int")

    @classmethod
    def mod(cls, m):
        return cls("mod", m)

    def canon(self, r):
        """Canonical representative of a level."""
        r = int(r)
        if self.kind == "mod":
            return r % self.modulus
        if self.kind == "nat" and r < 0:
            raise ValueError("negative level %d in the nat domain" % r)
        return r

    def valid(self, r):
        if self.kind == "nat":
            return r >= 0
        if self.kind == "mod":
            return 0 <= r < self.modulus
        return True

    def step(self, r, delta):
        """Shift a level by delta; undefined below 0 in the nat domain."""
        if self.kind == "mod":
            return (r + delta) % self.modulus
        s = r + delta
        if self.kind == "nat" and s < 0:
            raise ValueError("level step %d from %d leaves the nat domain" % (delta, r))
        return s

    def up(self, r):
        """step(r, +1), which is always defined."""
        if self.kind == "mod":
            return (r + 1) % self.modulus
        return r + 1

    def levels(self, window=None):
        """The concrete levels to enumerate over.

        Modular domains ignore the window and return all residues; nat/int
        domains require an inclusive window (lo, hi).
        """
        if self.kind == "mod":
            return tuple(range(self.modulus))
        if window is None:
            raise ValueError("a level window (lo, hi) is required for the %s domain" % self.kind)
        lo, hi = int(window[0]), int(window[1])
        if lo > hi:
            raise ValueError("empty level window %r" % (window,))
        if self.kind == "nat" and lo < 0:
            raise ValueError("window %r dips below 0 in the nat domain" % (window,))
        return tuple(range(lo, hi + 1))

    def __str__(self):
        if self.kind == "mod":
            return "Z/%d" % self.modulus
        return "N" if self.kind == "nat" else "Z"


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1
    INCOMPARABLE = 2


def letter(n, dom, i, j, r):
    """Validated letter constructor."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("letter indices (%d,%d) outside 1..%d" % (i, j, n))
    return (i, j, dom.canon(r))


def word_levels(w):
    return tuple(l[2] for l in w)


def word_ij(w):
    """The flattened row/column index sequence (i1, j1, i2, j2, ...)."""
    seq = []
    for i, j, _ in w:
        seq.append(i)
        seq.append(j)
    return tuple(seq)


def storage_key(w):
    """Total-order key used for storage and printing: length, then the level
    sequence lexicographically, then the index sequence lexicographically."""
    return (len(w), word_levels(w), word_ij(w))


def compare_words(a, b):
    """The partial order that orients the reduction system.

    a < b when a is shorter, or when the lengths and level sequences agree
    and the index sequence of a is lexicographically smaller.  Same-length
    words with different level sequences are incomparable.
    """
    if len(a) != len(b):
        return Ordering.LESS if len(a) < len(b) else Ordering.GREATER
    if word_levels(a) != word_levels(b):
        return Ordering.INCOMPARABLE
    ia, ib = word_ij(a), word_ij(b)
    if ia == ib:
        return Ordering.EQUAL
    return Ordering.LESS if ia < ib else Ordering.GREATER


def letter_str(l):
    return "x[%d,%d;%d]" % l


def word_str(w):
    if not w:
        return "1"
    return "*".join(letter_str(l) for l in w)
