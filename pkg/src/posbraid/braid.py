"""Positive braid words, their underlying permutations and simple word moves.

A braid word on ``q`` strands is a left-to-right sequence of generator
indices ``i`` in ``[1, q-1]``; letter ``i`` crosses the strands at
positions ``i`` and ``i+1`` (positions counted top to bottom).  Crossing
``k`` (1-based) carries the label ``b_k``.  Labels are positional: any
operation returning a new word renumbers them on the new word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class BraidWordError(ValueError):
    """Raised for malformed braid words or invalid word moves."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..q}``; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, q: int) -> Permutation:
        return cls(tuple(range(1, q + 1)))

    @classmethod
    def transposition(cls, q: int, i: int) -> Permutation:
        """The transposition ``tau_i`` swapping ``i`` and ``i+1``."""
        images = list(range(1, q + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def compose(self, other: Permutation) -> Permutation:
        """Return ``self o other`` (apply ``other`` first)."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.size + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles (including fixed points), each starting at its smallest element."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def inversions(self) -> list[tuple[int, int]]:
        n = self.size
        return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                if self(i) > self(j)]

    def matrix(self) -> list[list[int]]:
        """The 0-1 matrix ``[delta_{pi(i), j}]``."""
        n = self.size
        return [[1 if self(i) == j else 0 for j in range(1, n + 1)]
                for i in range(1, n + 1)]


@dataclass(frozen=True)
class BraidWord:
    """A positive braid word: strand count plus generator indices."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        if self.strands < 1:
            raise BraidWordError("a braid needs at least one strand")
        for i in letters:
            if not 1 <= i <= self.strands - 1:
                raise BraidWordError(
                    f"generator index {i} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    @property
    def w(self) -> int:
        return len(self.letters)

    @property
    def q(self) -> int:
        return self.strands

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(i) for i in self.letters) if self.letters else "(empty)"

    def concat(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise BraidWordError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def permutation(self, upto: int | None = None) -> Permutation:
        return underlying_permutation(self, upto)


@dataclass(frozen=True)
class DiagramStats:
    w: int
    q: int
    mu: int
    tb: int
    chi_star: int
    connected: bool

    def as_dict(self) -> dict:
        return {"w": self.w, "q": self.q, "mu": self.mu, "tb": self.tb,
                "chi_star": self.chi_star, "connected": self.connected}


_TERM = re.compile(r"s?(\d+)(?:\^(-?\d+))?")
_SEP = re.compile(r"[,\s]+")


def parse_braid_word(text: str, strands_override: int | None = None) -> BraidWord:
    """Parse ``term (sep term)*`` with ``term := "s"? INT ("^" INT)?``.

    >>> parse_braid_word("s1^3").letters
    (1, 1, 1)
    """
    stripped = text.strip()
    letters: list[int] = []
    if stripped:
        for term in _SEP.split(stripped):
            if not term:
                continue
            m = _TERM.fullmatch(term)
            if m is None:
                raise BraidWordError(f"syntax error in braid word at {term!r}")
            index = int(m.group(1))
            power = int(m.group(2)) if m.group(2) is not None else 1
            if index < 1:
                raise BraidWordError(f"generator index must be positive, got {index}")
            if power < 1:
                raise BraidWordError(f"powers must be >= 1, got {term!r}")
            letters.extend([index] * power)
    if strands_override is not None:
        if strands_override < 1:
            raise BraidWordError("strand count must be positive")
        q = strands_override
        bad = [i for i in letters if i >= q]
        if bad:
            raise BraidWordError(f"letter {bad[0]} needs more than {q} strands")
    else:
        q = 1 + max(letters, default=0)
    return BraidWord(q, tuple(letters))


def underlying_permutation(b: BraidWord, upto: int | None = None) -> Permutation:
    """``pi_k = tau_{i_k} o ... o tau_{i_1}``; ``pi_k(s)`` is the position
    reached after ``k`` crossings by the strand starting at position ``s``."""
    k = b.w if upto is None else upto
    if not 0 <= k <= b.w:
        raise ValueError(f"prefix length {k} outside [0, {b.w}]")
    pos = list(range(1, b.q + 1))  # pos[s-1]: current position of strand s
    where = list(range(b.q + 1))   # where[p]: strand at position p
    for i in b.letters[:k]:
        s, t = where[i], where[i + 1]
        where[i], where[i + 1] = t, s
        pos[s - 1], pos[t - 1] = i + 1, i
    return Permutation(tuple(pos))


def diagram_stats(b: BraidWord) -> DiagramStats:
    mu = len(underlying_permutation(b).cycles())
    tb = b.w - b.q
    connected = set(range(1, b.q)) <= set(b.letters)
    return DiagramStats(w=b.w, q=b.q, mu=mu, tb=tb, chi_star=tb, connected=connected)


def cyclic_rotate(b: BraidWord, steps: int) -> BraidWord:
    """Move the first ``steps`` letters to the end (negative steps rotate right)."""
    if not b.letters:
        return b
    s = steps % b.w
    return BraidWord(b.q, b.letters[s:] + b.letters[:s])


def apply_r3(b: BraidWord, pos: int) -> BraidWord:
    """Replace ``s_i s_{i+1} s_i`` at 1-based ``pos`` by ``s_{i+1} s_i s_{i+1}`` or back.

    Labels are renumbered positionally on the new word.  To follow the
    labelling under which the path matrix changes by the triangle chain map,
    the labels of the three crossings are reversed; see :func:`r3_relabel`.
    """
    k = pos - 1
    if not 0 <= k <= b.w - 3:
        raise BraidWordError(f"no three letters at position {pos}")
    x, y, z = b.letters[k:k + 3]
    if x != z or abs(x - y) != 1:
        raise BraidWordError(f"letters {x} {y} {z} at {pos} are not a braid relation site")
    letters = b.letters[:k] + (y, x, y) + b.letters[k + 3:]
    return BraidWord(b.q, letters)


def r3_relabel(labels: Sequence, pos: int) -> list:
    """Labels of the word produced by :func:`apply_r3` that match the triangle
    move: the three labels at the relation site are reversed."""
    k = pos - 1
    out = list(labels)
    out[k:k + 3] = reversed(out[k:k + 3])
    return out


def reduced_permutation_word(p: Permutation) -> BraidWord:
    """Canonical positive word of the permutation braid of ``p``.

    For each target position ``j = 1..q`` in turn, the strand destined for
    ``j`` is pulled up to position ``j`` (bubble sort, top down).  Every pair
    of strands crosses at most once and the length is the inversion count.
    """
    q = p.size
    where = [0] + list(range(1, q + 1))  # where[pos] = strand
    letters: list[int] = []
    for j in range(1, q + 1):
        strand = p.inverse()(j)
        cur = where.index(strand)
        while cur > j:
            letters.append(cur - 1)
            where[cur - 1], where[cur] = where[cur], where[cur - 1]
            cur -= 1
    return BraidWord(q, tuple(letters))


def random_word(rng, q: int, w: int) -> BraidWord:
    """A uniformly random word with ``w`` letters on ``q`` strands."""
    if q < 2:
        return BraidWord(q, ())
    return BraidWord(q, tuple(int(x) for x in rng.integers(1, q, size=w)))


def words(q: int, w: int) -> Iterable[BraidWord]:
    """All words of length ``w`` on ``q`` strands, in lexicographic order."""
    from itertools import product

    if q < 2:
        if w == 0:
            yield BraidWord(q, ())
        return
    for letters in product(range(1, q), repeat=w):
        yield BraidWord(q, letters)
