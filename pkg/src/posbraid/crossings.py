"""Subsets of the crossings of a braid word, stored as bit masks.

Bit ``k-1`` of ``mask`` is set iff crossing ``b_k`` is a member.  Lists of
crossing sets are ordered by ascending mask (plain binary counting).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class CrossingSet:
    w: int
    mask: int = 0

    def __post_init__(self):
        if self.w < 0 or self.mask < 0 or self.mask >> self.w:
            raise ValueError(f"mask {self.mask:#x} does not fit {self.w} crossings")

    @classmethod
    def from_members(cls, w: int, members: Iterable[int]) -> CrossingSet:
        mask = 0
        for k in members:
            if not 1 <= k <= w:
                raise ValueError(f"crossing {k} outside 1..{w}")
            mask |= 1 << (k - 1)
        return cls(w, mask)

    @classmethod
    def full(cls, w: int) -> CrossingSet:
        return cls(w, (1 << w) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(k for k in range(1, self.w + 1) if self.mask >> (k - 1) & 1)

    def __contains__(self, k: int) -> bool:
        return 1 <= k <= self.w and bool(self.mask >> (k - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def bits(self) -> str:
        """Characteristic vector ``x_1 x_2 ... x_w`` as a 0/1 string."""
        return "".join("1" if k in self else "0" for k in range(1, self.w + 1))

    def assignment(self) -> dict:
        """Characteristic assignment ``b_k -> 0/1``."""
        return {("b", k): int(k in self) for k in range(1, self.w + 1)}

    def __str__(self) -> str:
        return "{" + ", ".join(f"b{k}" for k in self.members) + "}"


def all_subsets(w: int) -> Iterator[CrossingSet]:
    for mask in range(1 << w):
        yield CrossingSet(w, mask)
