"""Augmentations of the Lagrangian closure via Gaussian elimination over GF(2).

A crossing set ``Y`` is an augmentation iff the 0-1 matrix ``eps_Y(B)``
has all leading principal minors equal to 1, i.e. elimination runs to the
end without a row swap.  The last minor is always 1 (``det B = 1``), so
only ``q - 1`` pivots are tested.

Bit matrices are lists of row masks: bit ``j-1`` of ``rows[i-1]`` is entry
``(i, j)``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .braid import BraidWord
from .crossings import CrossingSet
from .dga import admissible_sequences, differential
from .freealg import NcPoly
from .pathmatrix import path_matrix

DEFAULT_MAX_SUBSETS = 1 << 26
_CHUNK = 1 << 16


class EnumerationGuardError(RuntimeError):
    pass


@dataclass(frozen=True)
class BitMatrix:
    q: int
    rows: tuple[int, ...]

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1] >> (j - 1) & 1

    def to_lists(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(1, self.q + 1)] for i in range(1, self.q + 1)]

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> BitMatrix:
        return cls(len(rows), tuple(sum((x & 1) << j for j, x in enumerate(r)) for r in rows))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.to_lists())


def _check_len(word: BraidWord, ys: CrossingSet) -> None:
    if ys.w != word.w:
        raise ValueError(f"crossing set has {ys.w} entries, word has {word.w} crossings")


def evaluate_matrix_gf2(word: BraidWord, ys: CrossingSet) -> BitMatrix:
    """``eps_Y(B)`` from the evaluated elementary blocks, left to right."""
    _check_len(word, ys)
    q = word.q
    cols = [1 << r for r in range(q)]  # column masks, bit r = row r+1
    for k, i in enumerate(word.letters):
        x, y = cols[i - 1], cols[i]
        cols[i - 1] = (x if ys.mask >> k & 1 else 0) ^ y
        cols[i] = x
    rows = tuple(sum((cols[j] >> r & 1) << j for j in range(q)) for r in range(q))
    return BitMatrix(q, rows)


def gf2_lu(m: BitMatrix, pivots: int | None = None
           ) -> tuple[bool, list[int] | None]:
    """Eliminate without row exchanges.

    Returns ``(ok, L)`` where ``L`` (row masks, unit lower triangular)
    satisfies ``L . m = U`` unit upper triangular when ``ok``.  Only the
    first ``pivots`` pivots (default all ``q``) are required to be 1.
    """
    q = m.q
    need = q if pivots is None else pivots
    rows = list(m.rows)
    low = [1 << r for r in range(q)]
    for k in range(q):
        if not rows[k] >> k & 1:
            if k < need:
                return False, None
            continue
        for r in range(k + 1, q):
            if rows[r] >> k & 1:
                rows[r] ^= rows[k]
                low[r] ^= low[k]
    return True, low


def leading_minors(m: BitMatrix) -> list[int]:
    """All ``q`` leading principal minors over GF(2), by rank of each block."""
    out = []
    for n in range(1, m.q + 1):
        rows = [r & ((1 << n) - 1) for r in m.rows[:n]]
        rank = 0
        for col in range(n):
            piv = next((i for i in range(rank, n) if rows[i] >> col & 1), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            for i in range(n):
                if i != rank and rows[i] >> col & 1:
                    rows[i] ^= rows[rank]
            rank += 1
        out.append(1 if rank == n else 0)
    return out


def lu_test(word: BraidWord, ys: CrossingSet) -> tuple[bool, dict[tuple[int, int], int] | None]:
    """``(is augmentation, plat multipliers)``.

    On success the multipliers ``{(i, j): c_ij}`` (``i > j``) are the
    entries of the unit lower triangular ``L`` with ``L . eps_Y(B)`` unit
    upper triangular.
    """
    m = evaluate_matrix_gf2(word, ys)
    ok, low = gf2_lu(m, pivots=max(word.q - 1, 0))
    if not ok:
        return False, None
    q = word.q
    mult = {(i, j): low[i - 1] >> (j - 1) & 1 for i in range(2, q + 1) for j in range(1, i)}
    return True, mult


def is_augmentation(word: BraidWord, ys: CrossingSet) -> bool:
    return lu_test(word, ys)[0]


# --- direct oracle --------------------------------------------------------------

def augmentation_oracle_direct(word: BraidWord, ys: CrossingSet,
                               max_terms: int | None = 200_000) -> bool:
    """``eps_Y(d a_n) = 0`` for every ``n``, by evaluating the symbolic differential."""
    _check_len(word, ys)
    assignment = ys.assignment()
    return all(d.evaluate(assignment) == 0 for d in differential(word, max_terms))


def _support_table(poly: NcPoly, w: int) -> np.ndarray:
    """Parity of monomials by support mask: ``g[m]`` for ``m`` in ``[0, 2^w)``."""
    g = np.zeros(1 << w, dtype=np.uint8)
    for word_, c in poly.terms.items():
        mask = 0
        for v in word_:
            mask |= 1 << (v[1] - 1)
        g[mask] ^= c & 1
    return g


def _subset_zeta_gf2(g: np.ndarray, w: int) -> np.ndarray:
    """``f[Y] = sum_{m subset of Y} g[m]`` mod 2, for all ``Y`` at once."""
    f = g.copy()
    for k in range(w):
        f = f.reshape(-1, 2, 1 << k)
        f[:, 1, :] ^= f[:, 0, :]
        f = f.reshape(-1)
    return f


def direct_oracle_table(word: BraidWord, max_terms: int | None = 200_000) -> np.ndarray:
    """Boolean array over all ``2^w`` masks: does ``eps_Y`` kill every ``d a_n``?

    A 0/1 evaluation of a monomial is 1 iff its support lies in ``Y``, so
    each ``eps_Y(d a_n)`` is a subset sum of monomial parities.
    """
    w = word.w
    ok = np.ones(1 << w, dtype=bool)
    for d in differential(word, max_terms):
        ok &= _subset_zeta_gf2(_support_table(d, w), w) == 0
    return ok


def sequence_oracle(word: BraidWord, ys: CrossingSet) -> bool:
    """``1 + sum over D_n of eps(B_{n,i1}) ... eps(B_{ic,n}) = 0`` for all ``n``,
    with the sums taken over admissible sequences directly."""
    _check_len(word, ys)
    e = path_matrix(word).evaluate(ys.assignment())
    for n in range(1, word.q + 1):
        total = 1
        for seq in admissible_sequences(n):
            path = (n,) + seq + (n,)
            prod = 1
            for a, c in zip(path, path[1:]):
                prod &= e[a - 1][c - 1]
                if not prod:
                    break
            total ^= prod
        if total:
            return False
    return True


# --- vectorized enumeration -----------------------------------------------------

@dataclass(frozen=True)
class RangeResult:
    count: int
    last_minor_failures: int
    masks: np.ndarray | None


def _scan_range(letters: tuple[int, ...], q: int, start: int, stop: int,
                want_list: bool) -> RangeResult:
    count = 0
    failures = 0
    kept = []
    for lo in range(start, stop, _CHUNK):
        hi = min(stop, lo + _CHUNK)
        idx = np.arange(lo, hi, dtype=np.int64)
        cols = [np.full(hi - lo, 1 << r, dtype=np.int64) for r in range(q)]
        for k, i in enumerate(letters):
            bit = (idx >> k) & 1
            x, y = cols[i - 1], cols[i]
            cols[i - 1] = (x * bit) ^ y
            cols[i] = x
        rows = []
        for r in range(q):
            row = np.zeros(hi - lo, dtype=np.int64)
            for j in range(q):
                row |= ((cols[j] >> r) & 1) << j
            rows.append(row)
        ok = np.ones(hi - lo, dtype=bool)
        for k in range(q - 1):
            ok &= ((rows[k] >> k) & 1).astype(bool)
            for r in range(k + 1, q):
                rows[r] ^= rows[k] * ((rows[r] >> k) & 1)
        last = ((rows[q - 1] >> (q - 1)) & 1).astype(bool)
        failures += int(np.count_nonzero(ok & ~last))
        count += int(np.count_nonzero(ok))
        if want_list:
            kept.append(idx[ok])
    masks = np.concatenate(kept) if want_list and kept else (
        np.zeros(0, dtype=np.int64) if want_list else None)
    return RangeResult(count, failures, masks)


def _ranges(total: int, jobs: int) -> list[tuple[int, int]]:
    jobs = max(1, min(jobs, total))
    step, extra = divmod(total, jobs)
    out, lo = [], 0
    for n in range(jobs):
        hi = lo + step + (1 if n < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


@dataclass(frozen=True)
class AugmentationCount:
    count: int
    augmentations: list[CrossingSet] | None
    last_minor_failures: int

    @property
    def odd(self) -> bool:
        return self.count % 2 == 1


def enumerate_augmentations(word: BraidWord, mode: str = "count", jobs: int = 1,
                            max_subsets: int = DEFAULT_MAX_SUBSETS) -> AugmentationCount:
    """Test every subset of crossings; ``mode`` is ``"count"`` or ``"list"``.

    The mask range ``[0, 2^w)`` is split into ``jobs`` contiguous pieces;
    results are merged in range order, so they do not depend on ``jobs``.
    """
    if mode not in ("count", "list"):
        raise ValueError("mode must be 'count' or 'list'")
    total = 1 << word.w
    if total > max_subsets:
        raise EnumerationGuardError(
            f"2^{word.w} subsets exceed the limit of {max_subsets}")
    if jobs < 1:
        raise ValueError("jobs must be positive")
    want_list = mode == "list"
    pieces = _ranges(total, jobs)
    if len(pieces) == 1:
        parts = [_scan_range(word.letters, word.q, 0, total, want_list)]
    else:
        with ProcessPoolExecutor(max_workers=min(len(pieces), os.cpu_count() or 1)) as ex:
            futures = [ex.submit(_scan_range, word.letters, word.q, lo, hi, want_list)
                       for lo, hi in pieces]
            parts = [f.result() for f in futures]
    count = sum(p.count for p in parts)
    failures = sum(p.last_minor_failures for p in parts)
    augs = None
    if want_list:
        augs = [CrossingSet(word.w, int(m)) for p in parts for m in p.masks]
    return AugmentationCount(count, augs, failures)


def augmentation_table(word: BraidWord) -> np.ndarray:
    """Boolean array over all masks from the elimination test (single process)."""
    res = _scan_range(word.letters, word.q, 0, 1 << word.w, True)
    out = np.zeros(1 << word.w, dtype=bool)
    out[res.masks] = True
    return out


def count_augmentations(word: BraidWord, jobs: int = 1,
                        max_subsets: int = DEFAULT_MAX_SUBSETS) -> int:
    return enumerate_augmentations(word, "count", jobs, max_subsets).count
