"""Path matrices of positive braid words.

The path matrix is the product of elementary blocks ``[[b, 1], [1, 0]]``,
one per letter.  :func:`path_matrix_by_paths` computes the same matrix by
walking paths through the braid, and is kept independent of the product
route so the two can check each other.
"""

from __future__ import annotations

from typing import Sequence

from .braid import BraidWord, Permutation, reduced_permutation_word, underlying_permutation
from .freealg import NcMatrix, NcPoly, Var, b as bvar


def _labels(word: BraidWord, labels: Sequence[Var] | None) -> list[Var]:
    if labels is None:
        return [bvar(k) for k in range(1, word.w + 1)]
    if len(labels) != word.w:
        raise ValueError("one label per crossing required")
    return list(labels)


def elementary_matrix(i: int, label: Var | NcPoly, q: int, ring: str = "Z2",
                      inverse: bool = False) -> NcMatrix:
    """Identity except the block at rows/cols ``i, i+1``.

    The block is ``[[label, 1], [1, 0]]``; with ``inverse=True`` it is
    ``[[0, 1], [1, -label]]``.
    """
    if not 1 <= i <= q - 1:
        raise ValueError(f"generator index {i} out of range for {q} strands")
    lab = label if isinstance(label, NcPoly) else NcPoly.var(label, ring)
    one, zero = NcPoly.one(ring), NcPoly.zero(ring)
    rows = [[one if r == c else zero for c in range(q)] for r in range(q)]
    r = i - 1
    if inverse:
        rows[r][r], rows[r][r + 1], rows[r + 1][r], rows[r + 1][r + 1] = zero, one, one, -lab
    else:
        rows[r][r], rows[r][r + 1], rows[r + 1][r], rows[r + 1][r + 1] = lab, one, one, zero
    return NcMatrix(rows, ring)


def _apply_block_right(rows: list[list[NcPoly]], i: int, lab: NcPoly) -> None:
    """In place ``rows <- rows . E_i(lab)`` (a column operation)."""
    c = i - 1
    for row in rows:
        x, y = row[c], row[c + 1]
        row[c], row[c + 1] = (x * lab + y) if x else y, x


def path_matrix(word: BraidWord, ring: str = "Z2",
                labels: Sequence[Var] | None = None) -> NcMatrix:
    """Product of the elementary matrices of the letters, left to right."""
    labs = _labels(word, labels)
    rows = [list(r) for r in NcMatrix.identity(word.q, ring).rows]
    for i, v in zip(word.letters, labs):
        _apply_block_right(rows, i, NcPoly.var(v, ring))
    return NcMatrix(rows, ring)


def path_matrix_by_paths(word: BraidWord, ring: str = "Z2",
                         labels: Sequence[Var] | None = None) -> NcMatrix:
    """Sum over paths from left endpoint ``i`` to right endpoint ``j``.

    A path runs along the strands left to right.  At a crossing on positions
    ``(p, p+1)`` a path arriving at the upper position may follow its strand
    down or turn through the upward-facing quadrant and stay on top, picking
    up the crossing label; a path arriving at the lower position can only
    follow its strand up.  States are (position, accumulated word).
    """
    labs = _labels(word, labels)
    q = word.q
    rows = []
    for start in range(1, q + 1):
        # position -> {word: multiplicity}
        frontier: dict[int, dict[tuple, int]] = {start: {(): 1}}
        for i, v in zip(word.letters, labs):
            nxt: dict[int, dict[tuple, int]] = {}

            def push(pos, w, c):
                bucket = nxt.setdefault(pos, {})
                bucket[w] = bucket.get(w, 0) + c

            for pos, bucket in frontier.items():
                for w, c in bucket.items():
                    if pos == i:
                        push(i + 1, w, c)          # follow the strand down
                        push(i, w + (v,), c)       # turn at the upper quadrant
                    elif pos == i + 1:
                        push(i, w, c)              # follow the strand up
                    else:
                        push(pos, w, c)
            frontier = nxt
        row = [NcPoly(frontier.get(j, {}), ring) for j in range(1, q + 1)]
        rows.append(row)
    return NcMatrix(rows, ring)


def inverse_path_matrix(word: BraidWord, ring: str = "Z2",
                        labels: Sequence[Var] | None = None) -> NcMatrix:
    """Product of inverse elementary blocks in reversed letter order."""
    labs = _labels(word, labels)
    q = word.q
    out = NcMatrix.identity(q, ring)
    for i, v in zip(reversed(word.letters), reversed(labs)):
        out = out @ elementary_matrix(i, v, q, ring, inverse=True)
    return out


def permutation_matrix(p: Permutation, ring: str = "Z2") -> NcMatrix:
    return NcMatrix.from_ints(p.matrix(), ring)


def row_reduction_factors(word: BraidWord, ring: str = "Z2",
                          labels: Sequence[Var] | None = None
                          ) -> tuple[list[NcMatrix], NcMatrix]:
    """Factors ``A_1..A_w`` and ``P_pi`` with ``B = A_1 ... A_w P_pi``.

    ``A_k`` is the identity plus ``b_k`` at ``(pi_{k-1}^{-1}(i_k),
    pi_{k-1}^{-1}(i_k + 1))``; this cell is (left endpoint of the strand
    above, left endpoint of the strand below) just before crossing ``k``.
    """
    labs = _labels(word, labels)
    q = word.q
    where = list(range(q + 1))  # where[pos]: strand (left endpoint) at pos
    factors = []
    for i, v in zip(word.letters, labs):
        r, c = where[i], where[i + 1]
        rows = [list(row) for row in NcMatrix.identity(q, ring).rows]
        rows[r - 1][c - 1] = NcPoly.var(v, ring)
        factors.append(NcMatrix(rows, ring))
        where[i], where[i + 1] = c, r
    return factors, permutation_matrix(underlying_permutation(word), ring)


def product(mats: Sequence[NcMatrix], q: int, ring: str = "Z2") -> NcMatrix:
    out = NcMatrix.identity(q, ring)
    for m in mats:
        out = out @ m
    return out


def permutation_braid_pattern_check(p: Permutation) -> bool:
    """Does the reduced permutation-braid word of ``p`` have the expected path matrix?

    Expected: entry ``(i, j)`` is 1 where ``p(i) = j``, a single crossing
    label where ``p(i) > j`` and ``p^{-1}(j) > i``, and 0 elsewhere.  The
    labels are distinct and every crossing label is used exactly once.
    """
    word = reduced_permutation_word(p)
    mat = path_matrix(word)
    inv = p.inverse()
    q = p.size
    used = []
    for i in range(1, q + 1):
        for j in range(1, q + 1):
            e = mat[i, j]
            if p(i) == j:
                ok = e == NcPoly.one()
            elif p(i) > j and inv(j) > i:
                ok = len(e) == 1 and len(next(iter(e.terms))) == 1 \
                    and e.terms[next(iter(e.terms))] == 1
                if ok:
                    used.append(next(iter(e.terms))[0])
            else:
                ok = not e
            if not ok:
                return False
    return sorted(used) == sorted(bvar(k) for k in range(1, word.w + 1))
