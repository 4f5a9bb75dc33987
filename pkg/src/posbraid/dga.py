"""Admissible sequences, the polynomials M and C, and the differential of
the DGA of the Legendrian closure.

``M`` and ``C`` are computed from a q x q matrix of noncommutative
polynomials ``Bm`` (generic symbols, or the path matrix of a word) by the
grouping recurrences

    M[i,j] = B[i,j] + sum_{k < min(i,j)} M[i,k] M[k,j]
    C[i,j] = M[i,j] + sum_{i < k < j} C[i,k] M[k,j]      (i < j)
    C[n,n] = M[n,n]

Direct sums over admissible sequences are kept as test oracles.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .braid import BraidWord
from .freealg import NcMatrix, NcPoly
from .pathmatrix import path_matrix

GENERIC_MAX_Q = 5


class SizeGuardError(RuntimeError):
    """A symbolic computation was refused because it would be too large."""


def is_admissible(seq: Sequence[int]) -> bool:
    """Between any two equal entries there is a strictly larger one."""
    last: dict[int, int] = {}
    for pos, s in enumerate(seq):
        if s < 1:
            return False
        if s in last and max(seq[last[s] + 1:pos], default=0) <= s:
            return False
        last[s] = pos
    return True


@lru_cache(maxsize=None)
def _admissible_over(m: int) -> tuple[tuple[int, ...], ...]:
    # a nonempty admissible sequence over {1..m} has a unique maximum h;
    # both sides of h are admissible over {1..h-1}
    if m == 0:
        return ((),)
    smaller = _admissible_over(m - 1)
    out = list(smaller)
    out.extend(left + (m,) + right for left in smaller for right in smaller)
    return tuple(out)


def admissible_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Enumerate ``D_n`` (entries in ``1..n-1``) by length, then lexicographically."""
    if n < 1:
        raise ValueError("n must be positive")
    yield from sorted(_admissible_over(n - 1), key=lambda s: (len(s), s))


def count_admissible(n: int) -> int:
    a = 1
    for _ in range(n - 1):
        a = a + a * a
    return a


# --- recurrences ----------------------------------------------------------------

class MCTable:
    """Memoized ``M`` and ``C`` over a given matrix ``Bm`` (1-based access)."""

    def __init__(self, bm: NcMatrix):
        self.bm = bm
        self.q = bm.size
        self._m: dict[tuple[int, int], NcPoly] = {}
        self._c: dict[tuple[int, int], NcPoly] = {}

    def M(self, i: int, j: int) -> NcPoly:
        key = (i, j)
        if key not in self._m:
            acc = self.bm[i, j]
            for k in range(1, min(i, j)):
                x = self.M(i, k)
                if x:
                    y = self.M(k, j)
                    if y:
                        acc = acc + x * y
            self._m[key] = acc
        return self._m[key]

    def C(self, i: int, j: int) -> NcPoly:
        if i > j:
            raise ValueError("C[i,j] is only defined for i <= j")
        if i == j:
            return self.M(i, i)
        key = (i, j)
        if key not in self._c:
            acc = self.M(i, j)
            for k in range(i + 1, j):
                x = self.C(i, k)
                if x:
                    y = self.M(k, j)
                    if y:
                        acc = acc + x * y
            self._c[key] = acc
        return self._c[key]


def _guard_generic(q: int) -> None:
    if q > GENERIC_MAX_Q:
        raise SizeGuardError(f"generic symbolic computations are limited to q <= {GENERIC_MAX_Q}")


def polynomial_M(i: int, j: int, q: int, ring: str = "Z") -> NcPoly:
    """``M_{i,j}`` in the generic symbols ``B_{i,j}``."""
    _guard_generic(q)
    return MCTable(NcMatrix.generic(q, ring)).M(i, j)


def polynomial_C(i: int, j: int, q: int, ring: str = "Z") -> NcPoly:
    """``C_{i,j}`` (``i < j``) or ``C_{n,n}`` in the generic symbols."""
    _guard_generic(q)
    if i > j:
        raise ValueError("C[i,j] is only defined for i <= j")
    return MCTable(NcMatrix.generic(q, ring)).C(i, j)


# --- direct enumeration oracles --------------------------------------------------

def _chain(bm: NcMatrix, path: Sequence[int]) -> NcPoly:
    out = NcPoly.one(bm.ring)
    for a, c in zip(path, path[1:]):
        out = out * bm[a, c]
        if not out:
            break
    return out


def M_by_sequences(bm: NcMatrix, i: int, j: int) -> NcPoly:
    out = NcPoly.zero(bm.ring)
    for seq in admissible_sequences(min(i, j)):
        out = out + _chain(bm, (i,) + seq + (j,))
    return out


def C_by_sequences(bm: NcMatrix, i: int, j: int) -> NcPoly:
    """Upper ``C``: sequences in ``D_j`` starting with ``i`` (diagonal: all of ``D_n``)."""
    out = NcPoly.zero(bm.ring)
    if i == j:
        return M_by_sequences(bm, i, i)
    for seq in admissible_sequences(j):
        if seq and seq[0] == i:
            out = out + _chain(bm, seq + (j,))
    return out


def C_lower_by_sequences(bm: NcMatrix, i: int, j: int) -> NcPoly:
    """Lower analogue for ``i > j``: sequences in ``D_i`` ending with ``j``."""
    out = NcPoly.zero(bm.ring)
    for seq in admissible_sequences(i):
        if seq and seq[-1] == j:
            out = out + _chain(bm, (i,) + seq)
    return out


# --- the differential ------------------------------------------------------------

def differential(word: BraidWord, max_terms: int | None = 200_000) -> list[NcPoly]:
    """``[d a_1, ..., d a_q]`` over Z2 with ``d a_n = 1 + C_{n,n}(B_beta)``.

    ``d b_k = 0`` for every crossing label.  ``max_terms`` bounds the total
    number of monomials produced; ``None`` disables the guard.
    """
    table = MCTable(path_matrix(word, "Z2"))
    out = []
    total = 0
    for n in range(1, word.q + 1):
        d = NcPoly.one("Z2") + table.C(n, n)
        total += len(d)
        if max_terms is not None and total > max_terms:
            raise SizeGuardError(f"differential exceeds {max_terms} terms")
        out.append(d)
    return out


# --- symbolic identities ---------------------------------------------------------

def _triangular(q: int, entry, diag: NcPoly, upper: bool) -> NcMatrix:
    ring = diag.ring
    rows = []
    for i in range(1, q + 1):
        row = []
        for j in range(1, q + 1):
            if i == j:
                row.append(diag)
            elif (i < j) == upper:
                row.append(entry(i, j))
            else:
                row.append(NcPoly.zero(ring))
        rows.append(row)
    return NcMatrix(rows, ring)


def triangular_matrices(q: int) -> dict[str, NcMatrix]:
    """Unit triangular matrices built from ``C`` and ``-M`` (generic, over Z)."""
    _guard_generic(q)
    bm = NcMatrix.generic(q, "Z")
    t = MCTable(bm)
    one = NcPoly.one("Z")
    lower_c: dict = {}

    def c_low(i, j):
        # C_low[i,j] = M[i,j] + sum_{j<k<i} M[i,k] C_low[k,j]
        if (i, j) not in lower_c:
            acc = t.M(i, j)
            for k in range(j + 1, i):
                acc = acc + t.M(i, k) * c_low(k, j)
            lower_c[(i, j)] = acc
        return lower_c[(i, j)]

    return {
        "upper_C": _triangular(q, t.C, one, True),
        "upper_negM": _triangular(q, lambda i, j: -t.M(i, j), one, True),
        "lower_C": _triangular(q, c_low, one, False),
        "lower_negM": _triangular(q, lambda i, j: -t.M(i, j), one, False),
    }


def verify_triangular_inverse(q: int) -> bool:
    """The ``C`` and ``-M`` unit triangular matrices are mutually inverse,
    in both orders, for the upper and the lower variants."""
    mats = triangular_matrices(q)
    ident = NcMatrix.identity(q, "Z")
    checks = [
        mats["upper_C"] @ mats["upper_negM"],
        mats["upper_negM"] @ mats["upper_C"],
        mats["lower_C"] @ mats["lower_negM"],
        mats["lower_negM"] @ mats["lower_C"],
    ]
    return all(m == ident for m in checks)


def mmb_sides(n: int) -> tuple[NcMatrix, NcMatrix]:
    """Both sides of the ``M M = B`` factorization for the leading ``n x n`` block."""
    _guard_generic(n)
    bm = NcMatrix.generic(n, "Z")
    t = MCTable(bm)
    one = NcPoly.one("Z")
    lower = _triangular(n, t.M, -one, False)
    upper = _triangular(n, lambda i, j: -t.M(i, j), one, True)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i == j:
                row.append(bm[i, i] - t.C(i, i) - one)
            else:
                row.append(bm[i, j])
        rows.append(row)
    return lower @ upper, NcMatrix(rows, "Z")


def verify_mmb(q: int) -> bool:
    """Check the factorization for every leading block size ``n <= q``."""
    for n in range(1, q + 1):
        lhs, rhs = mmb_sides(n)
        if lhs != rhs:
            return False
    return True
