"""Pure lexicographic term orders in which diagonal symbols dominate, and a
small Buchberger implementation for checking the ideal and Groebner-basis
statements about the leading principal minors of the generic matrix.

Coefficients are taken in a field: ``Q`` (fractions) or ``Z2``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .dga import GENERIC_MAX_Q, MCTable, SizeGuardError
from .freealg import (B, CommPoly, Monomial, NcMatrix, comm_det, monomial_div,
                      monomial_divides, monomial_lcm, monomial_str)

FIELDS = ("Q", "Z2")
GROBNER_MAX_Q = 3


@dataclass(frozen=True)
class TermOrder:
    """Lex order on monomials from a ranking of the variables (largest first)."""

    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "_rank", {v: n for n, v in enumerate(self.variables)})

    @classmethod
    def default(cls, q: int) -> TermOrder:
        """``B11 > B22 > ... > Bqq >`` off-diagonal symbols in row-major order."""
        diag = [B(i, i) for i in range(1, q + 1)]
        off = [B(i, j) for i in range(1, q + 1) for j in range(1, q + 1) if i != j]
        return cls(tuple(diag + off))

    @classmethod
    def random_diagonal_dominant(cls, q: int, rng: random.Random) -> TermOrder:
        diag = [B(i, i) for i in range(1, q + 1)]
        off = [B(i, j) for i in range(1, q + 1) for j in range(1, q + 1) if i != j]
        rng.shuffle(diag)
        rng.shuffle(off)
        return cls(tuple(diag + off))

    def is_diagonal_dominant(self) -> bool:
        diag = [self._rank[v] for v in self.variables if v[0] == "B" and v[1] == v[2]]
        off = [self._rank[v] for v in self.variables if not (v[0] == "B" and v[1] == v[2])]
        return not diag or not off or max(diag) < min(off)

    def key(self, m: Monomial) -> tuple[int, ...]:
        """Exponent vector listed from the largest variable down."""
        vec = [0] * len(self.variables)
        for v, e in m:
            try:
                vec[self._rank[v]] = e
            except KeyError:
                raise KeyError(f"variable {v!r} is not ranked by this order") from None
        return tuple(vec)

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        """-1, 0 or 1 as ``m1`` is smaller than, equal to or larger than ``m2``."""
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)


def monomial_compare(order: TermOrder, m1: Monomial, m2: Monomial) -> int:
    return order.compare(m1, m2)


def leading_term(f: CommPoly, order: TermOrder) -> tuple[Monomial, object]:
    if not f:
        raise ValueError("the zero polynomial has no leading term")
    m = max(f.terms, key=order.key)
    return m, f.terms[m]


def _inverse(c, ring: str):
    if ring == "Z2":
        return 1
    if ring == "Q":
        return 1 / Fraction(c)
    raise ValueError(f"coefficients in {ring} are not a field")


def monic(f: CommPoly, order: TermOrder) -> CommPoly:
    if not f:
        return f
    _, c = leading_term(f, order)
    return f.scale(_inverse(c, f.ring))


def normal_form(f: CommPoly, basis: Sequence[CommPoly], order: TermOrder) -> CommPoly:
    """Remainder of multivariate division by ``basis`` (full reduction)."""
    if f.ring not in FIELDS:
        raise ValueError("normal forms need field coefficients")
    leads = [(leading_term(g, order), g) for g in basis if g]
    rem: dict = {}
    p = f
    while p:
        m, c = leading_term(p, order)
        for (lm, lc), g in leads:
            if monomial_divides(lm, m):
                factor = c * _inverse(lc, p.ring)
                p = p - g.mul_monomial(monomial_div(m, lm), factor)
                break
        else:
            rem[m] = c
            p = CommPoly({k: v for k, v in p.terms.items() if k != m}, p.ring)
    return CommPoly(rem, f.ring)


def s_polynomial(f: CommPoly, g: CommPoly, order: TermOrder) -> CommPoly:
    (mf, cf), (mg, cg) = leading_term(f, order), leading_term(g, order)
    lcm = monomial_lcm(mf, mg)
    inv_f, inv_g = _inverse(cf, f.ring), _inverse(cg, f.ring)
    return f.mul_monomial(monomial_div(lcm, mf), inv_f) - g.mul_monomial(monomial_div(lcm, mg), inv_g)


def _coprime(m1: Monomial, m2: Monomial) -> bool:
    return not ({v for v, _ in m1} & {v for v, _ in m2})


def buchberger(generators: Iterable[CommPoly], order: TermOrder) -> list[CommPoly]:
    """Reduced Groebner basis (monic, sorted by leading monomial, largest first).

    Pairs are processed by the normal strategy (smallest lcm first); pairs
    with coprime leading monomials are skipped.
    """
    basis = [monic(g, order) for g in generators if g]
    if not basis:
        return []
    pairs = {(a, c) for a in range(len(basis)) for c in range(a + 1, len(basis))}
    while pairs:
        def lcm_key(pair):
            a, c = pair
            return order.key(monomial_lcm(leading_term(basis[a], order)[0],
                                          leading_term(basis[c], order)[0]))
        pair = min(pairs, key=lambda pr: (lcm_key(pr), pr))
        pairs.discard(pair)
        a, c = pair
        if _coprime(leading_term(basis[a], order)[0], leading_term(basis[c], order)[0]):
            continue
        r = normal_form(s_polynomial(basis[a], basis[c], order), basis, order)
        if r:
            basis.append(monic(r, order))
            n = len(basis) - 1
            pairs |= {(k, n) for k in range(n)}
    return reduce_basis(basis, order)


def reduce_basis(basis: Sequence[CommPoly], order: TermOrder) -> list[CommPoly]:
    basis = [monic(g, order) for g in basis if g]
    # drop elements whose leading monomial is divisible by another's
    keep: list[CommPoly] = []
    leads = [leading_term(g, order)[0] for g in basis]
    for n, g in enumerate(basis):
        redundant = any(
            monomial_divides(leads[k], leads[n]) and (leads[k] != leads[n] or k < n)
            for k in range(len(basis)) if k != n)
        if not redundant:
            keep.append(g)
    out = []
    for n, g in enumerate(keep):
        others = keep[:n] + keep[n + 1:]
        lm, _ = leading_term(g, order)
        tail = CommPoly({m: c for m, c in g.terms.items() if m != lm}, g.ring)
        out.append(monic(CommPoly({lm: 1}, g.ring) + normal_form(tail, others, order), order))
    return sorted(out, key=lambda g: order.key(leading_term(g, order)[0]), reverse=True)


def is_groebner_basis(basis: Sequence[CommPoly], order: TermOrder) -> bool:
    return all(not normal_form(s_polynomial(f, g, order), basis, order)
               for n, f in enumerate(basis) for g in basis[n + 1:])


# --- the ideal of leading principal minors ---------------------------------------

def _guard(q: int, allow_q4: bool) -> None:
    limit = 4 if allow_q4 else GROBNER_MAX_Q
    if q > min(limit, GENERIC_MAX_Q):
        raise SizeGuardError(f"Groebner verification is limited to q <= {limit}")


def minor_generators(q: int, field: str = "Q") -> list[CommPoly]:
    """``L_n = det(leading n x n block of the generic matrix) - (-1)^n``."""
    gen = [[CommPoly.var(B(i, j), field) for j in range(1, q + 1)] for i in range(1, q + 1)]
    out = []
    for n in range(1, q + 1):
        block = [row[:n] for row in gen[:n]]
        out.append(comm_det(block) - (-1) ** n)
    return out


def diagonal_generators(q: int, field: str = "Q") -> list[CommPoly]:
    """``1 + C_{n,n}`` abelianized, ``n = 1..q``."""
    t = MCTable(NcMatrix.generic(q, "Z"))
    return [(t.C(n, n) + 1).abelianize(field) for n in range(1, q + 1)]


def _same_ideal(gens_a, gens_b, order) -> bool:
    ga = buchberger(gens_a, order)
    gb = buchberger(gens_b, order)
    return (all(not normal_form(f, gb, order) for f in gens_a)
            and all(not normal_form(f, ga, order) for f in gens_b))


def verify_ideal_theorem(q: int, field: str = "Q", order: TermOrder | None = None,
                         allow_q4: bool = False) -> bool:
    """The minors ``L_n`` and the polynomials ``1 + C_{n,n}`` generate the same ideal."""
    _guard(q, allow_q4)
    order = order or TermOrder.default(q)
    return _same_ideal(minor_generators(q, field), diagonal_generators(q, field), order)


def leading_term_check(q: int, order: TermOrder | None = None, field: str = "Q") -> bool:
    """``1 + C_{n,n}`` has leading monomial ``B_{n,n}`` and no other diagonal symbol."""
    order = order or TermOrder.default(q)
    for n, g in enumerate(diagonal_generators(q, field), start=1):
        lm, _ = leading_term(g, order)
        if lm != ((B(n, n), 1),):
            return False
        for m in g.terms:
            if m != lm and any(v[1] == v[2] for v, _ in m):
                return False
    return True


def verify_grobner_theorem(q: int, field: str = "Q", order: TermOrder | None = None,
                           allow_q4: bool = False) -> bool:
    """Buchberger on the minors returns exactly the polynomials ``1 + C_{n,n}``."""
    _guard(q, allow_q4)
    order = order or TermOrder.default(q)
    computed = buchberger(minor_generators(q, field), order)
    expected = reduce_basis(diagonal_generators(q, field), order)
    already_reduced = [monic(g, order) for g in diagonal_generators(q, field)]
    return (computed == expected
            and sorted(map(str, expected)) == sorted(map(str, already_reduced))
            and leading_term_check(q, order, field))


def format_basis(basis: Sequence[CommPoly], order: TermOrder) -> list[str]:
    return [f"{monomial_str(leading_term(g, order)[0])}: {g}" for g in basis]
