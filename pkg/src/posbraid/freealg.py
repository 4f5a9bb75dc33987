"""Free noncommutative polynomials over Z/2 or Z, matrices of them, and
commutative polynomials (the target of abelianization).

Variables share one flat namespace of tagged tuples:

* ``("b", k)`` -- the label of crossing ``k`` of a braid word, printed ``b3``;
* ``("B", i, j)`` -- a generic path-matrix symbol, printed ``B[2,1]``.

A noncommutative monomial is a tuple of variables (the empty tuple is 1).
Terms are kept in a dict; iteration and printing use the canonical order
(length, then lexicographic by variable id).
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable, Mapping, Sequence

Var = tuple
Word = tuple

RINGS = ("Z2", "Z", "Q")


class RingMismatch(TypeError):
    pass


def b(k: int) -> Var:
    """Crossing label ``b_k``."""
    return ("b", k)


def B(i: int, j: int) -> Var:
    """Generic path-matrix symbol ``B_{i,j}``."""
    return ("B", i, j)


def var_name(v: Var) -> str:
    if v[0] == "b":
        return f"b{v[1]}"
    if v[0] == "B":
        return f"B[{v[1]},{v[2]}]"
    raise ValueError(f"unknown variable {v!r}")


_VAR_RE = re.compile(r"b(\d+)|B\[(\d+),(\d+)\]")


def _parse_vars(text: str) -> tuple:
    out = []
    pos = 0
    while pos < len(text):
        m = _VAR_RE.match(text, pos)
        if m is None:
            raise ValueError(f"cannot parse monomial {text!r}")
        if m.group(1) is not None:
            out.append(b(int(m.group(1))))
        else:
            out.append(B(int(m.group(2)), int(m.group(3))))
        pos = m.end()
    return tuple(out)


def _normalize(c, ring: str):
    if ring == "Z2":
        return int(c) % 2
    if ring == "Z":
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"{c} is not an integer")
            return int(c)
        return int(c)
    return Fraction(c)


def _word_key(word: Word):
    return (len(word), word)


def _coeff_str(c, mono: str) -> str:
    if mono == "1":
        return str(c)
    if c == 1:
        return mono
    return f"{c}*{mono}"


def _join_terms(parts: list[tuple[object, str]]) -> str:
    """Join (coefficient, monomial) pairs; negatives use ' - '."""
    if not parts:
        return "0"
    out = []
    for n, (c, mono) in enumerate(parts):
        neg = c < 0
        body = _coeff_str(-c if neg else c, mono)
        if n == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def _split_terms(text: str) -> list[tuple[int, str]]:
    """Inverse of :func:`_join_terms`: list of (sign, term body)."""
    text = text.strip()
    if text == "0":
        return []
    tokens = re.split(r"\s+([+-])\s+", text)
    first = tokens[0]
    sign = 1
    if first.startswith("-"):
        sign, first = -1, first[1:]
    out = [(sign, first)]
    for op, body in zip(tokens[1::2], tokens[2::2]):
        out.append((1 if op == "+" else -1, body))
    return out


def _parse_term(body: str):
    if "*" in body:
        c, mono = body.split("*", 1)
        return Fraction(c), mono
    if re.fullmatch(r"\d+(/\d+)?", body):
        return Fraction(body), ""
    return Fraction(1), body


class NcPoly:
    """A polynomial in noncommuting variables over ``Z2`` or ``Z``."""

    __slots__ = ("terms", "ring", "_hash")

    def __init__(self, terms: Mapping[Word, object] | None = None, ring: str = "Z2"):
        if ring not in ("Z2", "Z"):
            raise ValueError(f"unsupported coefficient ring {ring!r}")
        self.ring = ring
        clean: dict[Word, object] = {}
        for word, c in (terms or {}).items():
            c = _normalize(c, ring)
            if c:
                clean[tuple(word)] = c
        self.terms = clean
        self._hash = None

    # construction
    @classmethod
    def zero(cls, ring: str = "Z2") -> NcPoly:
        return cls({}, ring)

    @classmethod
    def one(cls, ring: str = "Z2") -> NcPoly:
        return cls({(): 1}, ring)

    @classmethod
    def const(cls, c, ring: str = "Z2") -> NcPoly:
        return cls({(): c}, ring)

    @classmethod
    def var(cls, v: Var, ring: str = "Z2") -> NcPoly:
        return cls({(v,): 1}, ring)

    @classmethod
    def _raw(cls, terms: dict, ring: str) -> NcPoly:
        # terms already normalized and free of zeros
        p = cls.__new__(cls)
        p.terms = terms
        p.ring = ring
        p._hash = None
        return p

    # ring structure
    def _coerce(self, other) -> NcPoly:
        if isinstance(other, NcPoly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return NcPoly.const(other, self.ring)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        mod2 = self.ring == "Z2"
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if mod2:
                v &= 1
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NcPoly._raw(out, self.ring)

    __radd__ = __add__

    def __neg__(self) -> NcPoly:
        if self.ring == "Z2":
            return self
        return NcPoly._raw({w: -c for w, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Word, object] = {}
        mod2 = self.ring == "Z2"
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = out.get(w, 0) + c1 * c2
                if mod2:
                    v &= 1
                if v:
                    out[w] = v
                else:
                    del out[w]
        return NcPoly._raw(out, self.ring)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def __pow__(self, n: int) -> NcPoly:
        out = NcPoly.one(self.ring)
        for _ in range(n):
            out = out * self
        return out

    # comparison
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = NcPoly.const(other, self.ring)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # inspection
    def sorted_terms(self) -> list[tuple[Word, object]]:
        return sorted(self.terms.items(), key=lambda t: _word_key(t[0]))

    def variables(self) -> set:
        return {v for w in self.terms for v in w}

    def constant(self):
        return self.terms.get((), 0)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def __str__(self) -> str:
        parts = [(c, "".join(var_name(v) for v in w) or "1")
                 for w, c in self.sorted_terms()]
        return _join_terms(parts)

    def __repr__(self) -> str:
        return f"NcPoly({str(self)!r}, ring={self.ring!r})"

    @classmethod
    def parse(cls, text: str, ring: str = "Z2") -> NcPoly:
        """Parse the canonical textual form produced by ``str``."""
        out: dict[Word, object] = {}
        for sign, body in _split_terms(text):
            c, mono = _parse_term(body)
            word = () if mono in ("", "1") else _parse_vars(mono)
            out[word] = out.get(word, 0) + sign * c
        return cls(out, ring)

    # homomorphisms
    def evaluate(self, assignment: Mapping[Var, object] | Callable[[Var], object]):
        """Value of the polynomial under a ring homomorphism extending ``assignment``.

        Over Z2 the result is 0 or 1.  Raises ``KeyError`` for a missing variable.
        """
        get = assignment if callable(assignment) else assignment.__getitem__
        total = 0
        for w, c in self.terms.items():
            val = c
            for v in w:
                val = val * get(v)
                if not val:
                    break
            total += val
        return total % 2 if self.ring == "Z2" else total

    def substitute(self, mapping: Mapping[Var, NcPoly]) -> NcPoly:
        """Replace variables by polynomials (variables not in ``mapping`` stay)."""
        out = NcPoly.zero(self.ring)
        for w, c in self.sorted_terms():
            term = NcPoly.const(c, self.ring)
            for v in w:
                term = term * (mapping[v] if v in mapping else NcPoly.var(v, self.ring))
            out = out + term
        return out

    def abelianize(self, ring: str | None = None) -> CommPoly:
        """Let the variables commute; coefficients combine in ``ring``."""
        target = ring or self.ring
        out: dict = {}
        for w, c in self.terms.items():
            mono = monomial_from_word(w)
            out[mono] = out.get(mono, 0) + c
        return CommPoly(out, target)

    def with_ring(self, ring: str) -> NcPoly:
        return NcPoly(dict(self.terms), ring)


def nc_add(x: NcPoly, y: NcPoly) -> NcPoly:
    return x + y


def nc_mul(x: NcPoly, y: NcPoly) -> NcPoly:
    return x * y


def nc_evaluate(x: NcPoly, assignment):
    return x.evaluate(assignment)


def abelianize(x: NcPoly, ring: str | None = None) -> CommPoly:
    return x.abelianize(ring)


class NcMatrix:
    """A square matrix of :class:`NcPoly` entries over a common ring."""

    __slots__ = ("rows", "ring")

    def __init__(self, rows: Sequence[Sequence[NcPoly]], ring: str | None = None):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        if ring is None:
            ring = rows[0][0].ring if n else "Z2"
        for r in rows:
            for e in r:
                if e.ring != ring:
                    raise RingMismatch("entries over different rings")
        self.rows = rows
        self.ring = ring

    @classmethod
    def identity(cls, n: int, ring: str = "Z2") -> NcMatrix:
        one, zero = NcPoly.one(ring), NcPoly.zero(ring)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], ring)

    @classmethod
    def from_ints(cls, rows: Sequence[Sequence[int]], ring: str = "Z2") -> NcMatrix:
        return cls([[NcPoly.const(c, ring) for c in r] for r in rows], ring)

    @classmethod
    def generic(cls, n: int, ring: str = "Z") -> NcMatrix:
        """The matrix of generic symbols ``B_{i,j}``."""
        return cls([[NcPoly.var(B(i, j), ring) for j in range(1, n + 1)]
                    for i in range(1, n + 1)], ring)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij) -> NcPoly:
        """1-based entry access: ``M[i, j]``."""
        i, j = ij
        return self.rows[i - 1][j - 1]

    def __matmul__(self, other: NcMatrix) -> NcMatrix:
        if not isinstance(other, NcMatrix):
            return NotImplemented
        if other.size != self.size:
            raise ValueError("size mismatch")
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        n = self.size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = NcPoly.zero(self.ring)
                for k in range(n):
                    x, y = self.rows[i][k], other.rows[k][j]
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return NcMatrix(out, self.ring)

    def __add__(self, other: NcMatrix) -> NcMatrix:
        return NcMatrix([[x + y for x, y in zip(r1, r2)]
                         for r1, r2 in zip(self.rows, other.rows)], self.ring)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NcMatrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def map(self, fn) -> NcMatrix:
        return NcMatrix([[fn(e) for e in r] for r in self.rows])

    def evaluate(self, assignment) -> list[list]:
        return [[e.evaluate(assignment) for e in r] for r in self.rows]

    def abelianize(self, ring: str | None = None) -> list[list[CommPoly]]:
        return [[e.abelianize(ring) for e in r] for r in self.rows]

    def is_identity(self) -> bool:
        return self == NcMatrix.identity(self.size, self.ring)

    def to_json(self) -> list[list[str]]:
        return [[str(e) for e in r] for r in self.rows]

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[str]], ring: str = "Z2") -> NcMatrix:
        return cls([[NcPoly.parse(s, ring) for s in r] for r in rows], ring)

    def __str__(self) -> str:
        cells = self.to_json()
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.ljust(width) for c in r) + " ]" for r in cells)

    def __repr__(self) -> str:
        return f"NcMatrix({self.to_json()!r}, ring={self.ring!r})"


def nc_matrix_mul(a: NcMatrix, b_: NcMatrix) -> NcMatrix:
    return a @ b_


# --- commutative polynomials -------------------------------------------------

Monomial = tuple  # sorted tuple of (var, exponent) pairs, exponents >= 1


def monomial_from_word(word: Iterable[Var]) -> Monomial:
    counts: dict = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
    return tuple(sorted(counts.items()))


def monomial_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    counts = dict(m1)
    for v, e in m2:
        counts[v] = counts.get(v, 0) + e
    return tuple(sorted(counts.items()))


def monomial_divides(m1: Monomial, m2: Monomial) -> bool:
    """Does ``m1`` divide ``m2``?"""
    d2 = dict(m2)
    return all(d2.get(v, 0) >= e for v, e in m1)


def monomial_div(m2: Monomial, m1: Monomial) -> Monomial:
    """``m2 / m1``, assuming divisibility."""
    counts = dict(m2)
    for v, e in m1:
        counts[v] -= e
    return tuple(sorted((v, e) for v, e in counts.items() if e))


def monomial_lcm(m1: Monomial, m2: Monomial) -> Monomial:
    counts = dict(m1)
    for v, e in m2:
        counts[v] = max(counts.get(v, 0), e)
    return tuple(sorted(counts.items()))


def monomial_str(m: Monomial) -> str:
    if not m:
        return "1"
    return "".join(var_name(v) + (f"^{e}" if e > 1 else "") for v, e in m)


class CommPoly:
    """A commutative polynomial over ``Z2``, ``Z`` or ``Q``."""

    __slots__ = ("terms", "ring")

    def __init__(self, terms: Mapping[Monomial, object] | None = None, ring: str = "Q"):
        if ring not in RINGS:
            raise ValueError(f"unsupported coefficient ring {ring!r}")
        self.ring = ring
        clean = {}
        for m, c in (terms or {}).items():
            c = _normalize(c, ring)
            if c:
                clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def zero(cls, ring: str = "Q") -> CommPoly:
        return cls({}, ring)

    @classmethod
    def one(cls, ring: str = "Q") -> CommPoly:
        return cls({(): 1}, ring)

    @classmethod
    def const(cls, c, ring: str = "Q") -> CommPoly:
        return cls({(): c}, ring)

    @classmethod
    def var(cls, v: Var, ring: str = "Q") -> CommPoly:
        return cls({((v, 1),): 1}, ring)

    def _coerce(self, other) -> CommPoly:
        if isinstance(other, CommPoly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return CommPoly.const(other, self.ring)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return CommPoly(out, self.ring)

    __radd__ = __add__

    def __neg__(self) -> CommPoly:
        return CommPoly({m: -c for m, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return CommPoly(out, self.ring)

    __rmul__ = __mul__

    def scale(self, c) -> CommPoly:
        return CommPoly({m: c * v for m, v in self.terms.items()}, self.ring)

    def mul_monomial(self, mono: Monomial, c=1) -> CommPoly:
        return CommPoly({monomial_mul(m, mono): c * v for m, v in self.terms.items()},
                        self.ring)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CommPoly.const(other, self.ring)
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def with_ring(self, ring: str) -> CommPoly:
        return CommPoly(dict(self.terms), ring)

    def evaluate(self, assignment: Mapping[Var, object]):
        total = 0
        for m, c in self.terms.items():
            val = c
            for v, e in m:
                val = val * assignment[v] ** e
            total += val
        return total % 2 if self.ring == "Z2" else total

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: (sum(e for _, e in t[0]), t[0]))

    def __str__(self) -> str:
        return _join_terms([(c, monomial_str(m)) for m, c in self.sorted_terms()])

    def __repr__(self) -> str:
        return f"CommPoly({str(self)!r}, ring={self.ring!r})"


def comm_det(a: Sequence[Sequence[CommPoly]]) -> CommPoly:
    """Determinant by the Leibniz formula."""
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return CommPoly.one("Q")
    ring = a[0][0].ring
    total = CommPoly.zero(ring)
    for perm in permutations(range(n)):
        term = CommPoly.const(_perm_sign(perm), ring)
        for i, j in enumerate(perm):
            entry = a[i][j]
            if not entry:
                term = None
                break
            term = term * entry
        if term is not None:
            total = total + term
    return total


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
