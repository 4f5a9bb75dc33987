"""Normal rulings of the front of a positive braid closure.

The front has ``q`` left cusps, ``q`` right cusps, the braid with ``q``
strands at the bottom and ``q`` crossing-free closing arcs above it.  A
closing arc is the upper half of exactly one eye, so in a vertical slice
through the braid every eye is a chord (closing arc at depth ``d``, braid
strand at slot ``p``).  Depth 1 is the highest closing arc; the cusps pair
slot ``k`` with depth ``q + 1 - k`` (the rainbow).

Sweeping left to right, a crossing on slots ``(i, i+1)`` either

* is not a switch: the two strands cross and the eyes trade slots, or
* is a switch: the eyes stay in place, which is allowed only if the two
  chords are nested, i.e. ``depth(i) > depth(i+1)``.

A crossing set is a ruling iff the sweep is valid and ends in the rainbow.
Every ruling has exactly ``q`` eyes, so ``theta = q - #switches``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator

from .crossings import CrossingSet
from .braid import BraidWord, diagram_stats

State = tuple[int, ...]  # state[p-1] = depth of the closing arc paired with slot p


class RulingGuardError(RuntimeError):
    pass


def rainbow(q: int) -> State:
    return tuple(q + 1 - k for k in range(1, q + 1))


def _swap(state: State, i: int) -> State:
    s = list(state)
    s[i - 1], s[i] = s[i], s[i - 1]
    return tuple(s)


def _chords_interleave(a: tuple[int, int], c: tuple[int, int]) -> bool:
    """Generic test on vertical intervals ``(top, bottom)``."""
    (a0, a1), (c0, c1) = sorted(a), sorted(c)
    return a0 < c0 < a1 < c1 or c0 < a0 < c1 < a1


def _height(q: int, depth: int | None = None, slot: int | None = None) -> int:
    # vertical order from the top: depths 1..q, then slots 1..q
    return depth if depth is not None else q + slot


def switch_allowed(state: State, i: int) -> bool:
    """May the crossing on slots ``(i, i+1)`` be a switch in this state?"""
    return state[i - 1] > state[i]


def _switch_allowed_generic(state: State, i: int) -> bool:
    q = len(state)
    eye_a = (_height(q, depth=state[i - 1]), _height(q, slot=i))
    eye_c = (_height(q, depth=state[i]), _height(q, slot=i + 1))
    return not _chords_interleave(eye_a, eye_c)


def is_ruling(word: BraidWord, switches: CrossingSet) -> tuple[bool, int | None]:
    """Sweep test; returns ``(ok, theta)`` with ``theta = None`` on failure."""
    if switches.w != word.w:
        raise ValueError("crossing set length does not match the word")
    state = rainbow(word.q)
    for k, i in enumerate(word.letters, start=1):
        if k in switches:
            if not switch_allowed(state, i):
                return False, None
        else:
            state = _swap(state, i)
    if state != rainbow(word.q):
        return False, None
    return True, word.q - len(switches)


@dataclass(frozen=True)
class Eye:
    """One eye of a ruling: its closing-arc depth and the braid slot it
    occupies before each crossing and at the right end."""

    depth: int
    slots: tuple[int, ...]


def audit_ruling(word: BraidWord, switches: CrossingSet) -> list[Eye]:
    """Rebuild the eyes of an accepted sweep and check them against the
    definition of a normal ruling; raises ``AssertionError`` on a defect."""
    q = word.q
    state = list(rainbow(q))
    tracks: dict[int, list[int]] = {d: [] for d in range(1, q + 1)}
    for k, i in enumerate(word.letters, start=1):
        for slot, d in enumerate(state, start=1):
            tracks[d].append(slot)
        if k in switches:
            assert _switch_allowed_generic(tuple(state), i), f"interleaved switch at {k}"
        else:
            state[i - 1], state[i] = state[i], state[i - 1]
    for slot, d in enumerate(state, start=1):
        tracks[d].append(slot)
    eyes = [Eye(d, tuple(tracks[d])) for d in range(1, q + 1)]
    assert len(eyes) == q
    for eye in eyes:
        # both ends at the cusps of its closing arc
        assert eye.slots[0] == q + 1 - eye.depth, "eye starts at a foreign left cusp"
        assert eye.slots[-1] == q + 1 - eye.depth, "eye ends at a foreign right cusp"
        # the lower arc moves by at most one slot per crossing
        assert all(abs(x - y) <= 1 for x, y in zip(eye.slots, eye.slots[1:]))
    # the lower arcs are disjoint away from the crossings
    for col in range(word.w + 1):
        assert len({e.slots[col] for e in eyes}) == q
    return eyes


def _reachability(word: BraidWord) -> list[set[State]]:
    """``reach[k]``: states before letter ``k+1`` from which the rainbow is reachable."""
    q = word.q
    reach: list[set[State]] = [set() for _ in range(word.w + 1)]
    reach[word.w] = {rainbow(q)}
    for k in range(word.w - 1, -1, -1):
        i = word.letters[k]
        cur = set()
        for s in reach[k + 1]:
            cur.add(_swap(s, i))  # non-switch predecessor
            if switch_allowed(s, i):
                cur.add(s)        # switch predecessor
        reach[k] = cur
    return reach


def iter_rulings(word: BraidWord) -> Iterator[tuple[CrossingSet, int]]:
    """Depth-first search over the sweep, pruned by suffix reachability.

    Yields rulings in ascending crossing-mask order.
    """
    q, w = word.q, word.w
    reach = _reachability(word)
    if rainbow(q) not in reach[0]:
        return
    found: list[int] = []

    def dfs(k: int, state: State, mask: int):
        if k == w:
            found.append(mask)
            return
        i = word.letters[k]
        nxt = _swap(state, i)
        if nxt in reach[k + 1]:
            dfs(k + 1, nxt, mask)
        if switch_allowed(state, i) and state in reach[k + 1]:
            dfs(k + 1, state, mask | (1 << k))

    dfs(0, rainbow(q), 0)
    for mask in sorted(found):
        cs = CrossingSet(w, mask)
        yield cs, q - len(cs)


def enumerate_rulings(word: BraidWord, max_rulings: int = 1_000_000
                      ) -> list[tuple[CrossingSet, int]]:
    out = []
    for item in iter_rulings(word):
        out.append(item)
        if len(out) > max_rulings:
            raise RulingGuardError(f"more than {max_rulings} rulings")
    return out


@dataclass(frozen=True)
class RulingPolynomial:
    """Laurent polynomial in ``z`` with positive integer coefficients."""

    coeffs: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs",
                           {int(e): int(c) for e, c in self.coeffs.items() if c})

    @classmethod
    def from_thetas(cls, thetas) -> RulingPolynomial:
        out: dict[int, int] = {}
        for th in thetas:
            out[1 - th] = out.get(1 - th, 0) + 1
        return cls(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RulingPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items(), reverse=True)

    def total(self) -> int:
        """``R(1)``, the number of rulings."""
        return sum(self.coeffs.values())

    def theta_counts(self) -> dict[int, int]:
        return {1 - e: c for e, c in self.coeffs.items()}

    def __str__(self) -> str:
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(str(c))
                continue
            zpart = "z" if e == 1 else f"z^{e}"
            parts.append(zpart if c == 1 else f"{c}{zpart}")
        return " + ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> RulingPolynomial:
        import re

        out: dict[int, int] = {}
        for term in text.replace(" ", "").split("+"):
            if not term or term == "0":
                continue
            m = re.fullmatch(r"(\d*)(z(?:\^(-?\d+))?)?", term)
            if m is None:
                raise ValueError(f"cannot parse ruling polynomial term {term!r}")
            c = int(m.group(1)) if m.group(1) else 1
            e = 0 if m.group(2) is None else (int(m.group(3)) if m.group(3) else 1)
            out[e] = out.get(e, 0) + c
        return cls(out)

    def to_json(self) -> dict:
        return {"coeffs": [[e, c] for e, c in self.terms()]}

    @classmethod
    def from_json(cls, data: dict) -> RulingPolynomial:
        return cls({e: c for e, c in data["coeffs"]})


def ruling_polynomial(word: BraidWord) -> RulingPolynomial:
    """Transfer-matrix sweep: ``state -> {switch count: multiplicity}``."""
    q = word.q
    layer: dict[State, dict[int, int]] = {rainbow(q): {0: 1}}
    for i in word.letters:
        nxt: dict[State, dict[int, int]] = {}
        for state, hist in layer.items():
            swapped = _swap(state, i)
            bucket = nxt.setdefault(swapped, {})
            for s, c in hist.items():
                bucket[s] = bucket.get(s, 0) + c
            if switch_allowed(state, i):
                bucket = nxt.setdefault(state, {})
                for s, c in hist.items():
                    bucket[s + 1] = bucket.get(s + 1, 0) + c
        layer = nxt
    hist = layer.get(rainbow(q), {})
    # exponent 1 - theta = 1 - q + switches
    return RulingPolynomial({1 - q + s: c for s, c in hist.items()})


def ruling_polynomial_bruteforce(word: BraidWord) -> RulingPolynomial:
    return RulingPolynomial.from_thetas(th for _, th in iter_rulings(word))


def torus2_closed_form(p: int) -> RulingPolynomial:
    """Ruling polynomial of the (p, 2) torus link: ``sum_k C(p-k, k) z^(p-1-2k)``."""
    if p < 1:
        raise ValueError("p must be positive")
    return RulingPolynomial({p - 1 - 2 * k: comb(p - k, k) for k in range(p // 2 + 1)})


def fibonacci(p: int) -> int:
    """``f_1 = 1, f_2 = 2, f_{p} = f_{p-1} + f_{p-2}``."""
    a, c = 1, 2
    for _ in range(p - 1):
        a, c = c, a + c
    return a


def augmentation_count_from_polynomial(poly: RulingPolynomial, chi_star: int) -> int:
    """``sum over rulings of 2^((theta + chi*)/2)``."""
    total = 0
    for theta, c in poly.theta_counts().items():
        twice = theta + chi_star
        if twice % 2 or twice < 0:
            raise ArithmeticError(f"non-integer exponent for theta={theta}, chi*={chi_star}")
        total += c * 2 ** (twice // 2)
    return total


def count_via_rulings(word: BraidWord) -> int:
    """Number of augmentations predicted by the ruling polynomial."""
    return augmentation_count_from_polynomial(ruling_polynomial(word),
                                              diagram_stats(word).chi_star)
