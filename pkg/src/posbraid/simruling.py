"""A crossing set that is both a ruling and an augmentation, with its forest.

For ``i = 1..q`` the strand leaving left endpoint ``i`` and the strand
reaching right endpoint ``i`` are compared.  If they differ, their leftmost
common crossing ``d_i`` is spliced; the spliced path ``s_i`` then runs from
left ``i`` to right ``i`` and is removed, leaving marker ``i`` on the other
half of the splice.  The spliced crossings form ``X``; an edge ``i -> j``
joins ``i`` to the path that later carries marker ``i``.

Each crossing is a 4-port vertex.  In the plain state the strand entering
at the top leaves at the bottom and vice versa; a spliced crossing connects
top to top and bottom to bottom.  Strands of the current diagram are read
off by walking ports; removal of a path never changes the ports of the
paths that remain, so removed paths need no explicit deletion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .augment import is_augmentation
from .braid import BraidWord, diagram_stats
from .crossings import CrossingSet
from .ruling import is_ruling

TURN, PASS, MARKER = "turn", "pass", "marker"


@dataclass(frozen=True)
class SimResult:
    X: CrossingSet
    paths: dict[int, tuple[tuple[int, str], ...]]
    markers: dict[int, int]          # crossing index -> marker label
    forest: tuple[tuple[int, int], ...]
    owner: dict[int, int]            # crossing index -> path that removed it
    mu: int = 0

    def to_json(self) -> dict:
        return {"X": list(self.X.members),
                "forest": [list(e) for e in self.forest],
                "theta": self.mu}


class _Diagram:
    def __init__(self, word: BraidWord):
        self.word = word
        self.spliced = [False] * word.w
        q = word.q
        # touching[p]: crossings (0-based) that involve position p
        self.touching: dict[int, list[int]] = {p: [] for p in range(1, q + 1)}
        for k, i in enumerate(word.letters):
            self.touching[i].append(k)
            self.touching[i + 1].append(k)

    def _next(self, pos: int, after: int) -> int | None:
        for k in self.touching[pos]:
            if k > after:
                return k
        return None

    def _prev(self, pos: int, before: int) -> int | None:
        for k in reversed(self.touching[pos]):
            if k < before:
                return k
        return None

    def _through(self, k: int, top: bool) -> bool:
        """Port side on the other end of crossing ``k`` (True = top)."""
        return top if self.spliced[k] else not top

    def forward(self, start: int) -> tuple[list[int], int]:
        """Crossings on the strand from left endpoint ``start``, and its right end."""
        pos, x, seen = start, -1, []
        while (k := self._next(pos, x)) is not None:
            i = self.word.letters[k]
            top_out = self._through(k, pos == i)
            pos = i if top_out else i + 1
            seen.append(k)
            x = k
        return seen, pos

    def backward(self, end: int) -> tuple[list[int], int]:
        """Crossings on the strand reaching right endpoint ``end``, and its left end."""
        pos, x, seen = end, self.word.w, []
        while (k := self._prev(pos, x)) is not None:
            i = self.word.letters[k]
            top_in = self._through(k, pos == i)
            pos = i if top_in else i + 1
            seen.append(k)
            x = k
        seen.reverse()
        return seen, pos


def construct_simultaneous(word: BraidWord) -> SimResult:
    diagram = _Diagram(word)
    q = word.q
    owner: dict[int, int] = {}
    markers: dict[int, int] = {}
    splices: list[int] = []
    paths: dict[int, tuple[tuple[int, str], ...]] = {}
    edges: list[tuple[int, int]] = []
    for i in range(1, q + 1):
        crossings, end = diagram.forward(i)
        d = None
        if end != i:
            back, _ = diagram.backward(i)
            d = min(set(crossings) & set(back))
            diagram.spliced[d] = True
            splices.append(d)
            crossings, end = diagram.forward(i)
            assert end == i, "spliced path does not close up"
        roles = []
        for k in crossings:
            if k == d:
                roles.append((k + 1, TURN))
                markers[k + 1] = i
            elif diagram.spliced[k]:
                roles.append((k + 1, MARKER))
                edges.append((markers[k + 1], i))
            else:
                roles.append((k + 1, PASS))
            owner.setdefault(k + 1, i)
        paths[i] = tuple(roles)
    xs = CrossingSet.from_members(word.w, [k + 1 for k in splices])
    return SimResult(xs, paths, markers, tuple(sorted(edges)), owner, diagram_stats(word).mu)


def forest_components(q: int, edges) -> list[set[int]]:
    parent = list(range(q + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, c in edges:
        parent[find(a)] = find(c)
    comps: dict[int, set[int]] = {}
    for v in range(1, q + 1):
        comps.setdefault(find(v), set()).add(v)
    return sorted(comps.values(), key=min)


def forest_ok(q: int, mu: int, edges) -> bool:
    """Increasing edges, out-degree <= 1, ``mu`` trees, each tree's maximum its only sink."""
    if any(a >= c for a, c in edges):
        return False
    sources = [a for a, _ in edges]
    if len(sources) != len(set(sources)):
        return False
    comps = forest_components(q, edges)
    if len(comps) != mu or len(edges) != q - mu:  # a forest on q vertices with mu trees
        return False
    for comp in comps:
        sinks = [v for v in comp if v not in sources]
        if sinks != [max(comp)]:
            return False
    return True


def verify_simultaneous(word: BraidWord, result: SimResult | None = None) -> bool:
    """``X`` is a ruling with ``theta = mu`` and an augmentation."""
    res = result or construct_simultaneous(word)
    ok, theta = is_ruling(word, res.X)
    return ok and theta == res.mu and is_augmentation(word, res.X)
