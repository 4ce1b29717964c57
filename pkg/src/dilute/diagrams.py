"""Coloured diagrams: the bases of the c-colour algebras F^(c)(n) and T^(c)(n).

A diagram has ``n_top`` points on top and ``n_bot`` on the bottom, each point
carrying a colour in ``0..c-1``.  Points are numbered ``0..n_top-1`` along the
top (left to right) and then ``n_top..n_top+n_bot-1`` along the bottom (left
to right).  ``match[i]`` is the partner of point ``i``.  Matched points share a
colour, and the matching restricted to any one colour is non-crossing in the
cyclic boundary order (top left to right, then bottom right to left).  Strings
of different colours may cross.

``compose(d1, d2)`` stacks ``d1`` above ``d2``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

DILUTE_TL = "dilute-TL"
PERMUTATION = "permutation"
KINDS = (DILUTE_TL, PERMUTATION)

ColourWord = tuple[int, ...]


@dataclass(frozen=True, order=True)
class DiluteDiagram:
    top: ColourWord
    bottom: ColourWord
    match: tuple[int, ...]

    @property
    def n_top(self) -> int:
        return len(self.top)

    @property
    def n_bot(self) -> int:
        return len(self.bottom)

    @property
    def colours(self) -> ColourWord:
        return self.top + self.bottom

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i, j in enumerate(self.match) if i < j)

    @classmethod
    def from_pairs(cls, top: Sequence[int], bottom: Sequence[int],
                   pairs: Sequence[Sequence[int]]) -> "DiluteDiagram":
        top, bottom = tuple(top), tuple(bottom)
        size = len(top) + len(bottom)
        match = [-1] * size
        for i, j in pairs:
            if not (0 <= i < size and 0 <= j < size) or i == j or match[i] >= 0 or match[j] >= 0:
                raise ValueError(f"pairs {pairs} are not a perfect matching of {size} points")
            match[i], match[j] = j, i
        if -1 in match:
            raise ValueError(f"pairs {pairs} leave points unmatched")
        d = cls(top, bottom, tuple(match))
        d.validate()
        return d

    def validate(self) -> None:
        cols = self.colours
        size = len(cols)
        if len(self.match) != size:
            raise ValueError("matching has the wrong length")
        for i, j in enumerate(self.match):
            if not 0 <= j < size or j == i or self.match[j] != i:
                raise ValueError("matching is not a fixed-point-free involution")
            if cols[i] != cols[j]:
                raise ValueError(f"points {i} and {j} are matched but coloured differently")
        if not is_planar_per_colour(self):
            raise ValueError("a colour class crosses itself")

    def is_through(self, i: int) -> bool:
        return (i < self.n_top) != (self.match[i] < self.n_top)

    def to_json(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom),
                "pairs": [list(p) for p in self.pairs]}

    @classmethod
    def from_json(cls, data) -> "DiluteDiagram":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_pairs(data["top"], data["bottom"], data["pairs"])

    def __str__(self) -> str:
        return f"D(top={list(self.top)}, bottom={list(self.bottom)}, pairs={list(self.pairs)})"


EMPTY = DiluteDiagram((), (), ())


def cyclic_position(d: DiluteDiagram, i: int) -> int:
    """Position of point ``i`` in the cyclic order top left-to-right, bottom right-to-left."""
    if i < d.n_top:
        return i
    return d.n_top + d.n_bot - 1 - (i - d.n_top)


def is_planar_per_colour(d: DiluteDiagram) -> bool:
    """True iff no colour class has two crossing strings."""
    cols = d.colours
    order = sorted(range(len(cols)), key=lambda i: cyclic_position(d, i))
    stacks: dict[int, list[int]] = {}
    for i in order:
        stack = stacks.setdefault(cols[i], [])
        j = d.match[i]
        if cyclic_position(d, j) > cyclic_position(d, i):
            stack.append(i)
        else:
            if not stack or stack.pop() != j:
                return False
    return True


# constructors -----------------------------------------------------------

def identity(word: Sequence[int]) -> DiluteDiagram:
    word = tuple(word)
    n = len(word)
    return DiluteDiagram(word, word, tuple(range(n, 2 * n)) + tuple(range(n)))


def cup_cap(word_top: Sequence[int], word_bot: Sequence[int], i: int) -> DiluteDiagram:
    """Diagram of the Temperley-Lieb generator on strands ``i, i+1`` (0-based).

    ``word_top[i] == word_top[i+1]`` colours the top arc and likewise for the
    bottom arc; other strands go straight through and must agree between the
    two words.
    """
    t, b = tuple(word_top), tuple(word_bot)
    n = len(t)
    match = list(range(n, 2 * n)) + list(range(n))
    match[i], match[i + 1] = i + 1, i
    match[n + i], match[n + i + 1] = n + i + 1, n + i
    d = DiluteDiagram(t, b, tuple(match))
    d.validate()
    return d


def crossing(word_top: Sequence[int], i: int) -> DiluteDiagram:
    """Transposition of strands ``i, i+1``; the two strands must have different colours."""
    t = tuple(word_top)
    n = len(t)
    b = list(t)
    b[i], b[i + 1] = b[i + 1], b[i]
    match = list(range(n, 2 * n)) + list(range(n))
    match[i], match[i + 1] = n + i + 1, n + i
    match[n + i + 1], match[n + i] = i, i + 1
    d = DiluteDiagram(t, tuple(b), tuple(match))
    d.validate()
    return d


# enumeration ------------------------------------------------------------

def noncrossing_matchings(points: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """All non-crossing perfect matchings of ``points`` (already in cyclic order)."""
    m = len(points)
    if m == 0:
        yield []
        return
    if m % 2:
        return
    first = points[0]
    for k in range(1, m, 2):
        inner, outer = points[1:k], points[k + 1:]
        for a in noncrossing_matchings(inner):
            for b in noncrossing_matchings(outer):
                yield [(first, points[k])] + a + b


def _diagrams_from_colouring(n_top: int, n_bot: int, cols: tuple[int, ...]) -> Iterator[DiluteDiagram]:
    size = n_top + n_bot
    order = list(range(n_top)) + list(range(size - 1, n_top - 1, -1))
    classes: dict[int, list[int]] = {}
    for i in order:
        classes.setdefault(cols[i], []).append(i)
    per_colour = [list(noncrossing_matchings(pts)) for pts in classes.values()]
    for choice in itertools.product(*per_colour):
        match = [0] * size
        for pairs in choice:
            for i, j in pairs:
                match[i], match[j] = j, i
        yield DiluteDiagram(cols[:n_top], cols[n_top:], tuple(match))


def through_diagram(top: Sequence[int], bottom: Sequence[int]) -> DiluteDiagram:
    """The unique diagram of F^(c) type joining ``top`` to ``bottom`` (equal colour content)."""
    top, bottom = tuple(top), tuple(bottom)
    if sorted(top) != sorted(bottom):
        raise ValueError("top and bottom words have different colour content")
    n = len(top)
    match = [0] * (2 * n)
    seen: dict[int, list[int]] = {}
    for j, col in enumerate(bottom):
        seen.setdefault(col, []).append(n + j)
    for i, col in enumerate(top):
        j = seen[col].pop(0)
        match[i], match[j] = j, i
    return DiluteDiagram(top, bottom, tuple(match))


@lru_cache(maxsize=64)
def enumerate_basis(n: int, c: int, kind: str = DILUTE_TL) -> tuple[DiluteDiagram, ...]:
    """Sorted, duplicate-free basis of T^(c)(n) (``dilute-TL``) or F^(c)(n) (``permutation``)."""
    if n < 0 or c < 1:
        raise ValueError("need n >= 0 and c >= 1")
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    out = []
    if kind == PERMUTATION:
        for top in itertools.product(range(c), repeat=n):
            for bottom in set(itertools.permutations(top)):
                out.append(through_diagram(top, bottom))
    else:
        for cols in itertools.product(range(c), repeat=2 * n):
            counts = [0] * c
            for col in cols:
                counts[col] += 1
            if any(k % 2 for k in counts):
                continue
            out.extend(_diagrams_from_colouring(n, n, cols))
    return tuple(sorted(out))


# composition ------------------------------------------------------------

@lru_cache(maxsize=1 << 20)
def compose(d1: DiluteDiagram, d2: DiluteDiagram):
    """Stack ``d1`` above ``d2``.

    Returns ``None`` when ``d1.bottom != d2.top`` (the product is zero),
    otherwise ``(diagram, loops)`` where ``loops`` is a sorted tuple of
    ``(colour, count)`` for the closed components removed from the middle.
    """
    if d1.bottom != d2.top:
        return None
    a, m, b = d1.n_top, d1.n_bot, d2.n_bot
    # result points: 0..a-1 from d1's top, a..a+b-1 from d2's bottom
    m1, m2 = d1.match, d2.match
    result = [-1] * (a + b)
    visited = [False] * m
    for start in range(a + b):
        if result[start] >= 0:
            continue
        if start < a:
            side, p = 1, m1[start]
        else:
            side, p = 2, m2[m + start - a]
        while True:
            if side == 1:
                if p < a:
                    end = p
                    break
                mid = p - a
                visited[mid] = True
                side, p = 2, m2[mid]
            else:
                if p >= m:
                    end = a + p - m
                    break
                visited[p] = True
                side, p = 1, m1[a + p]
        result[start], result[end] = end, start
    loops: dict[int, int] = {}
    cols = d1.bottom
    for k in range(m):
        if visited[k]:
            continue
        # closed loop through middle point k: alternate d2 then d1 matchings
        p = k
        while True:
            visited[p] = True
            p2 = m2[p]
            visited[p2] = True
            p = m1[a + p2] - a
            if visited[p]:
                break
        loops[cols[k]] = loops.get(cols[k], 0) + 1
    return DiluteDiagram(d1.top, d2.bottom, tuple(result)), tuple(sorted(loops.items()))


def juxtapose(d1: DiluteDiagram, d2: DiluteDiagram) -> DiluteDiagram:
    """Place ``d1`` to the left of ``d2`` (the tower map)."""
    a1, b1, a2, b2 = d1.n_top, d1.n_bot, d2.n_top, d2.n_bot
    top_n = a1 + a2

    def r1(p):
        return p if p < a1 else top_n + (p - a1)

    def r2(p):
        return a1 + p if p < a2 else top_n + b1 + (p - a2)

    match = [0] * (top_n + b1 + b2)
    for p, t in enumerate(d1.match):
        match[r1(p)] = r1(t)
    for p, t in enumerate(d2.match):
        match[r2(p)] = r2(t)
    return DiluteDiagram(d1.top + d2.top, d1.bottom + d2.bottom, tuple(match))


def colour_permute(d: DiluteDiagram, perm: Sequence[int]) -> DiluteDiagram:
    """Relabel every colour ``k`` as ``perm[k]``."""
    return DiluteDiagram(tuple(perm[k] for k in d.top), tuple(perm[k] for k in d.bottom), d.match)


def propagating_content(d: DiluteDiagram, c: int | None = None) -> tuple[int, ...]:
    """Number of top-to-bottom strings of each colour."""
    if c is None:
        c = max(d.colours, default=-1) + 1
    p = [0] * c
    for i in range(d.n_top):
        if d.match[i] >= d.n_top:
            p[d.top[i]] += 1
    return tuple(p)


def content_leq(p1: Sequence[int], p2: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(p1, p2))


@lru_cache(maxsize=1 << 18)
def close_last_strand(d: DiluteDiagram):
    """Join the last top point to the last bottom point around the right.

    Returns ``None`` if their colours differ, otherwise ``(diagram, loops)``
    with the closed-off loop counted per colour as in :func:`compose`.
    """
    n_top, n_bot = d.n_top, d.n_bot
    if n_top == 0 or n_bot == 0:
        raise ValueError("no strand to close")
    t, b = n_top - 1, n_top + n_bot - 1
    if d.top[-1] != d.bottom[-1]:
        return None
    colour = d.top[-1]
    if d.match[t] == b:
        loops = ((colour, 1),)
        keep = [i for i in range(n_top + n_bot) if i not in (t, b)]
        new_index = {old: k for k, old in enumerate(keep)}
        match = tuple(new_index[d.match[i]] for i in keep)
    else:
        loops = ()
        ends = {d.match[t]: d.match[b], d.match[b]: d.match[t]}
        keep = [i for i in range(n_top + n_bot) if i not in (t, b)]
        new_index = {old: k for k, old in enumerate(keep)}
        match = tuple(new_index[ends.get(i, d.match[i])] for i in keep)
    return DiluteDiagram(d.top[:-1], d.bottom[:-1], match), loops


@lru_cache(maxsize=1 << 18)
def full_closure_loops(d: DiluteDiagram):
    """Close every strand (top ``i`` to bottom ``i``); per-colour loop counts or ``None``."""
    if d.top != d.bottom:
        return None
    n = d.n_top
    cols = d.colours
    seen = [False] * (2 * n)
    loops: dict[int, int] = {}
    for start in range(2 * n):
        if seen[start]:
            continue
        p = start
        while not seen[p]:
            seen[p] = True
            r = d.match[p]
            seen[r] = True
            p = r - n if r >= n else r + n
        loops[cols[start]] = loops.get(cols[start], 0) + 1
    return tuple(sorted(loops.items()))
