"""Graded graphs, path counting and the dimension formulas for the towers.

Infinite graphs (chains, lattices) are always built truncated at a maximum
degree.  Generating functions are truncated power series with exact
``Fraction`` coefficients.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Hashable, Sequence

from .towers import catalan, multinomial


@dataclass
class BratteliGraph:
    """Graded directed graph with a unique degree-0 basepoint."""

    degree: dict[Hashable, int]
    edges: list[tuple[Hashable, Hashable]]
    basepoint: Hashable
    dims: dict[Hashable, int] = field(default_factory=dict)

    def __post_init__(self):
        roots = [v for v, k in self.degree.items() if k == 0]
        if roots != [self.basepoint]:
            raise ValueError(f"expected the single basepoint {self.basepoint!r}, found {roots}")
        for t, h in self.edges:
            if self.degree[h] != self.degree[t] + 1:
                raise ValueError(f"edge {t!r} -> {h!r} does not raise the degree by one")

    @property
    def max_degree(self) -> int:
        return max(self.degree.values())

    def level(self, n: int) -> list:
        return sorted((v for v, k in self.degree.items() if k == n), key=repr)

    def successors(self) -> dict:
        out = defaultdict(list)
        for t, h in self.edges:
            out[t].append(h)
        return out

    def path_counts(self) -> dict[Hashable, int]:
        """Number of directed paths from the basepoint to every vertex."""
        counts = defaultdict(int)
        counts[self.basepoint] = 1
        succ = self.successors()
        for n in range(self.max_degree):
            for v in self.level(n):
                for h in succ.get(v, ()):
                    counts[h] += counts[v]
        return {v: counts[v] for v in self.degree}

    def to_dot(self, name: str = "bratteli") -> str:
        ids = {v: f"v{k}" for k, v in enumerate(sorted(self.degree, key=lambda v: (self.degree[v], repr(v))))}
        counts = self.dims or self.path_counts()
        lines = [f"digraph {name} {{", "  rankdir=TB;"]
        for n in range(self.max_degree + 1):
            row = self.level(n)
            lines.append("  { rank=same; " + " ".join(ids[v] for v in row) + " }")
            for v in row:
                lines.append(f'  {ids[v]} [label="{_label(v)}\\n{counts.get(v, "")}"];')
        for t, h in sorted(self.edges, key=lambda e: (ids[e[0]], ids[e[1]])):
            lines.append(f"  {ids[t]} -> {ids[h]};")
        lines.append("}")
        return "\n".join(lines)


BrattelliGraph = BratteliGraph


def _label(v) -> str:
    return str(v).replace('"', "'")


def point() -> BratteliGraph:
    return BratteliGraph({(): 0}, [], ())


def chain(n_max: int) -> BratteliGraph:
    """The tower ``{K}`` of the category F: one vertex per degree."""
    return BratteliGraph({k: k for k in range(n_max + 1)},
                         [(k, k + 1) for k in range(n_max)], 0)


def graph_product(g1: BratteliGraph, g2: BratteliGraph, max_degree: int | None = None) -> BratteliGraph:
    """Vertices ``V1 x V2``; edges ``(V1 x E2) u (E1 x V2)``; basepoint ``(b1, b2)``.

    Inputs are truncations, exact up to their top degree, so by default the
    product is cut at the smaller top degree; an edgeless graph is complete.
    """
    if max_degree is None:
        tops = [g.max_degree for g in (g1, g2) if g.edges]
        max_degree = min(tops) if tops else 0
    degree = {}
    for v1, k1 in g1.degree.items():
        for v2, k2 in g2.degree.items():
            if k1 + k2 <= max_degree:
                degree[(v1, v2)] = k1 + k2
    edges = []
    for v1 in g1.degree:
        for t, h in g2.edges:
            if (v1, h) in degree:
                edges.append(((v1, t), (v1, h)))
    for t, h in g1.edges:
        for v2 in g2.degree:
            if (h, v2) in degree:
                edges.append(((t, v2), (h, v2)))
    return BratteliGraph(degree, edges, (g1.basepoint, g2.basepoint))


def _flatten(v, depth: int) -> tuple:
    if depth == 1:
        return (v,)
    return _flatten(v[0], depth - 1) + (v[1],)


def multinomial_lattice(c: int, n_max: int) -> BratteliGraph:
    """Bratteli diagram of F^(c): the c-fold product of chains, vertices in ``N^c``."""
    g = chain(n_max)
    for _ in range(c - 1):
        g = graph_product(g, chain(n_max), n_max)
    relabel = {v: _flatten(v, c) for v in g.degree}
    return BratteliGraph({relabel[v]: k for v, k in g.degree.items()},
                         [(relabel[t], relabel[h]) for t, h in g.edges], relabel[g.basepoint])


def count_directed_paths(g: BratteliGraph, target, n: int) -> int:
    """Directed paths of length ``n`` from the basepoint to ``target``."""
    if target not in g.degree or g.degree[target] != n:
        return 0
    return g.path_counts()[target]


def temperley_lieb_bratteli(n_max: int) -> BratteliGraph:
    """One-colour TL tower: vertices ``(n, k)`` with ``n - k`` even, edges ``k -> k +- 1``."""
    degree = {(n, k): n for n in range(n_max + 1) for k in range(n % 2, n + 1, 2)}
    edges = [((n, k), (n + 1, k + d)) for (n, k) in degree for d in (1, -1)
             if (n + 1, k + d) in degree]
    return BratteliGraph(degree, edges, (0, 0))


# undirected walks and cell dimensions -------------------------------------

@lru_cache(maxsize=None)
def _walk_table(c: int, n: int) -> dict[tuple[int, ...], int]:
    table = {(0,) * c: 1}
    for _ in range(n):
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for pos, k in table.items():
            for i in range(c):
                for step in (1, -1):
                    new = list(pos)
                    new[i] += step
                    if new[i] >= 0:
                        nxt[tuple(new)] += k
        table = dict(nxt)
    return table


def count_undirected_paths(c: int, target: Sequence[int], n: int) -> int:
    """Walks of length ``n`` in ``N^c`` from the origin to ``target`` by unit steps."""
    target = tuple(target)
    if len(target) != c or any(k < 0 for k in target):
        return 0
    if (n - sum(target)) % 2 or sum(target) > n:
        return 0
    return _walk_table(c, n).get(target, 0)


def cell_labels(n: int, c: int) -> list[tuple[int, ...]]:
    """Vectors ``(k_1..k_c)`` with ``n - sum k`` even and non-negative."""
    out = []
    for ks in itertools.product(range(n + 1), repeat=c):
        s = sum(ks)
        if s <= n and (n - s) % 2 == 0:
            out.append(ks)
    return out


def cell_dimensions_T(n: int, c: int) -> dict[tuple[int, ...], int]:
    return {k: count_undirected_paths(c, k, n) for k in cell_labels(n, c)}


def dim_formula_T(n: int, c: int) -> int:
    """``sum_{n_1+..+n_c=n} multinomial(2n; 2n_1..2n_c) prod C(n_i)``."""
    total = 0
    for parts in _compositions(n, c):
        term = multinomial(2 * n, [2 * p for p in parts])
        for p in parts:
            term *= catalan(p)
        total += term
    return total


def dim_egf_T(n: int, c: int) -> int:
    """Same dimension read off ``(sum_m C(m) z^{2m}/(2m)!)^c``."""
    base = [Fraction(catalan(m), factorial(2 * m)) for m in range(n + 1)]
    series = [Fraction(1)] + [Fraction(0)] * n
    for _ in range(c):
        series = [sum(series[j] * base[k - j] for j in range(k + 1)) for k in range(n + 1)]
    value = series[n] * factorial(2 * n)
    assert value.denominator == 1
    return int(value)


def _compositions(n: int, c: int):
    if c == 1:
        yield (n,)
        return
    for k in range(n + 1):
        for rest in _compositions(n - k, c - 1):
            yield (k,) + rest


# generating functions -------------------------------------------------------

def single_colour_series(order: int) -> dict[tuple[int, int], Fraction]:
    """Coefficients of ``F(x, y) = sum (n-2p+1)/(p!(n-p+1)!) x^n y^(n-2p)`` up to ``x^order``."""
    out = {}
    for n in range(order + 1):
        for p in range(n // 2 + 1):
            coeff = Fraction(n - 2 * p + 1, factorial(p) * factorial(n - p + 1))
            if coeff:
                out[(n, n - 2 * p)] = coeff
    return out


def series_product(c: int, order: int) -> dict[tuple[int, tuple[int, ...]], Fraction]:
    """Truncated ``G = prod_i F(x, y_i)`` keyed by ``(n, (k_1..k_c))``."""
    f = single_colour_series(order)
    prod: dict[tuple[int, tuple[int, ...]], Fraction] = {(0, ()): Fraction(1)}
    for _ in range(c):
        nxt: dict = defaultdict(Fraction)
        for (n1, ks), a in prod.items():
            for (n2, k), b in f.items():
                if n1 + n2 <= order:
                    nxt[(n1 + n2, ks + (k,))] += a * b
        prod = dict(nxt)
    return prod


def generating_function_coeff(n: int, ks: Sequence[int]) -> int:
    """``n!`` times the coefficient of ``x^n prod y_i^{k_i}`` in ``prod_i F(x, y_i)``."""
    ks = tuple(ks)
    value = series_product(len(ks), n).get((n, ks), Fraction(0)) * factorial(n)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral coefficient {value}")
    return int(value)


# folded diagram of the symmetric tower ---------------------------------------

def folded_diagram_S2(n_max: int) -> dict[int, list]:
    """Simple-module dimensions of F^{S(2)}(n) per level.

    Entries run from the central label outwards; a split pair on the axis is
    a 2-tuple of equal halves.
    """
    rows = {0: [1]}
    for n in range(1, n_max + 1):
        row = []
        for p in range(n // 2, -1, -1):
            d = comb(n, p)
            row.append((d // 2, d // 2) if 2 * p == n else d)
        rows[n] = row
    return rows


def flatten_row(row) -> list[int]:
    out = []
    for entry in row:
        out.extend(entry if isinstance(entry, tuple) else (entry,))
    return out


def symmetric_cell_dimensions(n: int) -> list:
    """Simple-module dimensions of T^{S(2)}(n) from the two-colour cell dimensions.

    Off-axis orbits ``{(r, s), (s, r)}`` give one module; axis labels ``(r, r)``
    split into two halves.
    """
    dims = cell_dimensions_T(n, 2)
    if n == 0:
        return [1]
    out = []
    for (r, s), d in sorted(dims.items(), reverse=True):
        if r > s:
            out.append(d)
        elif r == s:
            out.append((d // 2, d // 2))
    return out


def dimension_product_formula(n: int, rs: Sequence[int], dims: Sequence[int]) -> int:
    """``binom(n; r, s) dim(W1) dim(W2)``."""
    r, s = rs
    if r + s != n:
        raise ValueError("need r + s = n")
    return comb(n, r) * dims[0] * dims[1]


# towers as graded graphs with per-vertex dimensions ------------------------

def tower_graph(tower: str, n_max: int, colours: int = 2) -> BratteliGraph:
    """Bratteli-style graph for ``F``, ``F-sym``, ``T`` or ``T-sym``."""
    if tower == "F":
        g = multinomial_lattice(colours, n_max)
        counts = g.path_counts()
        lab = {v: (k, v) for v, k in g.degree.items()}
        return BratteliGraph({lab[v]: k for v, k in g.degree.items()},
                             [(lab[t], lab[h]) for t, h in g.edges], lab[g.basepoint],
                             {lab[v]: d for v, d in counts.items()})
    if tower == "T":
        degree = {(n, k): n for n in range(n_max + 1) for k in cell_labels(n, colours)}
        edges = []
        for (n, k) in degree:
            for i in range(colours):
                for step in (1, -1):
                    h = list(k)
                    h[i] += step
                    if (n + 1, tuple(h)) in degree:
                        edges.append(((n, k), (n + 1, tuple(h))))
        dims = {(n, k): count_undirected_paths(colours, k, n) for (n, k) in degree}
        return BratteliGraph(degree, edges, (0, (0,) * colours), dims)
    if tower in ("F-sym", "T-sym"):
        if colours != 2:
            raise ValueError("symmetric towers are defined for two colours")
        return _symmetric_graph(tower, n_max)
    raise ValueError(f"unknown tower {tower!r}")


def _symmetric_graph(tower: str, n_max: int) -> BratteliGraph:
    # vertices (n, label); label = (a, b) with a > b, or (a, a, sign) on the axis
    degree, dims = {}, {}
    for n in range(n_max + 1):
        if tower == "F-sym":
            base = {(n - p, p): comb(n, p) for p in range(n // 2 + 1)}
        else:
            base = {k: d for k, d in cell_dimensions_T(n, 2).items() if k[0] >= k[1]}
        for (a, b), d in base.items():
            if a == b and n > 0:
                for sgn in ("+", "-"):
                    degree[(n, (a, b, sgn))] = n
                    dims[(n, (a, b, sgn))] = d // 2
            else:
                degree[(n, (a, b))] = n
                dims[(n, (a, b))] = d
    edges = []
    for v in degree:
        n, lab = v
        for w in degree:
            if degree[w] == n + 1 and _sym_adjacent(tower, lab, w[1]):
                edges.append((v, w))
    basepoint = (0, (0, 0))
    return BratteliGraph(degree, edges, basepoint, dims)


def _sym_adjacent(tower: str, lab1, lab2) -> bool:
    a1, b1 = lab1[:2]
    a2, b2 = lab2[:2]
    if tower == "F-sym":
        steps = {(a1 + 1, b1), (a1, b1 + 1), (b1 + 1, a1), (b1, a1 + 1)}
    else:
        steps = set()
        for da, db in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            x, y = a1 + da, b1 + db
            if x >= 0 and y >= 0:
                steps.update({(x, y), (y, x)})
    return (a2, b2) in steps


def graph_table(g: BratteliGraph) -> dict[int, list]:
    """``{level: [[label, dim], ...]}`` for graphs with ``(level, label)`` vertices."""
    dims = g.dims or g.path_counts()
    return {n: [[_jsonable(v[1]), dims[v]] for v in g.level(n)]
            for n in range(g.max_degree + 1)}


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


def graph_json(g: BratteliGraph) -> str:
    return json.dumps({str(k): row for k, row in graph_table(g).items()})
