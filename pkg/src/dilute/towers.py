"""Algebra elements over the diagram bases and the distinguished elements of T^{S(2)}(n).

Positions ``i`` of generators are 1-based (``1 <= i <= n-1``) and act on
strands ``i`` and ``i+1``; colours are 0-based, so the two colours of the
symmetric algebras are ``0`` and ``1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from . import diagrams as dg
from .diagrams import DILUTE_TL, DiluteDiagram
from .scalars import (
    DELTA_SPECIAL,
    ONE,
    ZERO,
    LaurentPoly,
    RationalScalar,
    Scalar,
    as_scalar,
    delta,
    lcm,
    matrix_rank,
    simplify,
    substitute,
)
from .scalars import Q as Q_VAR
from .scalars import q as q_var


@dataclass(frozen=True)
class AlgebraContext:
    """Which algebra an element lives in: strands, colours, loop values, basis kind."""

    n: int
    c: int = 2
    deltas: tuple = field(default=None)
    kind: str = DILUTE_TL

    def __post_init__(self):
        if self.deltas is None:
            object.__setattr__(self, "deltas", (delta,) * self.c)
        object.__setattr__(self, "deltas", tuple(as_scalar(d) for d in self.deltas))
        if len(self.deltas) != self.c:
            raise ValueError("need one loop value per colour")

    @classmethod
    def symmetric(cls, n: int, loop=delta) -> "AlgebraContext":
        """Two colours with equal loop value, as used for T^{S(2)}(n)."""
        return cls(n, 2, (as_scalar(loop),) * 2)

    @classmethod
    def specialized(cls, n: int) -> "AlgebraContext":
        """Two colours with ``delta = -q^2 - q^-2``."""
        return cls.symmetric(n, DELTA_SPECIAL)

    def with_n(self, n: int) -> "AlgebraContext":
        return replace(self, n=n)

    @property
    def delta(self) -> Scalar:
        if len(set(self.deltas)) != 1:
            raise ValueError("loop values differ between colours")
        return self.deltas[0]

    def basis(self) -> tuple[DiluteDiagram, ...]:
        return dg.enumerate_basis(self.n, self.c, self.kind)

    def loop_weight(self, loops) -> Scalar:
        w = ONE
        for colour, k in loops:
            w = w * self.deltas[colour] ** k
        return w


class AlgebraElement:
    """Finite linear combination of diagrams with exact scalar coefficients."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: AlgebraContext, coeffs: Mapping[DiluteDiagram, object] | None = None):
        self.ctx = ctx
        clean = {}
        for d, s in (coeffs or {}).items():
            s = simplify(as_scalar(s))
            if not s.is_zero():
                clean[d] = s
        self.coeffs: dict[DiluteDiagram, Scalar] = clean

    @classmethod
    def _raw(cls, ctx, coeffs):
        obj = cls.__new__(cls)
        obj.ctx, obj.coeffs = ctx, coeffs
        return obj

    @classmethod
    def from_diagrams(cls, ctx: AlgebraContext, ds: Iterable[DiluteDiagram], coeff=ONE):
        out: dict[DiluteDiagram, Scalar] = {}
        for d in ds:
            out[d] = out.get(d, ZERO) + coeff
        return cls(ctx, out)

    # linear structure -------------------------------------------------
    def _check(self, other: "AlgebraElement"):
        if self.ctx != other.ctx:
            raise ValueError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.coeffs)
        for d, s in other.coeffs.items():
            t = simplify(out.get(d, ZERO) + s)
            if t.is_zero():
                out.pop(d, None)
            else:
                out[d] = t
        return AlgebraElement._raw(self.ctx, out)

    def __neg__(self):
        return AlgebraElement._raw(self.ctx, {d: -s for d, s in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "AlgebraElement":
        s = as_scalar(s)
        if s.is_zero():
            return AlgebraElement._raw(self.ctx, {})
        return AlgebraElement(self.ctx, {d: c * s for d, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = identity(self.ctx)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, d: DiluteDiagram) -> Scalar:
        return self.coeffs.get(d, ZERO)

    def support(self):
        return sorted(self.coeffs)

    def map_coefficients(self, fn) -> "AlgebraElement":
        return AlgebraElement(self.ctx, {d: fn(s) for d, s in self.coeffs.items()})

    def substitute(self, var: str, value) -> "AlgebraElement":
        return self.map_coefficients(lambda s: substitute(s, var, value))

    def colour_permute(self, perm: Sequence[int]) -> "AlgebraElement":
        return AlgebraElement._raw(self.ctx, {dg.colour_permute(d, perm): s
                                              for d, s in self.coeffs.items()})

    def common_denominator(self) -> tuple[dict[DiluteDiagram, LaurentPoly], LaurentPoly]:
        """``(polys, D)`` with ``self == (1/D) * sum polys[d] d`` and Laurent ``polys``."""
        den = ONE
        for s in self.coeffs.values():
            if isinstance(s, RationalScalar) and s.denominator != den:
                den = lcm(den, s.denominator)
        if den == ONE:
            return dict(self.coeffs), ONE
        out = {}
        for d, s in self.coeffs.items():
            if isinstance(s, RationalScalar):
                out[d] = (s.numerator * den).exact_div(s.denominator)
            else:
                out[d] = s * den
        return out, den

    def to_json(self) -> list:
        from .scalars import format_scalar
        return [[d.to_json(), format_scalar(s)] for d, s in sorted(self.coeffs.items())]

    def __repr__(self):
        from .scalars import format_scalar
        terms = ", ".join(f"{format_scalar(s)}: {d}" for d, s in sorted(self.coeffs.items()))
        return f"AlgebraElement(n={self.ctx.n}, {{{terms}}})"


def zero(ctx: AlgebraContext) -> AlgebraElement:
    return AlgebraElement._raw(ctx, {})


def identity(ctx: AlgebraContext) -> AlgebraElement:
    """Sum over all colour words of the identity diagram."""
    words = itertools.product(range(ctx.c), repeat=ctx.n)
    return AlgebraElement._raw(ctx, {dg.identity(w): ONE for w in words})


def _poly_product(ctx, a: Mapping, b: Mapping) -> dict:
    out: dict[DiluteDiagram, LaurentPoly] = {}
    by_top: dict = {}
    for d2, c2 in b.items():
        by_top.setdefault(d2.top, []).append((d2, c2))
    weights: dict = {}
    for d1, c1 in a.items():
        partners = by_top.get(d1.bottom)
        if not partners:
            continue
        for d2, c2 in partners:
            d, loops = dg.compose(d1, d2)
            coeff = c1 * c2
            if loops:
                w = weights.get(loops)
                if w is None:
                    w = weights[loops] = ctx.loop_weight(loops)
                coeff = coeff * w
            prev = out.get(d)
            out[d] = coeff if prev is None else prev + coeff
    return out


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of diagram composition; each colour-k loop weighs ``deltas[k]``."""
    a._check(b)
    ctx = a.ctx
    pa, da = a.common_denominator()
    pb, db = b.common_denominator()
    if any(isinstance(w, RationalScalar) for w in ctx.deltas):
        raw = _poly_product(ctx, a.coeffs, b.coeffs)
        return AlgebraElement(ctx, raw)
    raw = _poly_product(ctx, pa, pb)
    den = da * db
    if den == ONE:
        return AlgebraElement._raw(ctx, {d: s for d, s in raw.items() if not s.is_zero()})
    return AlgebraElement(ctx, {d: RationalScalar(s, den) for d, s in raw.items() if not s.is_zero()})


def element(ctx: AlgebraContext, d: DiluteDiagram, coeff=ONE) -> AlgebraElement:
    return AlgebraElement(ctx, {d: coeff})


def embed(a: AlgebraElement, extra: int = 1) -> AlgebraElement:
    """Image under ``A(n) -> A(n+extra)``: juxtapose with the identity on new strands."""
    ctx = a.ctx.with_n(a.ctx.n + extra)
    ids = [dg.identity(w) for w in itertools.product(range(ctx.c), repeat=extra)]
    out = {}
    for d, s in a.coeffs.items():
        for e in ids:
            out[dg.juxtapose(d, e)] = s
    return AlgebraElement._raw(ctx, out)


def tower_product(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """The tower map ``A(n) (x) A(m) -> A(n+m)`` by juxtaposition."""
    if (a.ctx.c, a.ctx.deltas, a.ctx.kind) != (b.ctx.c, b.ctx.deltas, b.ctx.kind):
        raise ValueError("tower product needs matching colours and loop values")
    ctx = a.ctx.with_n(a.ctx.n + b.ctx.n)
    out: dict = {}
    for d1, s1 in a.coeffs.items():
        for d2, s2 in b.coeffs.items():
            d = dg.juxtapose(d1, d2)
            out[d] = out.get(d, ZERO) + s1 * s2
    return AlgebraElement(ctx, out)


# local elements of T^{S(2)}(n) ------------------------------------------

GENERATOR_NAMES = ("e", "f", "s", "u", "t")


def _check_position(ctx: AlgebraContext, i: int):
    if ctx.c != 2:
        raise ValueError("the symmetric generators need exactly two colours")
    if not 1 <= i <= ctx.n - 1:
        raise ValueError(f"position {i} out of range 1..{ctx.n - 1}")


def _ambient(ctx: AlgebraContext, i: int):
    """Colourings of the strands other than ``i, i+1`` (1-based)."""
    for rest in itertools.product(range(2), repeat=ctx.n - 2):
        yield rest[: i - 1], rest[i - 1:]


def generators_S2(ctx: AlgebraContext, i: int) -> dict[str, AlgebraElement]:
    """The five elements ``e_i, f_i, s_i, u_i, t_i`` summed over ambient colourings.

    ``e_i``: identity with strands ``i, i+1`` of equal colour; ``f_i``: identity
    with distinct colours; ``s_i``: both mixed transpositions; ``u_i``: cup-caps
    with top and bottom arc of one colour; ``t_i``: cup-caps with the two arcs
    coloured differently.
    """
    _check_position(ctx, i)
    found: dict[str, list[DiluteDiagram]] = {k: [] for k in GENERATOR_NAMES}
    k = i - 1
    for left, right in _ambient(ctx, i):
        for a, b in itertools.product(range(2), repeat=2):
            word = left + (a, b) + right
            found["e" if a == b else "f"].append(dg.identity(word))
            if a != b:
                found["s"].append(dg.crossing(word, k))
            top = left + (a, a) + right
            bot = left + (b, b) + right
            found["u" if a == b else "t"].append(dg.cup_cap(top, bot, k))
    return {name: AlgebraElement.from_diagrams(ctx, ds) for name, ds in found.items()}


def generator(ctx: AlgebraContext, name: str, i: int) -> AlgebraElement:
    return generators_S2(ctx, i)[name]


def local_coordinates(a: AlgebraElement, i: int) -> dict[str, Scalar]:
    """Coordinates of ``a`` in the basis ``e_i, f_i, s_i, u_i, t_i``; ValueError if outside."""
    gens = generators_S2(a.ctx, i)
    coords = {}
    rebuilt = zero(a.ctx)
    for name, g in gens.items():
        rep = min(g.coeffs)
        coords[name] = a.coefficient(rep)
        rebuilt = rebuilt + g.scale(coords[name])
    if rebuilt != a:
        raise ValueError("element is not in the span of the local generators")
    return coords


def from_local(ctx: AlgebraContext, i: int, coords: Mapping[str, object]) -> AlgebraElement:
    gens = generators_S2(ctx, i)
    out = zero(ctx)
    for name, s in coords.items():
        out = out + gens[name].scale(s)
    return out


def idempotents_S2(ctx: AlgebraContext, i: int) -> dict[str, AlgebraElement]:
    """``e - u/delta``, ``(f +- s)/2`` and ``(u +- t)/(2 delta)`` at position ``i``."""
    g = generators_S2(ctx, i)
    d = ctx.delta
    if as_scalar(d).is_zero():
        raise ZeroDivisionError("the loop value must be invertible")
    inv_d = RationalScalar(ONE, d)
    half = RationalScalar(1, 2)
    return {
        "e-u/delta": g["e"] - g["u"].scale(inv_d),
        "(f+s)/2": (g["f"] + g["s"]).scale(half),
        "(f-s)/2": (g["f"] - g["s"]).scale(half),
        "(u+t)/2delta": (g["u"] + g["t"]).scale(inv_d * half),
        "(u-t)/2delta": (g["u"] - g["t"]).scale(inv_d * half),
    }


def braid_generator(ctx: AlgebraContext, i: int, sign: int = 1, Q=Q_VAR) -> AlgebraElement:
    """Image of ``sigma_i^{sign}``: ``q^{2 sign} e_i + u_i - Q^{sign} s_i``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    g = generators_S2(ctx, i)
    Q = as_scalar(Q)
    return g["e"].scale(q_var ** (2 * sign)) + g["u"] - g["s"].scale(simplify(Q ** sign))


def tl_embed(ctx: AlgebraContext, i: int) -> AlgebraElement:
    """Image of the Temperley-Lieb generator ``U_i``: ``u_i + t_i``."""
    g = generators_S2(ctx, i)
    return g["u"] + g["t"]


# cell ideals, symmetric and hat subalgebras ------------------------------

def cell_ideal_membership(a: AlgebraElement, p: Sequence[int]) -> bool:
    """True iff every diagram of ``a`` has propagating content ``<= p`` pointwise."""
    return all(dg.content_leq(dg.propagating_content(d, a.ctx.c), p) for d in a.coeffs)


def swap_orbits(ctx: AlgebraContext) -> list[tuple[DiluteDiagram, DiluteDiagram]]:
    if ctx.c != 2:
        raise ValueError("colour swap needs two colours")
    seen = set()
    orbits = []
    for d in ctx.basis():
        if d in seen:
            continue
        e = dg.colour_permute(d, (1, 0))
        seen.update((d, e))
        orbits.append((d, e))
    return orbits


def symmetric_basis(ctx: AlgebraContext) -> list[AlgebraElement]:
    """Orbit sums ``d + swap(d)``, a basis of the fixed-point algebra T^{S(2)}(n)."""
    out = []
    for d, e in swap_orbits(ctx):
        out.append(AlgebraElement.from_diagrams(ctx, {d, e}))
    return out


def is_swap_invariant(a: AlgebraElement) -> bool:
    return a.colour_permute((1, 0)) == a


def colour_content(word: Sequence[int], c: int) -> tuple[int, ...]:
    out = [0] * c
    for k in word:
        out[k] += 1
    return tuple(out)


def hat_subalgebra_basis(ctx: AlgebraContext) -> list[DiluteDiagram]:
    """Diagrams whose top and bottom words have the same colour content."""
    return [d for d in ctx.basis()
            if colour_content(d.top, ctx.c) == colour_content(d.bottom, ctx.c)]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if sum(parts) != n or any(p < 0 for p in parts):
        return 0
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def hat_dimension(n: int) -> int:
    """``sum_{r+s=n} binom(n; r, s)^2 C(r) C(s)``."""
    return sum(comb(n, r) ** 2 * catalan(r) * catalan(n - r) for r in range(n + 1))


def pierce_corner(ctx: AlgebraContext, word: Sequence[int]) -> list[DiluteDiagram]:
    """Basis of ``e Ahat(n) e`` for the idempotent ``e`` = identity diagram on ``word``."""
    word = tuple(word)
    return [d for d in hat_subalgebra_basis(ctx) if d.top == word and d.bottom == word]


# spans and ranks ----------------------------------------------------------

def span_rank(elements: Iterable[AlgebraElement]) -> int:
    """Dimension of the span over the fraction field of the scalars."""
    index: dict[DiluteDiagram, int] = {}
    rows = []
    for a in elements:
        row = {}
        for d, s in a.coeffs.items():
            row[index.setdefault(d, len(index))] = s
        rows.append(row)
    return matrix_rank(rows)


def bimodule_spanning_set(ctx: AlgebraContext) -> list[AlgebraElement]:
    """``T(n) + sum_g T(n) g T(n)`` inside ``T(n+1)`` for ``g`` in ``e_n, s_n, u_n, t_n``.

    ``ctx.n`` is the smaller size ``n``; ``T(n)`` enters through :func:`embed`.
    """
    n = ctx.n
    big = ctx.with_n(n + 1)
    small = [embed(b) for b in symmetric_basis(ctx)] if n > 0 else [identity(big)]
    gens = generators_S2(big, n)
    out = list(small)
    for name in ("e", "s", "u", "t"):
        g = gens[name]
        left = [a * g for a in small]
        for lg in left:
            for b in small:
                out.append(lg * b)
    return out


# the permutation algebras F^(c)(n) -----------------------------------------

@dataclass
class MatrixUnitReport:
    """Block structure of F^(c)(n): one matrix block per colour content."""

    n: int
    c: int
    matrix_units: bool
    block_sizes: dict[tuple[int, ...], int]
    multinomials_match: bool

    @property
    def ok(self) -> bool:
        return self.matrix_units and self.multinomials_match


def matrix_unit_structure(n: int, c: int) -> MatrixUnitReport:
    """Check ``x_{w,v} x_{v',w'} = [v = v'] x_{w,w'}`` on the permutation basis.

    Each basis diagram is determined by its top and bottom colour words, which
    share a colour content; the words of content ``p`` index one matrix block.
    """
    basis = dg.enumerate_basis(n, c, dg.PERMUTATION)
    by_words = {(d.top, d.bottom): d for d in basis}
    units = len(by_words) == len(basis)
    for d1 in basis:
        for d2 in basis:
            got = dg.compose(d1, d2)
            if d1.bottom != d2.top:
                units &= got is None
            else:
                units &= got == (by_words.get((d1.top, d2.bottom)), ())
    words: dict[tuple[int, ...], set] = {}
    for d in basis:
        words.setdefault(colour_content(d.top, c), set()).add(d.top)
    sizes = {p: len(ws) for p, ws in sorted(words.items())}
    square_sum = sum(k * k for k in sizes.values()) == len(basis)
    match = square_sum and all(multinomial(n, p) == k for p, k in sizes.items())
    return MatrixUnitReport(n, c, units, sizes, match)
