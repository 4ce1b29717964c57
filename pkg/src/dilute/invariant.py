"""Closure traces, the partial closure, the Markov property and the link invariant.

Two independent routes to the two-colour link invariant live here.  One
goes through the braid image in T^{S(2)}(n) and its closure trace.  The
other is a brute-force state sum over planar-diagram codes: colour every
component, delete crossings between different colours, and take the
product of Kauffman brackets of the monochrome sublinks.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from . import diagrams as dg
from .scalars import (
    DELTA_SPECIAL,
    ZERO,
    LaurentPoly,
    Scalar,
    as_scalar,
    format_scalar,
    q,
    simplify,
)
from .scalars import Q as Q_VAR
from .towers import (
    AlgebraContext,
    AlgebraElement,
    braid_generator,
    embed,
    generators_S2,
    identity,
    symmetric_basis,
)

DATA_DIR = Path(__file__).with_name("data")


# braid words -------------------------------------------------------------

@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group on ``n`` strands; letter ``+-i`` is ``sigma_i^{+-1}``."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.n < 1:
            raise ValueError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) > self.n - 1:
                raise ValueError(f"generator {x} out of range for {self.n} strands")

    @classmethod
    def parse(cls, text: str, n: int) -> "BraidWord":
        """Whitespace- or comma-separated signed integers, e.g. ``"1 -2 1"``."""
        tokens = text.replace(",", " ").split()
        try:
            return cls(n, tuple(int(t) for t in tokens))
        except ValueError as exc:
            raise ValueError(f"bad braid word {text!r}: {exc}") from None

    @property
    def positive(self) -> int:
        return sum(1 for x in self.letters if x > 0)

    @property
    def negative(self) -> int:
        return sum(1 for x in self.letters if x < 0)

    @property
    def exponent_sum(self) -> int:
        return self.positive - self.negative

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def stabilize(self, sign: int = 1) -> "BraidWord":
        """Add a strand and append ``sigma_n^{sign}``."""
        return BraidWord(self.n + 1, self.letters + (sign * self.n,))

    def rotate(self, k: int = 1) -> "BraidWord":
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.n, self.letters[k:] + self.letters[:k])

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


def braid_context(n: int) -> AlgebraContext:
    return AlgebraContext.specialized(n)


@lru_cache(maxsize=4096)
def _braid_image_cached(n: int, letters: tuple[int, ...], Q_text: str) -> AlgebraElement:
    ctx = braid_context(n)
    if not letters:
        return identity(ctx)
    Qs = as_scalar(Q_text)
    prev = _braid_image_cached(n, letters[:-1], Q_text)
    x = letters[-1]
    return prev * braid_generator(ctx, abs(x), 1 if x > 0 else -1, Q=Qs)


def braid_image(word: BraidWord, Q=Q_VAR) -> AlgebraElement:
    """The image of the braid in T^{S(2)}(n) with ``delta = -q^2 - q^-2``."""
    return _braid_image_cached(word.n, word.letters, format_scalar(as_scalar(Q)))


# partial closure and traces ---------------------------------------------

def partial_closure(a: AlgebraElement) -> AlgebraElement:
    """Close the last strand around the right: T(n+1) -> T(n), linearly."""
    ctx = a.ctx
    if ctx.n < 1:
        raise ValueError("nothing to close in the zero-strand algebra")
    out_ctx = ctx.with_n(ctx.n - 1)
    out: dict = {}
    for d, s in a.coeffs.items():
        closed = dg.close_last_strand(d)
        if closed is None:
            continue
        d2, loops = closed
        out[d2] = out.get(d2, ZERO) + s * ctx.loop_weight(loops)
    return AlgebraElement(out_ctx, out)


def rule_based_expectation(kind: str, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """The closure of ``a x_n b`` predicted by the one-line rules for each local generator.

    ``kind`` is one of ``"1", "e", "s", "u", "t"``; ``a`` and ``b`` lie in T(n).
    The rule for ``"1"`` (a single factor of ``delta``) disagrees with the
    diagrammatic closure, which gives ``2 delta``.
    """
    d = a.ctx.delta
    ab = a * b
    return {
        "1": ab.scale(d),
        "e": ab.scale(d),
        "s": ab.scale(ZERO),
        "u": ab,
        "t": ab.scale(ZERO),
    }[kind]


def diagrammatic_expectation(kind: str, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """``partial_closure(a x_n b)`` computed from diagrams."""
    n = a.ctx.n
    big = a.ctx.with_n(n + 1)
    middle = identity(big) if kind == "1" else generators_S2(big, n)[kind]
    return partial_closure(embed(a) * middle * embed(b))


def closure_trace(a: AlgebraElement) -> Scalar:
    """Close every strand; each closed loop of colour ``c`` weighs ``delta_c``."""
    total = ZERO
    for d, s in a.coeffs.items():
        loops = dg.full_closure_loops(d)
        if loops is not None:
            total = total + s * a.ctx.loop_weight(loops)
    return simplify(total)


def markov_factor(sign: int) -> LaurentPoly:
    """``q^{2 sign} delta + 1``, which equals ``-q^{4 sign}``."""
    return simplify(q ** (2 * sign) * DELTA_SPECIAL + 1)


def check_markov(n_max: int = 2, Q=Q_VAR) -> bool:
    """``partial_closure(a sigma_n^{+-1} b) == -q^{+-4} a b`` over spanning sets, n <= n_max."""
    for n in range(1, n_max + 1):
        ctx = braid_context(n)
        big = ctx.with_n(n + 1)
        span = symmetric_basis(ctx)
        for sign in (1, -1):
            sigma = braid_generator(big, n, sign, Q=Q)
            factor = -(q ** (4 * sign))
            for a in span:
                left = embed(a) * sigma
                for b in span:
                    if partial_closure(left * embed(b)) != (a * b).scale(factor):
                        return False
    return markov_factor(1) == -(q ** 4) and markov_factor(-1) == -(q ** -4)


def markov_normalization(word: BraidWord) -> Scalar:
    """``(-q^4)^{-e_+} (-q^-4)^{-e_-}`` for a word with ``e_+`` positive and ``e_-`` negative letters."""
    return simplify((-(q ** 4)) ** (-word.positive) * (-(q ** -4)) ** (-word.negative))


@dataclass
class InvariantValue:
    word: BraidWord
    Q: Scalar
    trace: Scalar
    normalized: Scalar

    def to_json(self) -> dict:
        return {
            "strands": self.word.n,
            "word": list(self.word.letters),
            "Q": format_scalar(self.Q),
            "trace": format_scalar(self.trace),
            "normalized": format_scalar(self.normalized),
        }


def link_invariant_trace(word: BraidWord, Q=Q_VAR) -> InvariantValue:
    Q = as_scalar(Q)
    t = closure_trace(braid_image(word, Q))
    return InvariantValue(word, Q, t, simplify(markov_normalization(word) * t))


# planar diagram codes and the state-sum oracle --------------------------

@dataclass
class PDCode:
    """Crossings ``(a, b, c, d)``: ``a`` is the incoming under-arc, then counterclockwise.

    Arcs ``a, c`` form the under-strand and ``b, d`` the over-strand.  Joining
    ``a-b`` and ``c-d`` is the A-smoothing, ``a-d`` and ``b-c`` the B-smoothing.
    ``signs`` records the writhe of each crossing (informational).  Arcs that
    meet no crossing are closed circles and are listed only in ``components``.
    """

    crossings: list[tuple] = field(default_factory=list)
    signs: list[int] = field(default_factory=list)
    components: list[list] = field(default_factory=list)

    def __post_init__(self):
        self.crossings = [tuple(x) for x in self.crossings]
        if not self.signs:
            self.signs = [0] * len(self.crossings)
        if not self.components:
            self.components = self._derive_components()
        else:
            self.components = [list(c) for c in self.components]
        self.validate()

    def arcs(self) -> list:
        seen = []
        for x in self.crossings:
            for a in x:
                if a not in seen:
                    seen.append(a)
        for comp in self.components:
            for a in comp:
                if a not in seen:
                    seen.append(a)
        return seen

    def _derive_components(self) -> list[list]:
        uf = _UnionFind(self.arcs())
        for a, b, c, d in self.crossings:
            uf.union(a, c)
            uf.union(b, d)
        return uf.classes()

    def validate(self) -> None:
        if len(self.signs) != len(self.crossings):
            raise ValueError("one sign per crossing")
        counts: dict = {}
        for x in self.crossings:
            if len(x) != 4:
                raise ValueError(f"crossing {x} must have four arcs")
            for a in x:
                counts[a] = counts.get(a, 0) + 1
        bad = [a for a, k in counts.items() if k != 2]
        if bad:
            raise ValueError(f"arcs {bad} do not occur exactly twice")
        flat = [a for comp in self.components for a in comp]
        if len(flat) != len(set(flat)) or set(flat) != set(self.arcs()):
            raise ValueError("components must partition the arcs")
        derived = _UnionFind(flat)
        for a, b, c, d in self.crossings:
            derived.union(a, c)
            derived.union(b, d)
        for comp in self.components:
            if len({derived.find(a) for a in comp}) != 1:
                raise ValueError(f"component {comp} is not connected along strands")
        if len(self.components) != derived.count():
            raise ValueError("components split a single strand")

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def to_json(self) -> dict:
        return {
            "crossings": [list(x) for x in self.crossings],
            "signs": list(self.signs),
            "components": [list(c) for c in self.components],
        }

    @classmethod
    def from_json(cls, data) -> "PDCode":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        if isinstance(data, list):
            data = {"crossings": data}
        crossings, signs = [], []
        for x in data.get("crossings", []):
            if isinstance(x, dict):
                crossings.append(tuple(x["arcs"]))
                signs.append(int(x.get("sign", 0)))
            else:
                crossings.append(tuple(x))
        if "signs" in data:
            signs = [int(s) for s in data["signs"]]
        return cls(crossings, signs, data.get("components", []))

    @classmethod
    def load(cls, path) -> "PDCode":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def load_example(name: str) -> PDCode:
    return PDCode.load(DATA_DIR / f"{name}.json")


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def classes(self) -> list[list]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())

    def count(self) -> int:
        return len({self.find(x) for x in self.parent})


def braid_closure_pd(word: BraidWord) -> PDCode:
    """Planar diagram of the closure of an upward-running braid.

    For ``sigma_i`` the over-strand runs lower-left to upper-right, so the
    crossing reads ``(LR, UR, UL, LL)`` and its A-smoothing is the identity;
    ``sigma_i^{-1}`` reads ``(LL, LR, UR, UL)``.
    """
    current = list(range(1, word.n + 1))
    fresh = word.n + 1
    raw = []
    for x in word.letters:
        i = abs(x) - 1
        ll, lr = current[i], current[i + 1]
        ul, ur = fresh, fresh + 1
        fresh += 2
        raw.append(((lr, ur, ul, ll), 1) if x > 0 else ((ll, lr, ur, ul), -1))
        current[i], current[i + 1] = ul, ur
    closing = {top: bottom for top, bottom in zip(current, range(1, word.n + 1))}
    crossings = [tuple(closing.get(a, a) for a in xs) for xs, _ in raw]
    signs = [s for _, s in raw]
    free = [[p] for p in range(1, word.n + 1) if all(p not in xs for xs in crossings)]
    pd_arcs = _UnionFind([a for xs in crossings for a in xs])
    for a, b, c, d in crossings:
        pd_arcs.union(a, c)
        pd_arcs.union(b, d)
    return PDCode(crossings, signs, pd_arcs.classes() + free)


def kauffman_bracket(pd: PDCode, A=q, loop=DELTA_SPECIAL) -> Scalar:
    """State sum ``sum A^{#A - #B} loop^{#circles}`` with the empty diagram equal to 1."""
    return _coloured_state_sum(pd, [0] * len(pd.components), as_scalar(A), as_scalar(loop))


def _coloured_state_sum(pd: PDCode, colouring: Sequence[int], A: Scalar, loop: Scalar) -> Scalar:
    comp_of = {a: k for k, comp in enumerate(pd.components) for a in comp}
    kept, passed = [], []
    for x in pd.crossings:
        a, b = x[0], x[1]
        if colouring[comp_of[a]] == colouring[comp_of[b]]:
            kept.append(x)
        else:
            passed.append(x)
    arcs = pd.arcs()
    total = ZERO
    for state in itertools.product((1, -1), repeat=len(kept)):
        uf = _UnionFind(arcs)
        for a, b, c, d in passed:
            uf.union(a, c)
            uf.union(b, d)
        for (a, b, c, d), s in zip(kept, state):
            if s == 1:
                uf.union(a, b)
                uf.union(c, d)
            else:
                uf.union(a, d)
                uf.union(b, c)
        total = total + A ** sum(state) * loop ** uf.count()
    return simplify(total)


def dilute_state_sum(pd: PDCode, colours: int = 2, A=q, loop=DELTA_SPECIAL) -> Scalar:
    """Sum over colourings of components of the product of monochrome brackets.

    Crossings between different colours are deleted, after which the state
    sum factorizes as the product of the brackets of the coloured sublinks.
    """
    A, loop = as_scalar(A), as_scalar(loop)
    total = ZERO
    for colouring in itertools.product(range(colours), repeat=len(pd.components)):
        total = total + _coloured_state_sum(pd, colouring, A, loop)
    return simplify(total)


def disjoint_union(p1: PDCode, p2: PDCode) -> PDCode:
    tag = lambda k: (lambda a: (k, a))  # noqa: E731
    t1, t2 = tag(1), tag(2)
    return PDCode(
        [tuple(map(t1, x)) for x in p1.crossings] + [tuple(map(t2, x)) for x in p2.crossings],
        list(p1.signs) + list(p2.signs),
        [list(map(t1, c)) for c in p1.components] + [list(map(t2, c)) for c in p2.components],
    )


# calibration --------------------------------------------------------------

class CalibrationError(RuntimeError):
    pass


STANDARD_BRAIDS = {
    "unknot": BraidWord(1, ()),
    "unknot-curl": BraidWord(2, (1,)),
    "unlink": BraidWord(2, ()),
    "hopf": BraidWord(2, (1, 1)),
    "trefoil": BraidWord(2, (1, 1, 1)),
}

EXTRA_BRAIDS = {
    "unknot-negative-curl": BraidWord(2, (-1,)),
    "unknot-two-curls": BraidWord(3, (1, 2)),
    "hopf-negative": BraidWord(2, (-1, -1)),
    "trefoil-mirror": BraidWord(2, (-1, -1, -1)),
    "figure-eight": BraidWord(3, (1, -2, 1, -2)),
    "unlink-three": BraidWord(3, ()),
    "hopf-plus-unknot": BraidWord(3, (1, 1)),
}


@dataclass
class CrossCheck:
    name: str
    word: BraidWord
    state_sum: Scalar
    calibrated_trace: Scalar

    @property
    def ok(self) -> bool:
        return self.state_sum == self.calibrated_trace

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "word": str(self.word),
            "strands": self.word.n,
            "state_sum": format_scalar(self.state_sum),
            "calibrated_trace": format_scalar(self.calibrated_trace),
            "ok": self.ok,
        }


@dataclass
class CalibrationReport:
    crossing_factor: Scalar
    Q_squared: Scalar
    Q_star: Scalar
    sign_note: str
    checks: list[CrossCheck]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "crossing_factor": format_scalar(self.crossing_factor),
            "Q_squared": format_scalar(self.Q_squared),
            "Q_star": format_scalar(self.Q_star),
            "sign_note": self.sign_note,
            "checks": [c.to_json() for c in self.checks],
            "ok": self.ok,
        }


def _monomial_root(m: Scalar, k: int) -> LaurentPoly:
    """The Laurent monomial whose ``k``-th power is ``m`` (positive coefficient root)."""
    m = simplify(m)
    if not isinstance(m, LaurentPoly) or not m.is_monomial():
        raise CalibrationError(f"{format_scalar(m)} is not a monomial")
    (exps, c), = m.items()
    if any(e % k for e in exps):
        raise CalibrationError(f"{format_scalar(m)} has no {k}-th root")
    root_c = round(abs(c) ** (1.0 / k))
    for cand in (root_c, -root_c):
        if cand ** k == c:
            return LaurentPoly._raw({tuple(e // k for e in exps): cand})
    raise CalibrationError(f"{format_scalar(m)} has no integral {k}-th root")


def _trace_in_Q(word: BraidWord) -> LaurentPoly:
    return as_scalar(closure_trace(braid_image(word, Q_VAR)))


def calibrate(one_crossing: BraidWord = BraidWord(2, (1,)),
              two_crossing: BraidWord = BraidWord(2, (1, 1))) -> tuple[Scalar, Scalar, Scalar, str]:
    """Solve for the crossing factor and ``Q`` from a one- and a two-crossing closure."""
    s1 = dilute_state_sum(braid_closure_pd(one_crossing))
    t1 = _trace_in_Q(one_crossing)
    if t1.variables() & {"Q"}:
        raise CalibrationError("one-crossing trace unexpectedly depends on Q")
    ratio = simplify(t1 / s1)
    lam = _monomial_root(ratio, one_crossing.exponent_sum)

    s2 = dilute_state_sum(braid_closure_pd(two_crossing))
    t2 = _trace_in_Q(two_crossing)
    target = simplify(lam ** two_crossing.exponent_sum * s2)
    # the trace is a polynomial in Q^2 (cross-colour strands meet an even number of times)
    odd = [p for p in _Q_powers(t2) if p % 2]
    if odd:
        raise CalibrationError("trace has odd powers of Q")
    powers = sorted(set(_Q_powers(t2)))
    if powers != [0, 2]:
        raise CalibrationError(f"expected a linear polynomial in Q^2, got powers {powers}")
    const, lin = t2.coefficient("Q", 0), t2.coefficient("Q", 2)
    Q2 = simplify((target - const) / lin)
    root = _monomial_root(Q2, 2)
    # traces only see Q^2; the sign follows from matching one mixed-colour crossing,
    # where the braid image weighs the colour swap by -Q and the state sum by the
    # crossing factor: -Q / lam = 1
    Q_star = simplify(-lam)
    if simplify(Q_star ** 2) != Q2:
        raise CalibrationError(f"local sign rule gives Q = {format_scalar(Q_star)} but Q^2 = {format_scalar(Q2)}")
    note = f"closure traces are even in Q; both +-({format_scalar(root)}) fit, the local rule -Q/lambda = 1 selects the sign"
    return lam, Q2, Q_star, note


def _Q_powers(p: LaurentPoly) -> list[int]:
    idx = p.variables()
    if "Q" not in idx:
        return [0] if not p.is_zero() else []
    lo, hi = p.degree_range("Q")
    return [k for k in range(lo, hi + 1) if not p.coefficient("Q", k).is_zero()]


def calibrate_and_crosscheck(braids: dict[str, BraidWord] | None = None,
                             pds: dict[str, PDCode] | None = None) -> CalibrationReport:
    """Calibrate on one- and two-crossing closures, then compare every braid with the oracle."""
    braids = dict(STANDARD_BRAIDS if braids is None else braids)
    pds = pds or {}
    lam, Q2, Q_star, note = calibrate()
    checks = []
    for name, word in braids.items():
        pd = pds.get(name) or braid_closure_pd(word)
        oracle = dilute_state_sum(pd)
        trace = closure_trace(braid_image(word, Q_star))
        checks.append(CrossCheck(name, word, oracle, simplify(lam ** (-word.exponent_sum) * trace)))
    return CalibrationReport(lam, Q2, Q_star, note, checks)


def check_tower_compatibility(n_max: int = 2) -> bool:
    """``closure_trace(embed(a)) == 2 delta closure_trace(a)`` and ``tau_{n+1} = tau_n o closure``."""
    for n in range(0, n_max + 1):
        ctx = braid_context(n)
        two_delta = simplify(2 * ctx.delta)
        for a in symmetric_basis(ctx):
            if closure_trace(embed(a)) != simplify(two_delta * closure_trace(a)):
                return False
        for a in symmetric_basis(ctx.with_n(n + 1)):
            if closure_trace(a) != closure_trace(partial_closure(a)):
                return False
    return True
