"""Exact scalars: Laurent polynomials over the integers and their fraction field.

All variables live in one fixed, ordered universe ``VARIABLES``; an exponent
vector is a tuple with one signed entry per variable.  Coefficients are Python
integers, so every identity checked with these types is exact.

Polynomial gcd (needed to put fractions in lowest terms) is delegated to the
sparse polynomial rings of :mod:`sympy.polys`; everything else is done here.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from sympy import ZZ
from sympy.polys.rings import ring as _sympy_ring

VARIABLES: tuple[str, ...] = ("q", "u", "v", "x", "Q", "delta")
NVARS = len(VARIABLES)
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_ALIASES = {"δ": "delta", "d": "delta"}
_ZERO_EXP = (0,) * NVARS

_RING = _sympy_ring(",".join(VARIABLES), ZZ)[0]

Exponent = tuple[int, ...]


def _var_index(name: str) -> int:
    name = _ALIASES.get(name, name)
    try:
        return _INDEX[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}") from None


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


class LaurentPoly:
    """Multivariate Laurent polynomial with integer coefficients.

    Stored as a dict ``exponent-vector -> nonzero int``; equal polynomials have
    equal dicts.  Instances are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != NVARS:
                        raise ValueError(f"exponent vector {e} has wrong length")
                    clean[tuple(e)] = int(c)
        self._terms: dict[Exponent, int] = clean
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict[Exponent, int]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({_ZERO_EXP: int(c)} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "LaurentPoly":
        e = [0] * NVARS
        e[_var_index(name)] = power
        return cls._raw({tuple(e): 1})

    @classmethod
    def monomial(cls, coeff: int = 1, **powers: int) -> "LaurentPoly":
        e = [0] * NVARS
        for name, p in powers.items():
            e[_var_index(name)] = p
        return cls._raw({tuple(e): int(coeff)} if coeff else {})

    # inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for ``±monomial``, the units of the Laurent ring."""
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c in (1, -1)

    def variables(self) -> set[str]:
        out = set()
        for e in self._terms:
            out.update(VARIABLES[i] for i, k in enumerate(e) if k)
        return out

    def degree_range(self, name: str) -> tuple[int, int]:
        i = _var_index(name)
        if not self._terms:
            return (0, 0)
        ks = [e[i] for e in self._terms]
        return min(ks), max(ks)

    def coefficient(self, name: str, power: int) -> "LaurentPoly":
        """Coefficient of ``name**power`` as a Laurent polynomial in the other variables."""
        i = _var_index(name)
        out = {}
        for e, c in self._terms.items():
            if e[i] == power:
                f = list(e)
                f[i] = 0
                out[tuple(f)] = c
        return LaurentPoly._raw(out)

    def leading(self) -> tuple[Exponent, int]:
        e = max(self._terms)
        return e, self._terms[e]

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if isinstance(other, RationalScalar):
            return RationalScalar(self) + other
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if isinstance(other, RationalScalar):
            return RationalScalar(self) * other
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out: dict[Exponent, int] = {}
        get = out.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2],
                     e1[3] + e2[3], e1[4] + e2[4], e1[5] + e2[5])
                out[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                return RationalScalar(ONE, self ** (-k))
            ((e, c),) = self._terms.items()
            return LaurentPoly._raw({tuple(-x * (-k) for x in e): c ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, LaurentPoly) and other.is_unit():
            return self * other ** -1
        return RationalScalar(self) / other

    def __rtruediv__(self, other):
        return RationalScalar(_coerce(other)) / self

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / other`` when it is a Laurent polynomial, else ValueError."""
        r = RationalScalar(self, other)
        if not r.is_laurent():
            raise ValueError("division is not exact")
        return r.numerator

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, RationalScalar):
            return other == self
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # substitution -----------------------------------------------------
    def substitute(self, var: str, value) -> "Scalar":
        return substitute(self, var, value)

    def evaluate(self, values: Mapping[str, Fraction | int]) -> Fraction:
        """Exact rational value at a point; every occurring variable must be given."""
        total = Fraction(0)
        for e, c in self._terms.items():
            t = Fraction(c)
            for i, k in enumerate(e):
                if k:
                    t *= Fraction(values[VARIABLES[i]]) ** k
            total += t
        return total

    # sympy bridge -----------------------------------------------------
    def _to_poly(self):
        """Return ``(poly, shift)`` with ``self == poly * monomial(shift)``."""
        if not self._terms:
            return _RING.zero, _ZERO_EXP
        shift = tuple(min(e[i] for e in self._terms) for i in range(NVARS))
        d = {tuple(x - s for x, s in zip(e, shift)): c for e, c in self._terms.items()}
        return _RING.from_dict(d), shift

    @staticmethod
    def _from_poly(poly, shift: Exponent = _ZERO_EXP) -> "LaurentPoly":
        return LaurentPoly._raw(
            {_add_exp(tuple(e), shift): int(c) for e, c in poly.items() if c})

    # text ---------------------------------------------------------------
    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"LaurentPoly({format_scalar(self)!r})"


def _coerce(x):
    if isinstance(x, (LaurentPoly, RationalScalar)):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    if isinstance(x, Fraction):
        return RationalScalar(LaurentPoly.const(x.numerator), LaurentPoly.const(x.denominator))
    return NotImplemented


def as_scalar(x) -> "Scalar":
    """Coerce ints, Fractions and strings to a scalar."""
    if isinstance(x, str):
        return parse_scalar(x)
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a scalar")
    return y


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd up to units; the result is a polynomial not divisible by any variable."""
    pa, _ = a._to_poly()
    pb, _ = b._to_poly()
    return LaurentPoly._from_poly(pa.gcd(pb))


class RationalScalar:
    """Quotient of two Laurent polynomials kept in a canonical reduced form.

    The denominator is a polynomial with no monomial factor, coprime to the
    numerator, and with positive leading coefficient in the lexicographic
    order on exponent vectors.  Structural equality therefore decides equality
    in the fraction field.
    """

    __slots__ = ("numerator", "denominator", "_hash")

    def __init__(self, numerator, denominator=1):
        num = _coerce(numerator)
        den = _coerce(denominator)
        if isinstance(num, RationalScalar) or isinstance(den, RationalScalar):
            num, den = _as_fraction(num), _as_fraction(den)
            n = num.numerator * den.denominator
            d = num.denominator * den.numerator
            num, den = n, d
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self._hash = None
        if num.is_zero():
            self.numerator, self.denominator = ZERO, ONE
            return
        if den.is_monomial():
            ((e, c),) = den._terms.items()
            shift = tuple(-x for x in e)
            sign = 1 if c > 0 else -1
            num = LaurentPoly._raw({_add_exp(k, shift): v * sign for k, v in num._terms.items()})
            c = abs(c)
            if c != 1:
                from math import gcd
                g = c
                for v in num._terms.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g != 1:
                    num = LaurentPoly._raw({k: v // g for k, v in num._terms.items()})
                    c //= g
            self.numerator, self.denominator = num, LaurentPoly.const(c)
            return
        pn, sn = num._to_poly()
        pd, sd = den._to_poly()
        _, pn, pd = pn.cofactors(pd)
        n = LaurentPoly._from_poly(pn, tuple(a - b for a, b in zip(sn, sd)))
        d = LaurentPoly._from_poly(pd)
        if d.leading()[1] < 0:
            n, d = -n, -d
        self.numerator, self.denominator = n, d

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalScalar":
        obj = cls.__new__(cls)
        obj.numerator, obj.denominator, obj._hash = num, den, None
        return obj

    def is_laurent(self) -> bool:
        return self.denominator == ONE

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.numerator

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        o = _as_fraction(other)
        if self.denominator == o.denominator:
            return RationalScalar(self.numerator + o.numerator, self.denominator)
        return RationalScalar(self.numerator * o.denominator + o.numerator * self.denominator,
                              self.denominator * o.denominator)

    __radd__ = __add__

    def __neg__(self):
        return RationalScalar._raw(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        o = _as_fraction(other)
        return RationalScalar(self.numerator * o.numerator, self.denominator * o.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        o = _as_fraction(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return RationalScalar(self.numerator * o.denominator, self.denominator * o.numerator)

    def __rtruediv__(self, other):
        return RationalScalar(_coerce(other)) / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalScalar(ONE) / (self ** (-k))
        return RationalScalar._raw(self.numerator ** k, self.denominator ** k)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        o = _as_fraction(other)
        return self.numerator == o.numerator and self.denominator == o.denominator

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.numerator) if self.is_laurent() else hash(
                (self.numerator, self.denominator))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def substitute(self, var: str, value) -> "Scalar":
        return substitute(self, var, value)

    def evaluate(self, values) -> Fraction:
        return self.numerator.evaluate(values) / self.denominator.evaluate(values)

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"RationalScalar({format_scalar(self)!r})"


def _as_fraction(x) -> RationalScalar:
    if isinstance(x, RationalScalar):
        return x
    return RationalScalar._raw(x, ONE)


Scalar = Union[LaurentPoly, RationalScalar]

ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({_ZERO_EXP: 1})

q = LaurentPoly.var("q")
u = LaurentPoly.var("u")
v = LaurentPoly.var("v")
x = LaurentPoly.var("x")
Q = LaurentPoly.var("Q")
delta = LaurentPoly.var("delta")

DELTA_SPECIAL = -q ** 2 - q ** -2
"""The specialization ``delta -> -q^2 - q^-2`` used for braids, R-matrices and traces."""


def simplify(s: Scalar) -> Scalar:
    """Return a LaurentPoly when ``s`` has trivial denominator."""
    if isinstance(s, RationalScalar) and s.is_laurent():
        return s.numerator
    return s


def lcm(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a == b:
        return a
    return (a * b).exact_div(laurent_gcd(a, b))


# substitution -----------------------------------------------------------

def substitute(p: Scalar, var: str, value) -> Scalar:
    """Image of ``p`` under the ring homomorphism ``var -> value``.

    Negative powers of ``var`` need ``value`` invertible; a zero value there is
    a ZeroDivisionError.  The result is a LaurentPoly whenever possible.
    """
    value = as_scalar(value)
    if isinstance(p, RationalScalar):
        num = _as_fraction(substitute(p.numerator, var, value))
        den = _as_fraction(substitute(p.denominator, var, value))
        if den.is_zero():
            raise ZeroDivisionError(f"substitution {var} -> {value} kills the denominator")
        return simplify(num / den)
    p = as_scalar(p)
    i = _var_index(var)
    groups: dict[int, dict[Exponent, int]] = {}
    for e, c in p._terms.items():
        f = list(e)
        k = f[i]
        f[i] = 0
        groups.setdefault(k, {})[tuple(f)] = c
    if list(groups) in ([], [0]):
        return p
    if isinstance(value, LaurentPoly) and value.is_zero() and min(groups) < 0:
        raise ZeroDivisionError(f"cannot substitute {var} -> 0 into a negative power")
    total: Scalar = ZERO
    for k, rest in groups.items():
        total = total + LaurentPoly._raw(rest) * (value ** k if k else ONE)
    return simplify(total)


def substitute_many(p: Scalar, mapping: Mapping[str, object]) -> Scalar:
    """Simultaneous substitution; values must not contain the replaced variables."""
    for name, val in mapping.items():
        p = substitute(p, name, val)
    return p


# q-brackets -------------------------------------------------------------

@lru_cache(maxsize=None)
def bracket_numerator(a: int, b: int) -> LaurentPoly:
    return LaurentPoly.monomial(1, q=b, u=a) - LaurentPoly.monomial(1, q=-b, u=-a)


Q_MINUS_QINV = q - q ** -1


@lru_cache(maxsize=None)
def bracket(a: int, b: int) -> RationalScalar:
    """``[a x + b] = (q^b u^a - q^-b u^-a) / (q - q^-1)`` with ``u`` playing ``q^x``."""
    return RationalScalar(bracket_numerator(a, b), Q_MINUS_QINV)


# text form --------------------------------------------------------------

def _format_monomial(e: Exponent) -> str:
    parts = []
    for name, k in zip(VARIABLES, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _format_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for e in sorted(p._terms, reverse=True):
        c = p._terms[e]
        mono = _format_monomial(e)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


def format_scalar(s) -> str:
    """Canonical text: sorted monomial sum, e.g. ``-q^2 - q^-2``; fractions as ``(n)/(d)``."""
    s = as_scalar(s)
    if isinstance(s, RationalScalar):
        if s.is_laurent():
            return _format_poly(s.numerator)
        return f"({_format_poly(s.numerator)})/({_format_poly(s.denominator)})"
    return _format_poly(s)


_TOKEN = re.compile(r"\s*(?:(\d+)|(delta|δ|[A-Za-z_]\w*)|(\S))")


def parse_scalar(text: str) -> Scalar:
    """Parse sums/products/quotients of integers and variables.

    Accepts the output of :func:`format_scalar` plus parentheses, ``/`` and
    integer exponents (``q^-2`` or ``q**-2``).
    """
    tokens = []
    pos = 0
    text = text.replace("**", "^")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        if m.group(0).strip() == "":
            break
        num, name, sym = m.groups()
        tokens.append(("num", int(num)) if num else ("name", name) if name else ("sym", sym))
        pos = m.end()
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        t = tokens[i]
        i += 1
        return t

    def expect(sym):
        t = take()
        if t != ("sym", sym):
            raise ValueError(f"expected {sym!r} in {text!r}")

    def expr():
        if peek() == ("sym", "-"):
            take()
            val = -term()
        else:
            if peek() == ("sym", "+"):
                take()
            val = term()
        while peek() in (("sym", "+"), ("sym", "-")):
            op = take()[1]
            t = term()
            val = val + t if op == "+" else val - t
        return val

    def term():
        val = power()
        while peek() in (("sym", "*"), ("sym", "/")):
            op = take()[1]
            f = power()
            val = val * f if op == "*" else as_scalar(val) / f
        return val

    def power():
        base = atom()
        if peek() == ("sym", "^"):
            take()
            sign = 1
            if peek() == ("sym", "-"):
                take()
                sign = -1
            t = take()
            if t[0] != "num":
                raise ValueError(f"bad exponent in {text!r}")
            return base ** (sign * t[1])
        return base

    def atom():
        t = take()
        if t[0] == "num":
            return LaurentPoly.const(t[1])
        if t[0] == "name":
            return LaurentPoly.var(t[1])
        if t == ("sym", "("):
            val = expr()
            expect(")")
            return val
        if t == ("sym", "-"):
            return -power()
        raise ValueError(f"unexpected token {t[1]!r} in {text!r}")

    result = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in {text!r}")
    return simplify(as_scalar(result))


# exact linear algebra over the fraction field ---------------------------

def matrix_rank(rows: Iterable[Mapping[object, Scalar]]) -> int:
    """Rank of a sparse matrix over the fraction field.

    Rows are ``column -> scalar`` maps with mutually comparable column keys.

    Rows are reduced fraction-free: each row is scaled to Laurent-polynomial
    entries and divided by the gcd of its entries, so elimination stays in the
    polynomial ring.
    """
    pivots: dict[object, dict[object, LaurentPoly]] = {}
    rank = 0
    for raw in rows:
        row = _primitive_row(raw)
        while row:
            col = min(row)
            if col not in pivots:
                pivots[col] = row
                rank += 1
                break
            prow = pivots[col]
            a, b = prow[col], row[col]
            g = laurent_gcd(a, b)
            ca, cb = a.exact_div(g), b.exact_div(g)
            new = {}
            for k in set(row) | set(prow):
                val = row.get(k, ZERO) * ca - prow.get(k, ZERO) * cb
                if not val.is_zero():
                    new[k] = val
            row = _primitive_row(new)
    return rank


def _primitive_row(raw: Mapping[object, Scalar]) -> dict[object, LaurentPoly]:
    entries = {k: _as_fraction(as_scalar(val)) for k, val in raw.items()}
    entries = {k: val for k, val in entries.items() if not val.is_zero()}
    if not entries:
        return {}
    den = ONE
    for val in entries.values():
        if val.denominator != den:
            den = lcm(den, val.denominator)
    polys = {k: (val.numerator * den).exact_div(val.denominator) if val.denominator != ONE
             else val.numerator * den for k, val in entries.items()}
    g = None
    for val in polys.values():
        g = val if g is None else laurent_gcd(g, val)
        if g == ONE:
            break
    if g is not None and g != ONE:
        polys = {k: val.exact_div(g) for k, val in polys.items()}
    return polys
