"""The spectral-parameter R-matrix of T^{S(2)}(n) and checks of its identities.

Scalars are rational functions of ``q`` and a multiplicative spectral
parameter (``u`` by default), with ``delta = -q^2 - q^-2``.  Brackets
``[a x + b]`` are read with ``u = q^x``, so the crossing involution
``x -> 3 - x`` is the substitution ``u -> q^3 / u``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .scalars import (
    Q_MINUS_QINV,
    LaurentPoly,
    Scalar,
    as_scalar,
    bracket,
    bracket_numerator,
    q,
    simplify,
    substitute,
    u,
    v,
)
from .towers import (
    GENERATOR_NAMES,
    AlgebraContext,
    AlgebraElement,
    braid_generator,
    from_local,
    generators_S2,
    identity,
    idempotents_S2,
    is_swap_invariant,
    local_coordinates,
    span_rank,
)

CoefficientFn = Callable[[object], Mapping[str, Scalar]]


def _at(s: Scalar, spectral) -> Scalar:
    return s if spectral is u else substitute(s, "u", spectral)


def r_coefficients(spectral=u) -> dict[str, Scalar]:
    """Coefficients of ``e, f, s, u, t`` in ``R_i(spectral)``."""
    one_m_x, three_m_x, x_, two_m_x = bracket(-1, 1), bracket(-1, 3), bracket(1, 0), bracket(-1, 2)
    coeffs = {
        "e": one_m_x * three_m_x,
        "f": three_m_x,
        "s": x_ * three_m_x,
        "u": -(x_ * two_m_x),
        "t": x_,
    }
    return {k: simplify(_at(c, as_scalar(spectral))) for k, c in coeffs.items()}


def cleared_r_coefficients(spectral=u) -> dict[str, LaurentPoly]:
    """``(q - q^-1)^2`` times the R coefficients; all are Laurent polynomials."""
    n = bracket_numerator
    raw = {
        "e": n(-1, 1) * n(-1, 3),
        "f": n(-1, 3) * Q_MINUS_QINV,
        "s": n(1, 0) * n(-1, 3),
        "u": -(n(1, 0) * n(-1, 2)),
        "t": n(1, 0) * Q_MINUS_QINV,
    }
    spectral = as_scalar(spectral)
    return {k: _at(c, spectral) for k, c in raw.items()}


@dataclass
class RMatrix:
    element: AlgebraElement
    i: int
    n: int

    def coordinates(self) -> dict[str, Scalar]:
        return local_coordinates(self.element, self.i)


def build_R(n: int, i: int, spectral=u, coefficients: CoefficientFn = r_coefficients,
            ctx: AlgebraContext | None = None) -> RMatrix:
    """``R_i(spectral)`` in T^{S(2)}(n) with ``delta = -q^2 - q^-2``."""
    ctx = ctx or AlgebraContext.specialized(n)
    return RMatrix(from_local(ctx, i, coefficients(spectral)), i, n)


def _element(n, i, spectral, coefficients):
    return build_R(n, i, spectral, coefficients).element


def check_YBE(coefficients: CoefficientFn = cleared_r_coefficients, x=u, y=v) -> bool:
    """``R_1(x) R_2(xy) R_1(y) == R_2(y) R_1(xy) R_2(x)`` in T^{S(2)}(3).

    The default uses the denominator-cleared R, which changes both sides by
    the same factor ``(q - q^-1)^6``.
    """
    x, y = as_scalar(x), as_scalar(y)
    xy = simplify(x * y)
    lhs = _element(3, 1, x, coefficients) * _element(3, 2, xy, coefficients) * _element(3, 1, y, coefficients)
    rhs = _element(3, 2, y, coefficients) * _element(3, 1, xy, coefficients) * _element(3, 2, x, coefficients)
    return lhs == rhs


def check_unit() -> bool:
    """``R_i(1) = [3]``, the identity times ``q^2 + 1 + q^-2``."""
    ctx = AlgebraContext.specialized(2)
    return build_R(2, 1, 1).element == identity(ctx).scale(bracket(0, 3))


def check_commutation(coefficients: CoefficientFn = cleared_r_coefficients, x=u, y=v,
                      tamper: Callable[[AlgebraElement], AlgebraElement] | None = None) -> bool:
    """``R_i(x) R_i(y) == R_i(y) R_i(x)`` in T^{S(2)}(2).

    The span of ``e, f, s, u, t`` at one position is itself commutative, so a
    mutation that can break this has to leave it; ``tamper`` is applied to
    ``R_i(x)`` for that purpose.
    """
    a = _element(2, 1, x, coefficients)
    if tamper is not None:
        a = tamper(a)
    b = _element(2, 1, y, coefficients)
    return a * b == b * a


CROSSING_SWAP = {"e": "u", "u": "e", "f": "t", "t": "f", "s": "s"}


def crossing_involution(a: AlgebraElement, i: int) -> AlgebraElement:
    """``u -> q^3/u`` on scalars together with ``u_i <-> e_i, t_i <-> f_i``."""
    coords = local_coordinates(a, i)
    swapped = {CROSSING_SWAP[k]: substitute(c, "u", q ** 3 * u ** -1) for k, c in coords.items()}
    return from_local(a.ctx, i, swapped)


def check_crossing_symmetry(coefficients: CoefficientFn = r_coefficients) -> bool:
    r = build_R(2, 1, u, coefficients).element
    return crossing_involution(r, 1) == r


def braid_subalgebra(ctx: AlgebraContext, i: int) -> list[AlgebraElement]:
    """A basis of the subalgebra generated by ``e_i, u_i, s_i`` (found by closure under products)."""
    g = generators_S2(ctx, i)
    basis = [identity(ctx), g["e"], g["u"], g["s"]]
    rank = _rank(basis)
    grew = True
    while grew:
        grew = False
        for a in list(basis):
            for b in list(basis):
                cand = a * b
                if _rank(basis + [cand]) > rank:
                    basis.append(cand)
                    rank += 1
                    grew = True
    return basis


def _rank(elements) -> int:
    return span_rank(elements)


def braid_subalgebra_crossing_closed() -> dict[str, object]:
    """Whether span{e,u,s}'s generated subalgebra is stable under the crossing swap."""
    ctx = AlgebraContext.specialized(2)
    g = generators_S2(ctx, 1)
    sub = braid_subalgebra(ctx, 1)
    r = _rank(sub)
    images = []
    for a in sub:
        coords = local_coordinates(a, 1)
        images.append(from_local(ctx, 1, {CROSSING_SWAP[k]: c for k, c in coords.items()}))
    return {
        "contains_f": _rank(sub + [g["f"]]) == r,
        "contains_t": _rank(sub + [g["t"]]) == r,
        "closed": _rank(sub + images) == r,
        "dimension": r,
    }


def braid_limit_coefficients() -> tuple[AlgebraElement, AlgebraElement]:
    """Coefficients of ``u^2`` and ``u^-2`` in ``(q - q^-1)^2 R_i(u)``."""
    cleared = cleared_r_coefficients()
    ctx = AlgebraContext.specialized(2)
    plus = from_local(ctx, 1, {k: c.coefficient("u", 2) for k, c in cleared.items()})
    minus = from_local(ctx, 1, {k: c.coefficient("u", -2) for k, c in cleared.items()})
    return plus, minus


def check_braid_limit() -> bool:
    """``u^{+-2}`` coefficients equal ``q^{-+2} sigma^{-+1}`` with ``Q = q`` (after clearing)."""
    plus, minus = braid_limit_coefficients()
    ctx = AlgebraContext.specialized(2)
    ok_plus = plus == braid_generator(ctx, 1, -1, Q=q).scale(q ** -2)
    ok_minus = minus == braid_generator(ctx, 1, 1, Q=q).scale(q ** 2)
    return ok_plus and ok_minus


def eigenvalues(spectral=u) -> dict[str, LaurentPoly]:
    """The five factors multiplying the idempotents in ``-u^2 q^2 (q^2-1)^2 R_i(u)``."""
    w = as_scalar(spectral)
    vals = {
        "(u-t)/2delta": (w - q ** 3) * (w + q) * (w * q - 1) * (w * q ** 3 + 1),
        "(f+s)/2": (w - q ** 3) * (w + q) * (w * q - 1) * (q ** 3 + w),
        "e-u/delta": (w - q ** 3) * (w + q) * (q - w) * (q ** 3 + w),
        "(f-s)/2": (w - q ** 3) * (1 + w * q) * (q - w) * (q ** 3 + w),
        "(u+t)/2delta": (1 - w * q ** 3) * (1 + w * q) * (q - w) * (q ** 3 + w),
    }
    return {k: simplify(x) for k, x in vals.items()}


IDEMPOTENT_FORM_PREFACTOR = -(u ** 2) * q ** 2 * (q ** 2 - 1) ** 2


def check_idempotent_form(coefficients: CoefficientFn = r_coefficients) -> bool:
    ctx = AlgebraContext.specialized(2)
    P = idempotents_S2(ctx, 1)
    total = None
    for name, lam in eigenvalues().items():
        term = P[name].scale(lam)
        total = term if total is None else total + term
    rhs = build_R(2, 1, u, coefficients).element.scale(IDEMPOTENT_FORM_PREFACTOR)
    return total == rhs


def check_eigenvectors() -> bool:
    """``R_i(u) P = (lambda_P / prefactor) P`` for each idempotent."""
    ctx = AlgebraContext.specialized(2)
    r = build_R(2, 1).element
    P = idempotents_S2(ctx, 1)
    for name, lam in eigenvalues().items():
        if r * P[name] != P[name].scale(simplify(lam / IDEMPOTENT_FORM_PREFACTOR)):
            return False
    return True


def eigenvalues_distinct() -> bool:
    vals = list(eigenvalues().values())
    return all(not (a - b).is_zero() for k, a in enumerate(vals) for b in vals[k + 1:])


def check_clears_to_laurent() -> bool:
    """``(q - q^-1)^2 R`` has Laurent coefficients and agrees with the cleared form."""
    raw = r_coefficients()
    cleared = cleared_r_coefficients()
    factor = Q_MINUS_QINV ** 2
    return all(simplify(raw[k] * factor) == cleared[k] and isinstance(cleared[k], LaurentPoly)
               for k in GENERATOR_NAMES)


def check_symmetric_products() -> bool:
    """Products of R-matrices stay in the swap-fixed algebra."""
    a = _element(3, 1, u, cleared_r_coefficients)
    b = _element(3, 2, v, cleared_r_coefficients)
    return all(is_swap_invariant(x) for x in (a, b, a * b, b * a * b))


def perturbed(coefficients: CoefficientFn, name: str, extra) -> CoefficientFn:
    """A coefficient function with ``extra`` added to one coefficient (for mutation tests)."""
    def fn(spectral):
        out = dict(coefficients(spectral))
        out[name] = simplify(out[name] + as_scalar(extra))
        return out
    return fn


SUITE_NAMES = ("YBE", "unit", "commutation", "crossing", "braid-limit", "idempotent-form")


def run_checks() -> dict[str, bool]:
    return {
        "YBE": check_YBE(),
        "unit": check_unit(),
        "commutation": check_commutation(),
        "crossing": check_crossing_symmetry(),
        "braid-limit": check_braid_limit(),
        "idempotent-form": check_idempotent_form(),
    }
