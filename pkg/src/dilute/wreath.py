"""Two-dimensional representations of the group algebra of Z wr S_2 and their tensor products.

The group is generated by commuting invertible ``q1, q2`` and an involution
``sigma`` exchanging them.  The coproduct is group-like, so a tensor
product of representations acts by Kronecker products.  Matrices are
numpy object arrays of exact scalars in the formal variable ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .scalars import ONE, ZERO, Scalar, as_scalar, format_scalar, matrix_rank, simplify, x

GENERATORS = ("q1", "q2", "sigma")
LITERAL = "literal"
BALANCED = "balanced"


def _mat(rows) -> np.ndarray:
    out = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, s in enumerate(row):
            out[i, j] = as_scalar(s)
    return out


def eye(k: int) -> np.ndarray:
    return _mat([[ONE if i == j else ZERO for j in range(k)] for i in range(k)])


def _clean(m: np.ndarray) -> np.ndarray:
    return np.vectorize(lambda s: simplify(as_scalar(s)), otypes=[object])(m)


def mat_equal(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return all(simplify(as_scalar(s) - as_scalar(t)).is_zero() for s, t in zip(a.flat, b.flat))


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return _clean(a @ b)


def trace(m: np.ndarray) -> Scalar:
    total = ZERO
    for k in range(m.shape[0]):
        total = total + m[k, k]
    return simplify(total)


def inverse(m: np.ndarray) -> np.ndarray:
    """Exact inverse by Gauss-Jordan elimination; ValueError if singular."""
    k = m.shape[0]
    aug = [[as_scalar(m[i, j]) for j in range(k)] + [ONE if i == j else ZERO for j in range(k)]
           for i in range(k)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if not simplify(aug[r][col]).is_zero()), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [simplify(s / p) for s in aug[col]]
        for r in range(k):
            if r != col and not simplify(aug[r][col]).is_zero():
                f = aug[r][col]
                aug[r] = [simplify(s - f * t) for s, t in zip(aug[r], aug[col])]
    return _mat([row[k:] for row in aug])


def scale(m: np.ndarray, s) -> np.ndarray:
    s = as_scalar(s)
    return _clean(m * s)


@dataclass
class WreathRep:
    """Images of ``q1, q2, sigma``; ``label`` is ``n >= 0`` or ``"+"`` / ``"-"``."""

    label: object
    matrices: dict[str, np.ndarray]
    name: str = ""

    @property
    def dim(self) -> int:
        return self.matrices["sigma"].shape[0]

    def __getitem__(self, g: str) -> np.ndarray:
        return self.matrices[g]

    def image(self, word: Sequence[tuple[str, int]]) -> np.ndarray:
        """Image of a product of generator powers, e.g. ``[("q1", 2), ("sigma", 1)]``."""
        out = eye(self.dim)
        for g, k in word:
            m = self.matrices[g] if k >= 0 else inverse(self.matrices[g])
            for _ in range(abs(k)):
                out = mat_mul(out, m)
        return out

    def to_json(self) -> dict:
        return {
            "label": str(self.label),
            "matrices": {g: [[format_scalar(s) for s in row] for row in m.tolist()]
                         for g, m in self.matrices.items()},
        }


def rep(label, normalization: str = LITERAL) -> WreathRep:
    """``rho^(n)`` or one of the one-dimensional ``rho_+`` / ``rho_-``.

    ``literal`` sends ``q1`` to ``diag(x^n, 1)``.  ``balanced`` sends it to
    ``diag(x^n, x^-n)``, which differs from ``literal`` by the character
    ``q_i -> x^{-n/2}`` whenever that makes sense.
    """
    if label in ("+", "-"):
        sgn = 1 if label == "+" else -1
        return WreathRep(label, {"q1": _mat([[1]]), "q2": _mat([[1]]), "sigma": _mat([[sgn]])},
                         f"rho_{label}")
    n = int(label)
    if n < 0:
        raise ValueError("n must be non-negative")
    lo = ONE if normalization == LITERAL else x ** -n
    if normalization not in (LITERAL, BALANCED):
        raise ValueError(f"unknown normalization {normalization!r}")
    return WreathRep(n, {
        "q1": _mat([[x ** n, ZERO], [ZERO, lo]]),
        "q2": _mat([[lo, ZERO], [ZERO, x ** n]]),
        "sigma": _mat([[0, 1], [1, 0]]),
    }, f"rho^({n})")


def twist(r: WreathRep, power: int = 1) -> WreathRep:
    """Tensor with the character ``q_i -> x^power, sigma -> 1``."""
    c = x ** power
    return WreathRep(r.label, {
        "q1": scale(r["q1"], c), "q2": scale(r["q2"], c), "sigma": r["sigma"],
    }, f"chi^{power} {r.name}")


def tensor(r1: WreathRep, r2: WreathRep) -> WreathRep:
    """Every generator is group-like, so it acts by the Kronecker product."""
    return WreathRep((r1.label, r2.label),
                     {g: _clean(np.kron(r1[g], r2[g])) for g in GENERATORS},
                     f"{r1.name} (x) {r2.name}")


# relations ---------------------------------------------------------------

def relation_checks(r: WreathRep) -> dict[str, bool]:
    q1, q2, s = r["q1"], r["q2"], r["sigma"]
    one = eye(r.dim)
    invertible = True
    try:
        q1i, q2i = inverse(q1), inverse(q2)
    except ValueError:
        invertible = False
    out = {
        "sigma^2 = 1": mat_equal(mat_mul(s, s), one),
        "sigma q1 = q2 sigma": mat_equal(mat_mul(s, q1), mat_mul(q2, s)),
        "sigma q2 = q1 sigma": mat_equal(mat_mul(s, q2), mat_mul(q1, s)),
        "q1 q2 = q2 q1": mat_equal(mat_mul(q1, q2), mat_mul(q2, q1)),
        "q_i invertible": invertible,
    }
    if invertible:
        out.update(antipode_checks(r, q1i, q2i))
    return out


def antipode_checks(r: WreathRep, q1i=None, q2i=None) -> dict[str, bool]:
    """``S(g) g = 1`` for the group-like generators, and the contragredient is a representation."""
    q1i = inverse(r["q1"]) if q1i is None else q1i
    q2i = inverse(r["q2"]) if q2i is None else q2i
    s = r["sigma"]
    one = eye(r.dim)
    antipode = {"q1": q1i, "q2": q2i, "sigma": s}
    dual = WreathRep(("dual", r.label), {g: antipode[g].T.copy() for g in GENERATORS})
    dual_rel = {k: v for k, v in relation_checks_basic(dual).items()}
    return {
        "S(q1) q1 = 1": mat_equal(mat_mul(q1i, r["q1"]), one),
        "S(q2) q2 = 1": mat_equal(mat_mul(q2i, r["q2"]), one),
        "S(sigma) sigma = 1": mat_equal(mat_mul(s, s), one),
        "S anti-multiplicative": mat_equal(mat_mul(q1i, s), mat_mul(s, q2i)),
        "contragredient is a representation": all(dual_rel.values()),
    }


def relation_checks_basic(r: WreathRep) -> dict[str, bool]:
    q1, q2, s = r["q1"], r["q2"], r["sigma"]
    return {
        "sigma^2 = 1": mat_equal(mat_mul(s, s), eye(r.dim)),
        "sigma q1 = q2 sigma": mat_equal(mat_mul(s, q1), mat_mul(q2, s)),
        "sigma q2 = q1 sigma": mat_equal(mat_mul(s, q2), mat_mul(q1, s)),
        "q1 q2 = q2 q1": mat_equal(mat_mul(q1, q2), mat_mul(q2, q1)),
    }


# invariant subspaces -----------------------------------------------------

def basis_vector(dim: int, index: int, coeff=ONE) -> list[Scalar]:
    v = [ZERO] * dim
    v[index] = as_scalar(coeff)
    return v


def restrict(r: WreathRep, basis: Sequence[Sequence]) -> dict[str, np.ndarray] | None:
    """Matrices of the action on ``span(basis)`` in that ordered basis, or None if not invariant."""
    B = _mat([list(col) for col in zip(*basis)])  # columns are the basis vectors
    k = B.shape[1]
    rows = _independent_rows(B)
    if rows is None:
        raise ValueError("basis vectors are linearly dependent")
    Binv = inverse(B[rows, :])
    out = {}
    for g in GENERATORS:
        GB = mat_mul(r[g], B)
        M = mat_mul(Binv, GB[rows, :])
        if not mat_equal(mat_mul(B, M), GB):
            return None
        out[g] = M
    assert all(m.shape == (k, k) for m in out.values())
    return out


def _independent_rows(B: np.ndarray) -> list[int] | None:
    k = B.shape[1]
    chosen: list[int] = []
    for i in range(B.shape[0]):
        trial = chosen + [i]
        rows = [{j: as_scalar(B[t, j]) for j in range(k) if not simplify(as_scalar(B[t, j])).is_zero()}
                for t in trial]
        if matrix_rank(rows) == len(trial):
            chosen = trial
        if len(chosen) == k:
            return chosen
    return None


def carries(r: WreathRep, basis, target: WreathRep) -> bool:
    m = restrict(r, basis)
    return m is not None and all(mat_equal(m[g], target[g]) for g in GENERATORS)


def span_dimension(vectors: Sequence[Sequence]) -> int:
    rows = [{j: as_scalar(s) for j, s in enumerate(v) if not simplify(as_scalar(s)).is_zero()}
            for v in vectors]
    return matrix_rank(rows)


# the two tensor-product decompositions -----------------------------------

CHARACTER_WORDS = {
    "q1": [("q1", 1)],
    "q2": [("q2", 1)],
    "sigma": [("sigma", 1)],
    "q1 sigma": [("q1", 1), ("sigma", 1)],
    "q1^2 q2^-1": [("q1", 2), ("q2", -1)],
    "q1 q2": [("q1", 1), ("q2", 1)],
}


def character(r: WreathRep) -> dict[str, Scalar]:
    return {name: trace(r.image(w)) for name, w in CHARACTER_WORDS.items()}


def direct_sum_character(*reps: WreathRep) -> dict[str, Scalar]:
    out = {name: ZERO for name in CHARACTER_WORDS}
    for r in reps:
        for name, val in character(r).items():
            out[name] = simplify(out[name] + val)
    return out


def characters_equal(a: dict, b: dict) -> bool:
    return all(simplify(a[k] - b[k]).is_zero() for k in CHARACTER_WORDS)


@dataclass
class DecompositionResult:
    n: int
    normalization: str
    upper_invariant: bool
    upper_is_next: bool
    lower_invariant: bool
    lower_is_previous: bool
    lower_is_twisted_previous: bool
    spans: bool
    characters_match: bool
    twisted_characters_match: bool
    lower_matrices: dict = field(default_factory=dict)

    @property
    def literal_ok(self) -> bool:
        """The decomposition holds exactly as stated, by subspaces and by characters."""
        return (self.upper_is_next and self.lower_is_previous and self.spans
                and self.characters_match)

    @property
    def twisted_ok(self) -> bool:
        """It holds once the lower summand is twisted by ``q_i -> x``."""
        return (self.upper_is_next and self.lower_is_twisted_previous and self.spans
                and self.twisted_characters_match)

    def to_json(self) -> dict:
        d = {k: v for k, v in self.__dict__.items() if k != "lower_matrices"}
        d["lower_matrices"] = {g: [[format_scalar(s) for s in row] for row in m.tolist()]
                               for g, m in self.lower_matrices.items()}
        d["literal_ok"] = self.literal_ok
        d["twisted_ok"] = self.twisted_ok
        return d


def decomposition_bases(normalization: str = LITERAL) -> tuple[list, list]:
    """``(e1 (x) e1, e2 (x) e2)`` and ``(x^-1 e2 (x) e1, x^-1 e1 (x) e2)`` in the 4-dim tensor space."""
    inv_x = x ** -1
    upper = [basis_vector(4, 0), basis_vector(4, 3)]
    lower = [basis_vector(4, 2, inv_x), basis_vector(4, 1, inv_x)]
    return upper, lower


def verify_decomposition(n: int, normalization: str = LITERAL) -> DecompositionResult:
    """``rho^(1) (x) rho^(n)`` against ``rho^(n-1) (+) rho^(n+1)`` for ``n >= 1``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    T = tensor(rep(1, normalization), rep(n, normalization))
    upper, lower = decomposition_bases(normalization)
    nxt, prev = rep(n + 1, normalization), rep(n - 1, normalization)
    up_m = restrict(T, upper)
    low_m = restrict(T, lower)
    chi_T = character(T)
    return DecompositionResult(
        n=n,
        normalization=normalization,
        upper_invariant=up_m is not None,
        upper_is_next=carries(T, upper, nxt),
        lower_invariant=low_m is not None,
        lower_is_previous=carries(T, lower, prev),
        lower_is_twisted_previous=carries(T, lower, twist(prev, 1)),
        spans=span_dimension(upper + lower) == 4,
        characters_match=characters_equal(chi_T, direct_sum_character(prev, nxt)),
        twisted_characters_match=characters_equal(chi_T, direct_sum_character(twist(prev, 1), nxt)),
        lower_matrices=low_m or {},
    )


@dataclass
class SignTensorResult:
    sign: str
    carries_rep1: bool
    characters_match: bool

    @property
    def ok(self) -> bool:
        return self.carries_rep1 and self.characters_match


def sign_tensor(sign: str, normalization: str = LITERAL) -> SignTensorResult:
    """``rho^(1) (x) rho_+-`` is ``rho^(1)``; for the minus sign use the basis ``(f1, -f2)``."""
    T = tensor(rep(1, normalization), rep(sign))
    basis = [basis_vector(2, 0), basis_vector(2, 1, 1 if sign == "+" else -1)]
    r1 = rep(1, normalization)
    return SignTensorResult(sign, carries(T, basis, r1),
                           characters_equal(character(T), character(r1)))


# irreducibility ------------------------------------------------------------

def commutant_dimension(r: WreathRep) -> int:
    """Dimension of ``{X : X g = g X}`` over the fraction field of ``x``."""
    k = r.dim
    rows = []
    for g in GENERATORS:
        G = r[g]
        # (X G - G X)[i, j] = sum_l X[i, l] G[l, j] - G[i, l] X[l, j]
        for i in range(k):
            for j in range(k):
                row: dict = {}
                for l in range(k):
                    row[(i, l)] = simplify(row.get((i, l), ZERO) + G[l, j])
                    row[(l, j)] = simplify(row.get((l, j), ZERO) - G[i, l])
                row = {key: s for key, s in row.items() if not simplify(s).is_zero()}
                if row:
                    rows.append(row)
    return k * k - matrix_rank(rows)


def is_irreducible(r: WreathRep) -> bool:
    return commutant_dimension(r) == 1


# tensor-power multiplicities ---------------------------------------------

def tensor_power_multiplicities(n_max: int) -> dict[int, dict]:
    """Multiplicities of irreducibles in ``rho^(1)`` to the ``n``-th tensor power.

    Labels are ``k >= 1`` for ``rho^(k)`` and ``"+"``, ``"-"``.  Uses the two
    decompositions with the twist forgotten; the twist on each summand is
    determined by the level, so the branching graph is unaffected.
    """
    levels = {0: {"+": 1}}
    for n in range(1, n_max + 1):
        nxt: dict = {}
        for label, m in levels[n - 1].items():
            if label in ("+", "-"):
                targets = [1]
            elif label == 1:
                targets = ["+", "-", 2]
            else:
                targets = [label - 1, label + 1]
            for t in targets:
                nxt[t] = nxt.get(t, 0) + m
        levels[n] = nxt
    return levels


def tensor_power_rows(n_max: int) -> dict[int, list]:
    """Rows in the folded format: the split pair ``(+, -)`` first, then ``rho^(k)`` by increasing ``k``."""
    rows = {}
    for n, mult in tensor_power_multiplicities(n_max).items():
        if n == 0:
            rows[0] = [1]
            continue
        row = []
        for k in range(n % 2, n + 1, 2):
            if k == 0:
                row.append((mult.get("+", 0), mult.get("-", 0)))
            else:
                row.append(mult.get(k, 0))
        rows[n] = row
    return rows


def run_checks(n_max: int = 3) -> dict[str, bool]:
    out = {}
    labels = ["+", "-"] + list(range(0, n_max + 2))
    out["relations"] = all(all(relation_checks(rep(lbl)).values()) for lbl in labels)
    out["irreducible rho^(n), n >= 1"] = all(is_irreducible(rep(k)) for k in range(1, n_max + 2))
    out["rho^(0) reducible"] = commutant_dimension(rep(0)) == 2
    for n in range(1, n_max + 1):
        res = verify_decomposition(n)
        out[f"rho^(1) (x) rho^({n}) literal"] = res.literal_ok
        out[f"rho^(1) (x) rho^({n}) twisted"] = res.twisted_ok
    for sgn in ("+", "-"):
        out[f"rho^(1) (x) rho_{sgn}"] = sign_tensor(sgn).ok
    return out
