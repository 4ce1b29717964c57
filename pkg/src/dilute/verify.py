"""Named verification suites; every acceptance check is reachable from here.

Each check function returns a list of :class:`Check` records.  Suites group
them (``algebra``, ``bratteli``, ``ybe``, ``ybe-properties``, ``markov``,
``wreath``) and ``all`` runs everything in a fixed order.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from . import bratteli as br
from . import diagrams as dg
from . import invariant as inv
from . import towers as tw
from . import wreath as wr
from . import ybe
from .scalars import DELTA_SPECIAL, Q, format_scalar, q, simplify


@dataclass
class Check:
    name: str
    ok: bool
    witness: str | None = None
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.ok else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    suite: str
    checks: list[Check]
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
            "checks": [c.to_json() for c in self.checks],
        }

    def table(self) -> str:
        width = max([len(c.name) for c in self.checks] + [10])
        lines = [f"{c.name:<{width}}  {'PASS' if c.ok else 'FAIL'}"
                 + (f"  ({c.witness})" if not c.ok and c.witness else "")
                 for c in self.checks]
        lines.append(f"{self.suite}: {sum(c.ok for c in self.checks)}/{len(self.checks)} passed")
        return "\n".join(lines)


def _first_failure(cases, predicate) -> str | None:
    for case in cases:
        if not predicate(case):
            return repr(case)
    return None


def _check(name: str, cases, predicate, **detail) -> Check:
    witness = _first_failure(cases, predicate)
    return Check(name, witness is None, witness, detail)


# reference values --------------------------------------------------------

DIMENSION_TABLE = {0: 1, 1: 2, 2: 10, 3: 70}

# rows of the folded Pascal triangle, central (split) entry first
FOLDED_PASCAL_ROWS = {
    0: [1],
    1: [1],
    2: [(1, 1), 1],
    3: [3, 1],
    4: [(3, 3), 4, 1],
    5: [10, 5, 1],
    6: [(10, 10), 15, 6, 1],
    7: [35, 21, 7, 1],
    8: [(35, 35), 56, 28, 8, 1],
}


# algebra -----------------------------------------------------------------

def dimension_table(n_max: int = 5) -> list[Check]:
    enumerated = {n: len(dg.enumerate_basis(n, 2)) for n in range(n_max + 1)}
    return [
        _check("dim T^(2)(n) matches the table for n <= 3", DIMENSION_TABLE.items(),
               lambda kv: enumerated[kv[0]] == kv[1], enumerated=enumerated),
        _check(f"dim T^(2)(n) = C(n) C(n+1) for n <= {n_max}", range(n_max + 1),
               lambda n: enumerated[n] == tw.catalan(n) * tw.catalan(n + 1) == br.dim_formula_T(n, 2)),
    ]


def multinomial_blocks(c_max: int = 3, n_max: int = 4) -> list[Check]:
    cases = [(c, n) for c in range(1, c_max + 1) for n in range(n_max + 1)]

    def paths_agree(case):
        c, n = case
        g = br.multinomial_lattice(c, n)
        rep = tw.matrix_unit_structure(n, c)
        return all(br.count_directed_paths(g, p, n) == k for p, k in rep.block_sizes.items())

    return [
        _check("F^(c)(n) basis multiplies as matrix units", cases,
               lambda cn: tw.matrix_unit_structure(cn[1], cn[0]).matrix_units),
        _check("F^(c)(n) block sizes are multinomial coefficients", cases,
               lambda cn: tw.matrix_unit_structure(cn[1], cn[0]).multinomials_match),
        _check("block sizes equal directed path counts", cases, paths_agree),
    ]


def hat_subalgebra(n_max: int = 3) -> list[Check]:
    def closed(n):
        ctx = tw.AlgebraContext.symmetric(n)
        basis = set(tw.hat_subalgebra_basis(ctx))
        for d1 in basis:
            for d2 in basis:
                r = dg.compose(d1, d2)
                if r is not None and r[0] not in basis:
                    return False
        return True

    def corners(n):
        ctx = tw.AlgebraContext.symmetric(n)
        for word in itertools.product(range(2), repeat=n):
            r = word.count(0)
            if len(tw.pierce_corner(ctx, word)) != tw.catalan(r) * tw.catalan(n - r):
                return False
        return True

    ctx2 = tw.AlgebraContext.symmetric(2)
    return [
        _check("dim of equal-content subalgebra = sum binom^2 C(r) C(s)", range(n_max + 1),
               lambda n: len(tw.hat_subalgebra_basis(tw.AlgebraContext.symmetric(n))) == tw.hat_dimension(n)),
        Check("equal-content subalgebra at n=2 is 8 < 10",
              len(tw.hat_subalgebra_basis(ctx2)) == 8 < len(ctx2.basis())),
        _check("equal-content subalgebra closed under products", range(n_max + 1), closed),
        Check("corner at word (0,1), n=2, has dim 1", len(tw.pierce_corner(ctx2, (0, 1))) == 1),
        _check("corners e A e have dim C(r) C(s)", range(1, n_max + 1), corners),
    ]


def idempotent_completeness(n_max: int = 4) -> list[Check]:
    cases = [(n, i) for n in range(2, n_max + 1) for i in range(1, n)]

    def complete(case):
        n, i = case
        ctx = tw.AlgebraContext.symmetric(n)
        P = list(tw.idempotents_S2(ctx, i).values())
        one = tw.identity(ctx)
        total = P[0]
        for p in P[1:]:
            total = total + p
        if total != one:
            return False
        for a, pa in enumerate(P):
            for b, pb in enumerate(P):
                prod = pa * pb
                if (a == b and prod != pa) or (a != b and not prod.is_zero()):
                    return False
        return True

    return [_check("five idempotents are complete and orthogonal", cases, complete)]


def braid_relations() -> list[Check]:
    ctx3 = inv.braid_context(3)
    ctx4 = inv.braid_context(4)
    s = lambda c, i, e=1: tw.braid_generator(c, i, e, Q=Q)  # noqa: E731
    one3 = tw.identity(ctx3)
    return [
        _check("sigma_i sigma_i^-1 = 1 in T^{S(2)}(3)", [1, 2],
               lambda i: s(ctx3, i) * s(ctx3, i, -1) == one3 and s(ctx3, i, -1) * s(ctx3, i) == one3),
        Check("sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2",
              s(ctx3, 1) * s(ctx3, 2) * s(ctx3, 1) == s(ctx3, 2) * s(ctx3, 1) * s(ctx3, 2)),
        Check("sigma_1 sigma_3 = sigma_3 sigma_1 in T^{S(2)}(4)",
              s(ctx4, 1) * s(ctx4, 3) == s(ctx4, 3) * s(ctx4, 1)),
        Check("Temperley-Lieb image: (u+t)^2 = 2 delta (u+t)",
              tw.tl_embed(ctx3, 1) * tw.tl_embed(ctx3, 1) == tw.tl_embed(ctx3, 1).scale(2 * DELTA_SPECIAL)),
        Check("Temperley-Lieb image: U1 U2 U1 = U1",
              tw.tl_embed(ctx3, 1) * tw.tl_embed(ctx3, 2) * tw.tl_embed(ctx3, 1) == tw.tl_embed(ctx3, 1)),
    ]


def bimodule_spanning(n_values=(1, 2)) -> list[Check]:
    def spans(n):
        ctx = tw.AlgebraContext.symmetric(n)
        target = len(tw.symmetric_basis(ctx.with_n(n + 1)))
        return tw.span_rank(tw.bimodule_spanning_set(ctx)) == target

    return [_check("T(n) + sum T(n) g T(n) spans T^{S(2)}(n+1)", list(n_values), spans)]


def symmetric_halving(n_max: int = 4) -> list[Check]:
    return [_check("swap-fixed algebra has half the dimension", range(1, n_max + 1),
                   lambda n: 2 * len(tw.symmetric_basis(tw.AlgebraContext.symmetric(n)))
                   == len(dg.enumerate_basis(n, 2)))]


# bratteli ----------------------------------------------------------------

def _graph_rows(n_max: int) -> dict[int, list]:
    rows = {}
    for n, entries in br.graph_table(br.tower_graph("F-sym", n_max)).items():
        row, pending = [], []
        for label, d in entries:
            if label and label[-1] in ("+", "-"):
                pending.append(d)
                if len(pending) == 2:
                    row.append(tuple(pending))
                    pending = []
            else:
                row.append(d)
        rows[n] = row
    return rows


def folded_pascal(n_max: int = 8) -> list[Check]:
    folded = br.folded_diagram_S2(n_max)
    graph = _graph_rows(n_max)
    tensor_rows = wr.tensor_power_rows(n_max)
    levels = range(n_max + 1)
    return [
        _check("folded dimensions reproduce the reference rows", levels,
               lambda n: folded[n] == FOLDED_PASCAL_ROWS[n]),
        _check("symmetric graph levels reproduce the reference rows", levels,
               lambda n: graph[n] == FOLDED_PASCAL_ROWS[n]),
        _check("tensor-power multiplicities reproduce the reference rows", levels,
               lambda n: tensor_rows[n] == FOLDED_PASCAL_ROWS[n]),
        _check("sum of squares is half of dim F^(2)(n)", range(1, n_max + 1),
               lambda n: 2 * sum(d * d for d in br.flatten_row(folded[n]))
               == len(dg.enumerate_basis(n, 2, dg.PERMUTATION))),
    ]


def generating_functions(n_max: int = 6) -> list[Check]:
    cases = [(c, n, k) for c in (1, 2) for n in range(n_max + 1) for k in br.cell_labels(n, c)]
    completeness = [(2, n) for n in range(5)] + [(3, n) for n in range(4)]
    return [
        _check("generating function coefficients equal walk counts", cases,
               lambda t: br.generating_function_coeff(t[1], t[2]) == br.count_undirected_paths(t[0], t[2], t[1])),
        _check("sum of squared cell dimensions = dim T^(c)(n)", completeness,
               lambda cn: sum(d * d for d in br.cell_dimensions_T(cn[1], cn[0]).values())
               == len(dg.enumerate_basis(cn[1], cn[0]))),
    ]


# ybe ---------------------------------------------------------------------

def r_matrix_suite() -> list[Check]:
    names = {
        "YBE": ybe.check_YBE,
        "unit": ybe.check_unit,
        "commutation": ybe.check_commutation,
        "crossing": ybe.check_crossing_symmetry,
        "braid-limit": ybe.check_braid_limit,
        "idempotent-form": ybe.check_idempotent_form,
    }
    return [Check(name, bool(fn())) for name, fn in names.items()]


def r_matrix_extras() -> list[Check]:
    closure = ybe.braid_subalgebra_crossing_closed()
    return [
        Check("YBE with uncleared rational coefficients", ybe.check_YBE(ybe.r_coefficients)),
        Check("idempotents are eigenvectors", ybe.check_eigenvectors()),
        Check("eigenvalues pairwise distinct", ybe.eigenvalues_distinct()),
        Check("(q - q^-1)^2 R has Laurent coefficients", ybe.check_clears_to_laurent()),
        Check("R products stay swap-invariant", ybe.check_symmetric_products()),
        Check("braid subalgebra not closed under crossing", not closure["closed"], detail=closure),
    ]


# markov ------------------------------------------------------------------

def _all_words(n: int, length: int):
    letters = [s * i for i in range(1, n) for s in (1, -1)]
    for k in range(length + 1):
        for w in itertools.product(letters, repeat=k):
            yield inv.BraidWord(n, w)


def expectation_rules(n_values=(1, 2)) -> list[Check]:
    cases = []
    for n in n_values:
        span = tw.symmetric_basis(inv.braid_context(n))
        cases.extend((kind, a, b) for kind in "esut" for a in span for b in span)

    def agree(case):
        kind, a, b = case
        return inv.diagrammatic_expectation(kind, a, b) == inv.rule_based_expectation(kind, a, b)

    checks = [
        _check(f"closure of a {k}_n b matches its rule", [c for c in cases if c[0] == k], agree)
        for k in "sut"
    ]
    checks.append(_check("closure of a e_n b matches its rule", [c for c in cases if c[0] == "e"], agree))
    one = [inv.braid_context(n) for n in n_values]
    checks.append(_check("closure of the identity is 2 delta", one,
                         lambda ctx: inv.partial_closure(tw.identity(ctx.with_n(ctx.n + 1)))
                         == tw.identity(ctx).scale(2 * ctx.delta)))
    return checks


def markov_suite(word_length: int = 4) -> list[Check]:
    ctx2 = inv.braid_context(2)
    basis = [tw.element(ctx2, d) for d in ctx2.basis()]
    pairs = [(a, b) for a in basis for b in basis]

    def norm(w):
        return inv.link_invariant_trace(w).normalized

    conj_cases = []
    for n in (2, 3):
        for w in _all_words(n, word_length):
            gens = [s * i for i in range(1, n) for s in (1, -1)]
            conj_cases.extend((w, inv.BraidWord(n, (g,) + w.letters + (-g,))) for g in gens)
            conj_cases.extend((w, w.rotate(k)) for k in range(1, len(w.letters)))
    stab_cases = [(w, w.stabilize(s)) for n in (1, 2, 3) for w in _all_words(n, word_length) for s in (1, -1)]
    return [
        Check("epsilon(a sigma^+-1 b) = -q^{+-4} a b", inv.check_markov(2)),
        _check("trace(ab) = trace(ba) on T^(2)(2)", pairs,
               lambda ab: inv.closure_trace(ab[0] * ab[1]) == inv.closure_trace(ab[1] * ab[0])),
        Check("trace tower compatibility", inv.check_tower_compatibility(2)),
        _check("normalized invariant under conjugation", conj_cases, lambda p: norm(p[0]) == norm(p[1])),
        _check("normalized invariant under stabilization", stab_cases, lambda p: norm(p[0]) == norm(p[1])),
    ]


def oracle_crosscheck() -> list[Check]:
    report = inv.calibrate_and_crosscheck(inv.STANDARD_BRAIDS)
    checks = [Check(f"trace = state sum: {c.name}", c.ok,
                    None if c.ok else f"{format_scalar(c.calibrated_trace)} != {format_scalar(c.state_sum)}")
              for c in report.checks]
    checks.append(Check("calibration constants", simplify(report.crossing_factor - q).is_zero()
                        and simplify(report.Q_squared - q ** 2).is_zero(),
                        detail={"crossing_factor": format_scalar(report.crossing_factor),
                                "Q_squared": format_scalar(report.Q_squared),
                                "Q_star": format_scalar(report.Q_star),
                                "note": report.sign_note}))
    extra = inv.calibrate_and_crosscheck(inv.EXTRA_BRAIDS)
    checks.append(_check("trace = state sum on further braids", extra.checks, lambda c: c.ok))
    files = [name for name in ("unknot", "unlink", "hopf", "trefoil", "unknot-curl", "figure-eight")]
    words = {**inv.STANDARD_BRAIDS, **inv.EXTRA_BRAIDS}
    checks.append(_check("bundled PD codes agree with braid closures", files,
                         lambda name: inv.dilute_state_sum(inv.load_example(name))
                         == inv.dilute_state_sum(inv.braid_closure_pd(words[name]))))
    return checks


# wreath ------------------------------------------------------------------

def wreath_suite(n_max: int = 3) -> list[Check]:
    labels = ["+", "-"] + list(range(n_max + 2))
    ns = list(range(1, n_max + 1))
    decomps = {n: wr.verify_decomposition(n) for n in ns}
    return [
        _check("group relations and antipode in every representation", labels,
               lambda lbl: all(wr.relation_checks(wr.rep(lbl)).values())),
        _check("relations in tensor products", ns,
               lambda n: all(wr.relation_checks_basic(wr.tensor(wr.rep(1), wr.rep(n))).values())),
        _check("rho^(n) irreducible for n >= 1", range(1, n_max + 2),
               lambda n: wr.is_irreducible(wr.rep(n))),
        Check("rho^(0) splits", wr.commutant_dimension(wr.rep(0)) == 2),
        _check("rho^(1) (x) rho^(n): upper subspace carries rho^(n+1)", ns,
               lambda n: decomps[n].upper_is_next),
        _check("rho^(1) (x) rho^(n): lower subspace carries rho^(n-1)", ns,
               lambda n: decomps[n].lower_is_previous),
        _check("rho^(1) (x) rho^(n): characters of rho^(n-1) + rho^(n+1)", ns,
               lambda n: decomps[n].characters_match),
        _check("rho^(1) (x) rho^(n): lower subspace carries x-twisted rho^(n-1)", ns,
               lambda n: decomps[n].twisted_ok),
        _check("balanced normalization: decomposition exact", ns,
               lambda n: wr.verify_decomposition(n, wr.BALANCED).literal_ok),
        _check("rho^(1) (x) rho_+- = rho^(1), by basis and character", ["+", "-"],
               lambda s: wr.sign_tensor(s).ok),
    ]


SUITES: dict[str, list[Callable[[], list[Check]]]] = {
    "algebra": [dimension_table, multinomial_blocks, hat_subalgebra, idempotent_completeness,
                braid_relations, bimodule_spanning, symmetric_halving],
    "bratteli": [folded_pascal, generating_functions],
    "ybe": [r_matrix_suite],
    "ybe-properties": [r_matrix_extras],
    "markov": [expectation_rules, markov_suite, oracle_crosscheck],
    "wreath": [wreath_suite],
}


def run_suite(name: str) -> Report:
    if name == "all":
        start = time.perf_counter()
        checks = [c for s in SUITES for c in run_suite(s).checks]
        return Report("all", checks, time.perf_counter() - start)
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    start = time.perf_counter()
    checks = [c for fn in SUITES[name] for c in fn()]
    return Report(name, checks, time.perf_counter() - start)
