"""Command-line interface: ``dilute {dim,basis,mul,verify,bratteli,invariant,genfun}``.

Exit status is 0 on success, 1 when a verification check fails (or an
invariant does not match its oracle), and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import bratteli as br
from . import diagrams as dg
from . import invariant as inv
from . import towers as tw
from .scalars import DELTA_SPECIAL, as_scalar, delta, format_scalar, parse_scalar, simplify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# largest strand count enumerated without --unsafe-bound, per colour count
DEFAULT_BOUNDS = {1: 8, 2: 5, 3: 3}


class UsageError(Exception):
    pass


def _bound(c: int) -> int:
    return DEFAULT_BOUNDS.get(c, 2)


def _check_bound(n: int, c: int, unsafe: bool) -> None:
    if n < 0 or c < 1:
        raise UsageError("need --n >= 0 and --colours >= 1")
    if not unsafe and n > _bound(c):
        raise UsageError(f"n = {n} exceeds the default bound {_bound(c)} for {c} colours; "
                         "pass --unsafe-bound to override")


def _kind(name: str) -> str:
    return {"dilute-TL": dg.DILUTE_TL, "tl": dg.DILUTE_TL, "permutation": dg.PERMUTATION,
            "F": dg.PERMUTATION, "T": dg.DILUTE_TL}[name]


def _formula_dim(n: int, c: int, kind: str) -> int:
    if kind == dg.PERMUTATION:
        return sum(tw.multinomial(n, p) ** 2 for p in br._compositions(n, c))
    return br.dim_formula_T(n, c)


# subcommands -------------------------------------------------------------

def cmd_dim(args) -> int:
    kind = _kind(args.kind)
    _check_bound(args.n, args.colours, args.unsafe_bound)
    enumerated = len(dg.enumerate_basis(args.n, args.colours, kind))
    formula = _formula_dim(args.n, args.colours, kind)
    agree = enumerated == formula
    if args.json:
        print(json.dumps({"n": args.n, "colours": args.colours, "kind": kind,
                          "enumerated": enumerated, "formula": formula, "agree": agree}))
    else:
        mark = "=" if agree else "!="
        print(f"dim {kind} n={args.n} c={args.colours}: {enumerated} {mark} {formula} (formula)"
              f" {'ok' if agree else 'MISMATCH'}")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_basis(args) -> int:
    kind = _kind(args.kind)
    _check_bound(args.n, args.colours, args.unsafe_bound)
    basis = dg.enumerate_basis(args.n, args.colours, kind)
    print(json.dumps([d.to_json() for d in basis], indent=None if args.compact else 1))
    return EXIT_OK


_TOKEN = re.compile(r"\s*(?:(\[[^\]]*\])|([efsut])(\d+)|(id)\b|(\d+)|([+\-*()]))")


def parse_expression(text: str, ctx: tw.AlgebraContext) -> tw.AlgebraElement:
    """Generator expressions such as ``e1*u2 + s1`` or ``[q^2] e1 - [1/delta] u1``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise UsageError(f"cannot parse expression at {text[pos:]!r}")
        pos = m.end()
        scal, gen, idx, ident, num, op = m.groups()
        if scal is not None:
            tokens.append(("scalar", parse_scalar(scal[1:-1])))
        elif gen is not None:
            tokens.append(("gen", (gen, int(idx))))
        elif ident is not None:
            tokens.append(("id", None))
        elif num is not None:
            tokens.append(("scalar", as_scalar(int(num))))
        else:
            tokens.append(("op", op))
    tokens.append(("end", None))
    k = 0

    def peek():
        return tokens[k]

    def take():
        nonlocal k
        k += 1
        return tokens[k - 1]

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        out = term().scale(sign)
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            out = out + t if op == "+" else out - t
        return out

    def term():
        out = factor()
        while True:
            if peek() == ("op", "*"):
                take()
            elif peek()[0] not in ("scalar", "gen", "id") and peek() != ("op", "("):
                return out
            out = out * factor()

    def factor():
        kind, val = take()
        if kind == "scalar":
            return tw.identity(ctx).scale(val)
        if kind == "id":
            return tw.identity(ctx)
        if kind == "gen":
            name, i = val
            try:
                return tw.generator(ctx, name, i)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        if (kind, val) == ("op", "("):
            out = expr()
            if take() != ("op", ")"):
                raise UsageError("missing ')'")
            return out
        if kind == "end":
            raise UsageError("expression ends unexpectedly")
        raise UsageError(f"unexpected token {val!r}")

    result = expr()
    if peek()[0] != "end":
        raise UsageError(f"trailing input near token {peek()[1]!r}")
    return result


def cmd_mul(args) -> int:
    _check_bound(args.n, 2, args.unsafe_bound)
    loop = DELTA_SPECIAL if args.delta == "special" else delta
    ctx = tw.AlgebraContext.symmetric(args.n, loop)
    a = parse_expression(args.expression, ctx)
    if args.json:
        print(json.dumps(a.to_json()))
    elif a.is_zero():
        print("0")
    else:
        for d, s in sorted(a.coeffs.items()):
            print(f"{format_scalar(s)}\t{json.dumps(d.to_json())}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from . import verify

    report = verify.run_suite(args.suite)
    if args.json:
        print(json.dumps(report.to_json(), indent=1))
    else:
        print(report.table())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_bratteli(args) -> int:
    if args.tower in ("F-sym", "T-sym") and args.colours != 2:
        raise UsageError("the symmetric towers need --colours 2")
    if args.n < 0:
        raise UsageError("need --n >= 0")
    g = br.tower_graph(args.tower, args.n, args.colours)
    if args.format == "dot":
        print(g.to_dot(args.tower.replace("-", "_")))
    elif args.format == "json":
        print(br.graph_json(g))
    else:
        for n, row in br.graph_table(g).items():
            cells = "  ".join(f"{br._label(lbl)}:{d}" for lbl, d in row)
            print(f"{n}: {cells}   (sum of squares {sum(d * d for _, d in row)})")
    return EXIT_OK


def _load_pd(spec: str) -> inv.PDCode:
    path = Path(spec)
    if not path.exists():
        candidate = inv.DATA_DIR / path.name
        if not candidate.exists():
            candidate = inv.DATA_DIR / f"{path.name}.json"
        if not candidate.exists():
            raise UsageError(f"PD file {spec!r} not found")
        path = candidate
    try:
        return inv.PDCode.load(path)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed PD code in {path}: {exc}") from None


def cmd_invariant(args) -> int:
    try:
        word = inv.BraidWord.parse(args.word, args.strands)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if word.n > 4 and not args.unsafe_bound:
        raise UsageError("more than 4 strands needs --unsafe-bound")
    Q = parse_scalar(args.Q)
    value = inv.link_invariant_trace(word, Q)
    out = value.to_json()
    status = EXIT_OK
    if args.pd:
        pd = _load_pd(args.pd)
        lam, Q2, Q_star, note = inv.calibrate()
        oracle = inv.dilute_state_sum(pd)
        calibrated = simplify(lam ** (-word.exponent_sum)
                              * inv.closure_trace(inv.braid_image(word, Q_star)))
        match = oracle == calibrated
        out.update({
            "oracle": format_scalar(oracle),
            "calibrated_trace": format_scalar(calibrated),
            "crossing_factor": format_scalar(lam),
            "Q_star": format_scalar(Q_star),
            "match": match,
        })
        status = EXIT_OK if match else EXIT_FAIL
    if args.json:
        print(json.dumps(out))
    else:
        for key, val in out.items():
            print(f"{key:>16}: {val}")
    return status


def cmd_genfun(args) -> int:
    _check_bound(args.n, args.colours, args.unsafe_bound)
    labels = br.cell_labels(args.n, args.colours)
    if args.label:
        try:
            want = tuple(int(t) for t in args.label.split(","))
        except ValueError:
            raise UsageError("--label takes comma-separated integers") from None
        if len(want) != args.colours:
            raise UsageError("--label needs one entry per colour")
        labels = [want]
    ok = True
    rows = []
    for k in labels:
        gf = br.generating_function_coeff(args.n, k)
        walks = br.count_undirected_paths(args.colours, k, args.n)
        ok &= gf == walks
        rows.append({"label": list(k), "generating_function": gf, "walks": walks, "agree": gf == walks})
    if args.json:
        print(json.dumps(rows))
    else:
        for r in rows:
            print(f"{tuple(r['label'])}: {r['generating_function']} {'=' if r['agree'] else '!='} {r['walks']}")
    return EXIT_OK if ok else EXIT_FAIL


# parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dilute", description="Dilute Temperley-Lieb algebras: "
                                "enumeration, verification and link invariants.")
    sub = p.add_subparsers(dest="command", required=True)

    def sizing(sp, colours=True):
        sp.add_argument("--n", type=int, required=True, help="number of strands")
        if colours:
            sp.add_argument("--colours", "--colors", type=int, default=2)
        sp.add_argument("--unsafe-bound", action="store_true", help="allow sizes above the default bound")

    sp = sub.add_parser("dim", help="enumerated and formula dimensions")
    sizing(sp)
    sp.add_argument("--kind", default="dilute-TL", choices=["dilute-TL", "permutation", "T", "F"])
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("basis", help="list basis diagrams as JSON")
    sizing(sp)
    sp.add_argument("--kind", default="dilute-TL", choices=["dilute-TL", "permutation", "T", "F"])
    sp.add_argument("--compact", action="store_true")
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("mul", help="evaluate a generator expression in T^{S(2)}(n)")
    sp.add_argument("expression", help="e.g. 'e1*u2 + s1' or '[q^2] e1 - u1'")
    sizing(sp, colours=False)
    sp.add_argument("--delta", choices=["generic", "special"], default="generic",
                    help="loop value: a free 'delta' or -q^2 - q^-2")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_mul)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", nargs="?", default="all",
                    choices=["algebra", "bratteli", "ybe", "ybe-properties", "markov", "wreath", "all"])
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bratteli", help="Bratteli diagrams of the towers")
    sp.add_argument("--tower", choices=["F", "F-sym", "T", "T-sym"], default="F-sym")
    sp.add_argument("--colours", "--colors", type=int, default=2)
    sp.add_argument("--n", type=int, default=8)
    sp.add_argument("--format", choices=["table", "json", "dot"], default="table")
    sp.set_defaults(func=cmd_bratteli)

    sp = sub.add_parser("invariant", help="closure trace of a braid word")
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("--word", default="", help="signed generator indices, e.g. '1 -2 1'")
    sp.add_argument("--Q", default="Q", help="value of the free parameter (default: symbolic Q)")
    sp.add_argument("--pd", help="PD code JSON (path or bundled name) for the state-sum oracle")
    sp.add_argument("--unsafe-bound", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_invariant)

    sp = sub.add_parser("genfun", help="generating-function cell dimensions versus walk counts")
    sizing(sp)
    sp.add_argument("--label", help="comma-separated (k_1,...,k_c); default: all labels")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_genfun)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"dilute: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
