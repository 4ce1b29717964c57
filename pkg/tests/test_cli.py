from __future__ import annotations

import json

import pytest

from dilute.cli import main, parse_expression
from dilute.scalars import q
from dilute.towers import AlgebraContext, generator


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dim_text(capsys):
    code, out, _ = run(capsys, "dim", "--n", "3")
    assert code == 0 and "70" in out


def test_dim_json(capsys):
    code, out, _ = run(capsys, "dim", "--n", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["enumerated"] == data["formula"] == 588


def test_dim_bound(capsys):
    code, _, err = run(capsys, "dim", "--n", "6")
    assert code == 2 and "--unsafe-bound" in err


def test_basis(capsys):
    code, out, _ = run(capsys, "basis", "--n", "1")
    assert code == 0 and len(json.loads(out)) == 2


def test_mul_json(capsys):
    code, out, _ = run(capsys, "mul", "e1*u2 + s1", "--n", "3", "--json")
    assert code == 0 and len(json.loads(out)) == 6


def test_mul_loop_factor(capsys):
    code, out, _ = run(capsys, "mul", "u1*u1", "--n", "2", "--delta", "special")
    assert code == 0 and "q^2" in out


@pytest.mark.parametrize("expr", ["e1 +", "e1 * (u1", "e3", "zz1", "e1 )"])
def test_mul_bad_expression(capsys, expr):
    code, _, err = run(capsys, "mul", expr, "--n", "2")
    assert code == 2 and err


def test_parse_expression_matches_algebra():
    ctx = AlgebraContext.symmetric(2)
    e, u = generator(ctx, "e", 1), generator(ctx, "u", 1)
    assert parse_expression("2*e1 - e1 u1", ctx) == e.scale(2) - e * u
    assert parse_expression("[q^2]*(e1+u1)", ctx) == (e + u).scale(q ** 2)


def test_verify_ybe(capsys):
    code, out, _ = run(capsys, "verify", "ybe", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and len(data["checks"]) == 6


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nope"])
    assert exc.value.code == 2


def test_bratteli_formats(capsys):
    code, out, _ = run(capsys, "bratteli", "--n", "2", "--format", "json")
    assert code == 0 and set(json.loads(out)) == {"0", "1", "2"}
    code, out, _ = run(capsys, "bratteli", "--n", "2", "--format", "dot")
    assert code == 0 and out.startswith("digraph")


def test_invariant_match(capsys):
    code, out, _ = run(capsys, "invariant", "--strands", "2", "--word", "1 1 1", "--pd", "trefoil", "--json")
    data = json.loads(out)
    assert code == 0 and data["match"] and data["Q_star"] == "-q"


def test_invariant_mismatch(capsys):
    code, out, _ = run(capsys, "invariant", "--strands", "2", "--word", "1 1", "--pd", "trefoil")
    assert code == 1 and "match: False" in out


def test_invariant_bad_word(capsys):
    code, _, err = run(capsys, "invariant", "--strands", "2", "--word", "3")
    assert code == 2 and err


def test_genfun(capsys):
    code, out, _ = run(capsys, "genfun", "--n", "3", "--colours", "2", "--json")
    assert code == 0 and json.loads(out)
