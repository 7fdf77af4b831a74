import os
from fractions import Fraction

import pytest

from univalg.cli import main
from univalg.formats import (
    ParseError,
    parse_algebra_text,
    parse_module_text,
    parse_morphism_text,
    render_algebra,
    render_matrix_rep_data,
    render_module,
    render_morphism,
)
from univalg.lie import LieAlgebra, LieModule, LinearMap, sl2

FIX = os.path.join(os.path.dirname(__file__), "fixtures")
ONE = Fraction(1)


def fx(name: str) -> str:
    return os.path.join(FIX, name)


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


# ---------------------------------------------------------------------------
# File format round trips
# ---------------------------------------------------------------------------


def test_algebra_round_trip():
    L = sl2()
    text = render_algebra(L)
    back = parse_algebra_text(text)
    assert back.dim == L.dim and back.table == L.table and back.name == L.name


def test_module_round_trip():
    L = sl2()
    M = LieModule.adjoint(L)
    text = render_module(M)
    back = parse_module_text(text, algebra=L)
    assert back.dim == M.dim and back.action == M.action and back.name == M.name


def test_matrix_rep_round_trip():
    with open(fx("counit3.rep")) as fh:
        text = fh.read()
    data = parse_module_text(text, "counit3.rep")
    again = parse_module_text(render_matrix_rep_data(data))
    assert again.dim == data.dim and again.entries == data.entries
    assert again.name == data.name and again.over == data.over


def test_morphism_round_trip():
    f = LinearMap.from_matrix([[ONE, Fraction(1, 2)], [Fraction(-3), ONE]])
    back = parse_morphism_text(render_morphism(f))
    assert back.mat() == f.mat()


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as exc:
        parse_algebra_text("algebra x\ndim 2\nbracket 1 2: 3:1\n", "bad.alg")
    assert exc.value.line_no == 3
    with pytest.raises(ParseError):
        parse_algebra_text("algebra x\nbracket 1 2: 1:1\n")  # dim missing
    with pytest.raises(ParseError):
        parse_morphism_text("morphism f\nrows 1\ncols 2\nrow 1: 1\n")


def test_duplicate_bracket_entry_rejected():
    with pytest.raises(ParseError):
        parse_algebra_text("dim 2\nbracket 1 2: 1:1\nbracket 1 2: 1:2\n")


# ---------------------------------------------------------------------------
# Subcommands and exit codes
# ---------------------------------------------------------------------------


def test_univalg_golden_pass(capsys):
    code, out = run(capsys, "univalg", fx("sl2.alg"), fx("sl2.alg"), "--golden")
    assert code == 0
    assert "golden-ideal-match pass" in out


def test_univalg_deterministic_output(capsys, tmp_path):
    p1, p2 = tmp_path / "a.txt", tmp_path / "b.txt"
    assert main(["univalg", fx("sl2.alg"), fx("sl2.alg"), "--golden",
                 "--out", str(p1)]) == 0
    assert main(["univalg", fx("sl2.alg"), fx("sl2.alg"), "--golden",
                 "--out", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_univalg_degree_probe_abelian(capsys):
    code, out = run(capsys, "univalg", fx("abelian2.alg"), fx("abelian2.alg"),
                    "--degree-probe", "2")
    assert code == 0
    # 4 variables, 6 binomial relations; counts C(4+d, d) of a 2-var free part?
    assert "standard-monomials degree<=0: 1" in out
    assert "standard-monomials degree<=2:" in out


def test_univmod_abelian_relation(capsys):
    code, out = run(capsys, "univmod", fx("abelian1.alg"), fx("abelian1.alg"),
                    fx("scaling1.mod"), fx("scaling5.mod"))
    assert code == 0
    assert "rank=1" in out
    assert "status pass" in out and "status fail" not in out


def test_univliemod_runs(capsys):
    code, out = run(capsys, "univliemod", fx("abelian1.alg"), fx("abelian1.alg"),
                    fx("counit1.rep"), fx("scaling1.mod"))
    assert code == 0
    assert "rank=1" in out
    assert "relation 1,1,1:" in out
    assert "tau w1:" in out


def test_factorize_amod_round_trip(capsys):
    # f: Z -> U (x) X must be equivariant; with Z trivial and U (x) X the
    # adjoint module the only such morphism is zero.
    code, out = run(capsys, "factorize", "amod", fx("sl2.alg"), fx("sl2.alg"),
                    fx("adjoint_sl2.mod"), fx("trivial1_sl2.mod"),
                    fx("counit3.rep"), fx("zero3x1.mor"))
    assert code == 0
    assert "diagram-commutes pass" in out
    assert "round-trip pass" in out
    assert "status pass" in out


def test_check_lie_pass(capsys):
    code, out = run(capsys, "check", "lie", fx("sl2.alg"))
    assert code == 0
    assert "status pass" in out


def test_check_lie_corrupted_reports_violation(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text("algebra bad\ndim 2\nbracket 1 2: 1:1\n")  # not antisymmetric
    code, out = run(capsys, "check", "lie", str(bad))
    assert code == 1
    assert "status fail" in out
    assert "antisymmetry" in out


def test_check_module_and_rep(capsys):
    code, out = run(capsys, "check", "module", fx("sl2.alg"), fx("adjoint_sl2.mod"))
    assert code == 0
    code, out = run(capsys, "check", "rep", fx("sl2.alg"), fx("sl2.alg"),
                    fx("counit3.rep"))
    assert code == 0


def test_check_bialgebra(capsys):
    code, out = run(capsys, "check", "bialgebra", fx("abelian2.alg"))
    assert code == 0
    assert "bialgebra-laws" in out


def test_check_coalgebra_and_comodule_abelian(capsys):
    code, out = run(capsys, "check", "coalgebra", fx("abelian1.alg"),
                    fx("scaling1.mod"))
    assert code == 0
    assert "coalgebra-laws" in out and "status fail" not in out
    code, out = run(capsys, "check", "comodule", fx("abelian1.alg"),
                    fx("scaling1.mod"))
    assert code == 0


def test_check_adjunction(capsys):
    code, out = run(capsys, "check", "adjunction", fx("sl2.alg"), fx("sl2.alg"),
                    fx("adjoint_sl2.mod"), fx("trivial1_sl2.mod"),
                    fx("counit3.rep"), fx("zero3x1.mor"))
    assert code == 0
    assert "adjunction-round-trip" in out


def test_coalgebra_subcommand(capsys):
    code, out = run(capsys, "coalgebra", fx("abelian1.alg"), fx("scaling1.mod"))
    assert code == 0
    assert "delta y[1,1]:" in out
    assert "epsilon y[1,1]: 1" in out
    assert "status fail" not in out


def test_missing_file_exit_2(capsys):
    code, _ = run(capsys, "univalg", fx("nope.alg"), fx("sl2.alg"))
    assert code == 2


def test_parse_error_exit_2(capsys, tmp_path):
    garbled = tmp_path / "x.alg"
    garbled.write_text("dim two\n")
    code, _ = run(capsys, "check", "lie", str(garbled))
    assert code == 2


def test_budget_exit_3_flag(capsys):
    code, _ = run(capsys, "univalg", fx("sl2.alg"), fx("sl2.alg"), "--budget", "1")
    assert code == 3


def test_budget_exit_3_env(capsys, monkeypatch):
    monkeypatch.setenv("UNIVALG_BUDGET", "1")
    code, _ = run(capsys, "univalg", fx("sl2.alg"), fx("sl2.alg"))
    assert code == 3


def test_out_writes_file(capsys, tmp_path):
    target = tmp_path / "report.txt"
    code = main(["check", "lie", fx("sl2.alg"), "--out", str(target)])
    assert code == 0
    assert "status pass" in target.read_text()
    assert capsys.readouterr().out == ""


def test_lex_order_accepted(capsys):
    code, out = run(capsys, "univalg", fx("abelian1.alg"), fx("abelian1.alg"),
                    "--order", "lex")
    assert code == 0
