import io
import subprocess
import sys

import pytest

from idealkit.script import (
    Evaluator, ScriptRuntimeError, ScriptSyntaxError, compare, evaluate, format_script,
    parse, run_source, tokenize,
)
from idealkit.script.cli import main
from idealkit.script.nodes import Assign, BinOp, Call, Name, RingDecl
from idealkit.script.golden import parse_ideal_text, split_top_level

FAST = ["bezout", "blowups", "classic_blowup", "distinguished_open_sets", "fano_schemes",
        "fields_of_definition", "flat_families", "multiplicity"]


def run_cli(*args):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in args], out, err)
    return code, out.getvalue(), err.getvalue()


# lexer ---------------------------------------------------------------------

def test_tokens_and_comments():
    toks = tokenize("S = QQ[x, y]; -- a comment\n")
    assert [t.text for t in toks if t.kind != "EOF"] == ["S", "=", "QQ", "[", "x", ",", "y", "]", ";", "\n"]
    assert toks[2].line == 1 and toks[2].col == 5


def test_newlines_inside_brackets_and_after_operators():
    toks = tokenize("f(1,\n 2) +\n 3\nx")
    assert [t.kind for t in toks].count("NEWLINE") == 2


@pytest.mark.parametrize("src,line,col", [
    ("x = (1", 1, 5),
    ("a = 1\nb = $", 2, 5),
    ("a = 1\n\n  b = 1 +* 2", 3, 10),
    ('s = "abc', 1, 5),
    ("x = 1)", 1, 6),
])
def test_syntax_errors_carry_positions(src, line, col):
    with pytest.raises(ScriptSyntaxError) as info:
        parse(src)
    assert (info.value.line, info.value.col) == (line, col)


# parser ----------------------------------------------------------------------

def test_ring_declaration():
    stmt = parse("S = QQ[x, y, z]").statements[0]
    assert isinstance(stmt.body, Assign)
    decl = stmt.body.value
    assert isinstance(decl, RingDecl) and decl.variables == ["x", "y", "z"]
    decl = parse("R = QQ[t, y_0..y_8, a..i, MonomialOrder => Eliminate 10]").statements[0].body.value
    assert decl.order == "Eliminate" and decl.block == 10


def test_juxtaposition_is_right_associative():
    body = parse("trim phi I").statements[0].body
    assert isinstance(body, Call) and body.func == Name("trim")
    assert isinstance(body.args[0], Call) and body.args[0].func == Name("phi")


def test_precedence():
    body = parse("a + b * c^2 == d").statements[0].body
    assert isinstance(body, BinOp) and body.op == "=="
    assert body.left.op == "+" and body.left.right.op == "*"


def test_silencing():
    script = parse("a = 1;\nb = 2\n")
    assert [s.silent for s in script.statements] == [True, False]


def test_round_trip_corpus(corpus_dir):
    for path in sorted(corpus_dir.glob("*.m2l")):
        script = parse(path.read_text())
        assert parse(format_script(script)) == script, path.name


# evaluator ---------------------------------------------------------------------

def test_boolean_and_empty():
    assert run_source("S = QQ[x]; x^2+1 == x^2+1") == "true\n"
    assert evaluate("") == []


def test_multiplicity_example():
    src = "S = QQ[x, y, z];\nI = ideal(x^5+y^3+z^3, x^3+y^5+z^3, x^3+y^3+z^5);\ndegree(I : saturate(I))\n"
    assert run_source(src) == "27\n"


def test_records_know_statement_numbers():
    recs = evaluate("S = QQ[x];\nI = ideal(x^2);\ndegree I\n")
    assert [(r.index, r.line, r.text) for r in recs] == [(3, 3, "2")]


def test_runtime_errors():
    with pytest.raises(ScriptRuntimeError, match="unknown identifier") as info:
        evaluate("S = QQ[x];\nideal(x, y)")
    assert info.value.line == 2
    with pytest.raises(ScriptRuntimeError, match="expects"):
        evaluate("S = QQ[x];\nsaturate(ideal x, x, x, x)")
    with pytest.raises(ScriptRuntimeError, match="division by zero"):
        evaluate("S = QQ[x];\nx/0")


def test_evaluation_stops_at_first_error():
    seen = []
    ev = Evaluator(on_statement=lambda k, stmt, secs: seen.append(k))
    with pytest.raises(ScriptRuntimeError):
        ev.run(parse("a = 1;\nb = nope(2);\nc = 3;"))
    assert seen == [1]


def test_use_rebinds_variables():
    out = run_source("R = QQ[x, y];\nS = QQ[x, z];\nuse R;\nring x\n")
    assert out == "R\n"


def test_subscripts_and_ranges():
    out = run_source("S = QQ[y_0..y_3];\ny_2 + y_0\n(gens ideal(y_1, y_3))_(0, 1)\n")
    assert out.splitlines() == ["y_0 + y_2", "y_3"]


# golden files ----------------------------------------------------------------

def test_split_top_level():
    assert split_top_level("a(b, c), d") == ["a(b, c)", "d"]


def test_golden_compares_ideals_by_equality():
    recs = evaluate("S = QQ[x, y];\nideal(x + y, y)\n")
    assert compare(recs, "ideal (x, y)\n") == []
    assert compare(recs, "ideal (x, y^2)\n")
    I = parse_ideal_text("ideal 1", recs[0].value.ring)
    assert I.is_unit()


def test_golden_count_mismatch():
    recs = evaluate("1\n2\n")
    assert compare(recs, "1\n") != []
    assert compare(recs, "1\n3\n") != []


# CLI -------------------------------------------------------------------------

@pytest.mark.parametrize("name", FAST)
def test_cli_corpus_checks(corpus_dir, name):
    code, out, err = run_cli(corpus_dir / f"{name}.m2l", "--check", corpus_dir / f"{name}.expected")
    assert code == 0, err
    assert out


def test_cli_bezout_prints_results(corpus_dir):
    code, out, _ = run_cli(corpus_dir / "bezout.m2l")
    assert code == 0
    assert out.splitlines()[-3:] == ["true", "4", "5"]


def test_cli_mismatch(tmp_path, corpus_dir):
    bad = tmp_path / "bad.expected"
    bad.write_text("27\n28\n")
    code, _, err = run_cli(corpus_dir / "multiplicity.m2l", "--check", bad)
    assert code == 1 and "mismatch" in err


def test_cli_parse_error(tmp_path):
    src = tmp_path / "broken.m2l"
    src.write_text("S = QQ[x];\nf = (x + 1\n")
    code, _, err = run_cli(src)
    assert code == 2 and "broken.m2l:" in err and "syntax error" in err


def test_cli_runtime_error(tmp_path):
    src = tmp_path / "oops.m2l"
    src.write_text("S = QQ[x];\nideal(x, q)\n")
    code, _, err = run_cli(src)
    assert code == 3 and "oops.m2l:2:" in err and "unknown identifier" in err


def test_cli_missing_files(tmp_path, corpus_dir):
    missing = tmp_path / "nowhere.m2l"
    code, _, err = run_cli(missing)
    assert code == 4 and str(missing) in err
    code, _, err = run_cli(corpus_dir / "multiplicity.m2l", "--check", missing)
    assert code == 4 and str(missing) in err


def test_cli_budget_warning(corpus_dir):
    code, _, err = run_cli(corpus_dir / "multiplicity.m2l", "--max-seconds", "0")
    assert code == 0 and "warning" in err


def test_cli_verbose_gb(corpus_dir):
    code, _, err = run_cli(corpus_dir / "multiplicity.m2l", "--verbose-gb")
    assert code == 0 and "gb:" in err


def test_console_entry_point(corpus_dir):
    proc = subprocess.run([sys.executable, "-m", "idealkit.script", str(corpus_dir / "bezout.m2l")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "5"


def test_output_is_deterministic(corpus_dir):
    path = corpus_dir / "fano_schemes.m2l"
    runs = {run_cli(path)[1] for _ in range(3)}
    assert len(runs) == 1


# generated syntax trees ------------------------------------------------------

from hypothesis import given, settings, strategies as st  # noqa: E402

from idealkit.script.nodes import (  # noqa: E402
    Index, ListExpr, Number, Range, Script, Sequence, Statement, String, UnaryOp,
)
from idealkit.script.printer import format_expr  # noqa: E402

names = st.sampled_from(["a", "b", "f", "phi", "x1", "gens"]).map(Name)
leaves = st.one_of(names, st.integers(0, 10**30).map(Number),
                   st.text("ab \"\\\n", max_size=4).map(String))


def _extend(inner):
    return st.one_of(
        st.builds(BinOp, st.sampled_from(["+", "-", "*", "/", "**", "^", "==", "|", "||", ":"]), inner, inner),
        st.builds(UnaryOp, st.just("-"), inner),
        st.builds(Range, inner, inner),
        st.builds(Call, names, st.lists(inner, max_size=3)),
        st.builds(Index, inner, st.one_of(names, st.integers(0, 9).map(Number))),
        st.builds(ListExpr, st.lists(inner, max_size=3)),
        st.builds(Sequence, st.lists(inner, min_size=2, max_size=3)),
    )


exprs = st.recursive(leaves, _extend, max_leaves=12)


@settings(max_examples=300, deadline=None)
@given(exprs)
def test_printer_round_trips_generated_trees(tree):
    text = format_expr(tree)
    assert parse(text).statements[0].body == tree, text


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(exprs, st.booleans()), min_size=1, max_size=4))
def test_script_round_trip(stmts):
    script = Script([Statement(e, silent) for e, silent in stmts])
    assert parse(format_script(script)) == script
