import io
import subprocess
import sys
from pathlib import Path

import pytest

from colored_circle import measures, symbols
from colored_circle.cli import run
from colored_circle.symbols import SymbolReport, SymbolViolation

DATA = Path(__file__).parent / "data"


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def pointed_file(tmp_path, sample_path):
    path = tmp_path / "sample.pointed"
    path.write_text(sample_path.read_text() + "x: 3\ny: 0\n")
    return str(path)


@pytest.mark.parametrize(
    "kind, colors, count",
    [("trees", "a,b,c", "32"), ("obs", "a,b,c", "32"), ("unoriented", "a,b,c,d", "25"), ("extended", "a,b", "36")],
)
def test_enumerate(kind, colors, count):
    assert call("enumerate", kind, "--colors", colors) == (0, count + "\n")


def test_enumerate_list():
    code, text = call("enumerate", "trees", "--colors", "a,b", "--list")
    assert code == 0
    assert text.startswith("4\n\ncolors: a b\n")
    assert text.count("colors:") == 4


def test_enumerate_errors(monkeypatch):
    monkeypatch.delenv("COLORED_CIRCLE_MAX_N", raising=False)
    assert call("enumerate", "trees", "--colors", "a,b,c,d,e,f")[0] == 2
    assert call("enumerate", "unoriented", "--colors", "a")[0] == 2
    assert call("enumerate", "trees")[0] == 2
    assert call("enumerate", "trees", "--colors", "a,a")[0] == 2


def test_eval(sample_path):
    assert call("eval", "--tree", str(sample_path), "--from", "b", "--to", "f", "--word", "cdf") == (
        0,
        "closed=1 recursive=1 product=1\n",
    )
    assert call("eval", "--tree", str(sample_path), "--from", "b", "--to", "f", "--word", "e")[1] == (
        "closed=0 recursive=0 product=0\n"
    )
    assert call("eval", "--tree", str(sample_path), "--from", "b", "--to", "f")[1] == (
        "closed=1 recursive=1 product=1\n"
    )


def test_eval_comma_word(sample_path):
    assert call("eval", "--tree", str(sample_path), "--from", "b", "--to", "f", "--word", "c,c")[1] == (
        "closed=1 recursive=1 product=1\n"
    )


def test_eval_pointed(pointed_file):
    code, text = call("eval", "--pointed", pointed_file, "--from", "b", "--to", "f", "--word", "cdf")
    assert (code, text) == (0, "line=1 closed=1 recursive=1 product=1\n")
    code, text = call("eval", "--pointed", pointed_file, "--from", "-inf", "--to", "+inf", "--word", "")
    assert (code, text) == (0, "line=1\n")
    code, text = call("eval", "--pointed", pointed_file, "--from=-inf", "--to=+inf", "--word", "c")
    assert code == 0 and text.startswith("line=")


def test_eval_errors(sample_path, capsys):
    tree = str(sample_path)
    assert call("eval", "--tree", tree, "--from", "-inf", "--to", "f")[0] == 2
    assert call("eval", "--tree", tree, "--from", "b", "--to", "z")[0] == 2
    assert call("eval", "--tree", tree, "--from", "b", "--to", "f", "--word", "xyz")[0] == 2
    assert call("eval", "--tree", str(DATA / "missing.tree"), "--from", "b", "--to", "f")[0] == 2
    assert "missing.tree" in capsys.readouterr().err


def test_eval_disagreement_exits_1(sample_path, monkeypatch):
    monkeypatch.setattr(measures, "eval_product", lambda *a: 7)
    code, text = call("eval", "--tree", str(sample_path), "--from", "b", "--to", "f", "--word", "cdf")
    assert code == 1
    assert text == "closed=1 recursive=1 product=7\n"


def test_classify(sample_path):
    tree = str(sample_path)
    assert call("classify", "--tree", tree, "--from", "b", "--to", "f", "--word", "ccdf") == (
        0,
        "good m=3 epsilon=-1\n",
    )
    assert call("classify", "--tree", tree, "--from", "b", "--to", "f", "--word", "dd")[1] == "repeated_negative\n"
    assert call("classify", "--tree", tree, "--from", "b", "--to", "f", "--word", "e")[1] == "not_monotonic\n"


def test_universal():
    code, text = call("universal", "--colors", "a,b", "--from", "a", "--to", "b", "--word", "a")
    assert code == 0
    rows = [line.split() for line in text.splitlines()]
    assert [r[0].split(":")[0] for r in rows] == ["0", "1", "2", "3"]
    assert sorted(int(r[1]) for r in rows) == [-1, -1, 0, 0]
    code, text = call("universal", "--colors", "a,b,c", "--from", "a", "--to", "c")
    assert [line.split()[1] for line in text.splitlines()] == ["1"] * 32


def test_verify_all_trees():
    code, text = call("verify", "symbols", "--colors", "a,b", "--all-trees")
    assert code == 0 and text.endswith("0 violations\n")
    code, text = call("verify", "measures", "--colors", "a,b", "--all-trees", "--max-len", "3")
    assert code == 0 and text.startswith("4 trees,") and text.endswith(" 0 violations\n")


def test_verify_single_tree(sample_path):
    code, text = call("verify", "measures", "--tree", str(sample_path), "--max-len", "2")
    assert code == 0 and text.startswith("1 trees,")


def test_verify_line(pointed_file):
    code, text = call("verify", "line", "--colors", "a,b", "--all-trees", "--max-len", "3")
    assert code == 0 and text.startswith("36 structures,") and text.endswith(" 0 violations\n")
    code, text = call("verify", "line", "--pointed", pointed_file, "--max-len", "2")
    assert code == 0 and text.startswith("1 structures,")


def test_verify_violations_exit_1(monkeypatch):
    def broken(sym):
        return SymbolReport([SymbolViolation("product", ("a", "a", "a", "a"), 1, 0)])

    monkeypatch.setattr(symbols, "check_symbol_axioms", broken)
    code, text = call("verify", "symbols", "--colors", "a", "--all-trees")
    assert code == 1
    assert "product" in text
    assert text.endswith("1 trees, 1 checks, 1 violations\n")


def test_verify_usage_errors(pointed_file):
    assert call("verify", "symbols", "--all-trees")[0] == 2
    assert call("verify", "symbols", "--pointed", pointed_file)[0] == 2
    assert call("verify", "line", "--tree", pointed_file)[0] == 2
    assert call("verify", "nothing", "--all-trees", "--colors", "a")[0] == 2


def test_table_matches_golden(sample_path):
    code, text = call("table", "--tree", str(sample_path))
    assert code == 0
    assert text == (DATA / "sample_table.txt").read_text()


def test_export_dot(sample_path):
    code, text = call("export-dot", "--tree", str(sample_path))
    assert code == 0
    assert text.startswith("digraph T {\n") and text.endswith("}\n")
    assert '  v0 -> v1 [label="a"];' in text


def test_symbol(sample_path):
    code, text = call("symbol", "--tree", str(sample_path))
    assert code == 0 and text.count("c = ") == 6


def test_bad_tree_file(tmp_path):
    bad = tmp_path / "bad.tree"
    bad.write_text("colors: a b\nvertices: 3\nedge a: 0 -> 1\n")
    assert call("table", "--tree", str(bad))[0] == 2


def test_usage_errors():
    assert call()[0] == 2
    assert call("bogus")[0] == 2
    assert call("eval", "--from", "a", "--to", "b")[0] == 2
    assert call("--help")[0] == 0


def test_output_is_deterministic(sample_path):
    args = ("enumerate", "trees", "--colors", "a,b,c", "--list")
    assert call(*args) == call(*args)
    args = ("universal", "--colors", "a,b,c", "--from", "a", "--to", "b", "--word", "ab")
    assert call(*args) == call(*args)


def test_module_entry_point(sample_path):
    proc = subprocess.run(
        [sys.executable, "-m", "colored_circle", "eval", "--tree", str(sample_path), "--from", "b", "--to", "f",
         "--word", "cdf"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "closed=1 recursive=1 product=1\n"
