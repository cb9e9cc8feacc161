import io
import subprocess
import sys

import pytest

from conftest import SP
from dplump.cli import main, parse_nat_list
from dplump.order import covered, le
from dplump.syntax import parse_tree


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def sigfile(tmp_path):
    p = tmp_path / "sp.sig"
    p.write_text("shape s 1\nshape p 2\n")
    return str(p)


def test_main_examples(sigfile):
    assert run("le", "--sig", sigfile, "(nat 1)", "(nat 2)") == (0, "true\n", "")
    assert run("covered", "--sig", sigfile, "zero", "zero") == (0, "false\n", "")
    assert run("join", "--sig", sigfile, "(nat 1)", "(nat 1)") == (
        0,
        "(w [s s] (w []) (w []))\n",
        "",
    )


def test_naive_flag(sigfile):
    assert run("le", "--naive", "--sig", sigfile, "(nat 3)", "(nat 2)")[1] == "false\n"
    assert run("covered", "--naive", "--sig", sigfile, "(nat 1)", "(nat 2)")[1] == "true\n"


@pytest.mark.parametrize(
    "a, b",
    [("zero", "(nat 2)"), ("(w [p] (nat 1) zero)", "(nat 3)"), ("(nat 2)", "(w [s s] (nat 1) zero)")],
)
def test_thin_wrapper(sigfile, a, b):
    u, v = parse_tree(a, SP), parse_tree(b, SP)
    assert run("le", "--sig", sigfile, a, b)[1] == f"{str(le(u, v)).lower()}\n"
    assert run("covered", "--sig", sigfile, a, b)[1] == f"{str(covered(u, v)).lower()}\n"


def test_join_many(sigfile):
    code, out, _ = run("join", "--sig", sigfile, "(nat 1)", "(nat 1)", "zero")
    assert out == "(w [s s] (w []) (w []))\n"
    assert run("join", "--sig", sigfile, "(nat 2)")[1] == "(w [s] (w [s] (w [])))\n"


def test_chain(sigfile):
    code, out, _ = run("chain", "--sig", sigfile, "(w [p] (nat 1) (nat 2))")
    assert code == 0
    assert out.splitlines() == [
        "(w [p] (w [s] (w [])) (w [s] (w [s] (w []))))",
        "(w [s s] (w []) (w [s] (w [])))",
        "(w [s] (w []))",
        "(w [])",
        "steps: 3",
    ]
    assert run("chain", "--sig", sigfile, "zero")[1] == "(w [])\nsteps: 0\n"


def test_listlt():
    assert run("listlt", "0,1", "2") == (0, "true\n", "")
    assert run("listlt", "<0,2>", "<1,2>")[1] == "false\n"
    assert run("listlt", "", "5")[1] == "true\n"
    assert run("listlt", "3", "")[1] == "false\n"
    assert run("listlt", "1,x", "2")[0] == 2


def test_parse_nat_list():
    assert parse_nat_list("[1, 2,3]") == [1, 2, 3]
    assert parse_nat_list("<>") == []


def test_exit_codes(sigfile, tmp_path):
    assert run("le", "--sig", sigfile, "(w [q])", "zero")[0] == 3
    code, _, err = run("le", "--sig", sigfile, "(w [s])", "zero")
    assert code == 3 and "takes 1 children" in err
    assert run("le", "--sig", sigfile, "(w [s", "zero")[0] == 2
    assert run("le", "--sig", sigfile, "zero")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("check-laws", "--cases", "0")[0] == 2
    assert run("check-laws", "--cases", "ten")[0] == 2
    assert run("le", "--sig", str(tmp_path / "missing.sig"), "zero", "zero")[0] == 3
    bad = tmp_path / "bad.sig"
    bad.write_text("shape s 1\nshape s 1\n")
    code, _, err = run("le", "--sig", str(bad), "zero", "zero")
    assert code == 3 and "line 2" in err
    nos = tmp_path / "nos.sig"
    nos.write_text("shape p 2\n")
    assert run("le", "--sig", str(nos), "(nat 1)", "zero")[0] == 3


def test_default_signature():
    assert run("le", "(nat 1)", "(nat 2)") == (0, "true\n", "")


def test_check_laws_and_oracle_compare(sigfile):
    code, out, _ = run("check-laws", "--sig", sigfile, "--seed", "3", "--cases", "30", "--size", "10")
    assert code == 0 and out.startswith("seed 3\n")
    code, out, _ = run("oracle-compare", "--seed", "3", "--cases", "30", "--size", "8")
    assert code == 0 and "le agree 60/60" in out


def test_deep_chain_does_not_overflow(sigfile):
    assert run("le", "--sig", sigfile, "(nat 1500)", "(nat 1500)")[1] == "true\n"


def test_module_entry_point(sigfile):
    proc = subprocess.run(
        [sys.executable, "-m", "dplump", "covered", "--sig", sigfile, "(nat 1)", "(nat 2)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "true\n"
