import json

import pytest

from quivrep import cli
from quivrep import io as qio
from quivrep.errors import NotAdmissible, ParseError
from quivrep.linalg import QQ, Mat
from quivrep.rep import ModHom, Rep


ALGEBRA_TEXT = """\
algebra tower over Q
vertex a b c
arrow alpha : a -> b
arrow beta : a -> b
arrow gamma : b -> c
arrow delta : b -> c
relation 1*delta*alpha = 0
relation 1*gamma*beta = 0
relation 1*gamma*alpha - 1*delta*beta = 0
loewybound 3
"""

KRONECKER_TEXT = """\
algebra kron over Q
vertex a b
arrow alpha : a -> b
arrow beta : a -> b
loewybound 4
"""

MODULES_TEXT = """\
module Pb over kron
dim b = 1

module Pa over kron
dim a = 1
dim b = 2
matrix alpha = [[1],[0]]
matrix beta = [[0],[1]]
"""

W_TEXT = """\
hom w0 : Pb -> Pa
block b = [[1],[0]]
"""

V_TEXT = """\
hom v0 : Pb -> Pa
block b = [[0],[1]]
"""


def test_parse_algebra_with_commutation_relations():
    ns = qio.parse_text(ALGEBRA_TEXT)
    alg = ns.algebras["tower"]
    assert alg.path_basis().total_dimension == 8


def test_relation_tokens_use_function_order():
    # delta*alpha must mean: first alpha, then delta
    ns = qio.parse_text(ALGEBRA_TEXT)
    rel = ns.algebras["tower"].relations[0]
    assert rel[0][1] == ("alpha", "delta")


def test_parse_rejects_short_relation():
    bad = KRONECKER_TEXT + "relation 1*alpha = 0\n"
    with pytest.raises((ParseError, NotAdmissible)):
        qio.parse_text(bad)


def test_parse_error_carries_line_number():
    bad = "algebra x over Q\nvertex a\nnonsense here\n"
    with pytest.raises(ParseError) as err:
        qio.parse_text(bad)
    assert ":3:" in str(err.value)


def test_hom_violating_commutation_names_arrow():
    text = (
        KRONECKER_TEXT
        + MODULES_TEXT
        + "hom bad : Pa -> Pa\nblock a = [[1]]\nblock b = [[0,0],[0,0]]\n"
    )
    with pytest.raises(ParseError) as err:
        qio.parse_text(text)
    assert "alpha" in str(err.value)


def test_rational_literals_round_trip():
    text = KRONECKER_TEXT + (
        "module M over kron\ndim a = 1\ndim b = 1\nmatrix alpha = [[1/2]]\nmatrix beta = [[-3]]\n"
    )
    ns = qio.parse_text(text)
    m = ns.modules["M"]
    emitted = qio.emit_module(m, "M", "kron")
    ns2 = qio.parse_text(KRONECKER_TEXT + emitted)
    assert ns2.modules["M"] == m


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_cli_ladder(tmp_path, capsys):
    alg = _write(tmp_path, "kron.alg", KRONECKER_TEXT)
    mods = _write(tmp_path, "mods.mod", MODULES_TEXT)
    w = _write(tmp_path, "w.hom", W_TEXT)
    v = _write(tmp_path, "v.hom", V_TEXT)
    code = cli.run(
        ["ladder", "--algebra", alg, "--module", mods, "--w", w, "--v", v, "--depth", "3"]
    )
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert out["ok"]


def test_cli_ladder_emit_matrices(tmp_path, capsys):
    alg = _write(tmp_path, "kron.alg", KRONECKER_TEXT)
    mods = _write(tmp_path, "mods.mod", MODULES_TEXT)
    w = _write(tmp_path, "w.hom", W_TEXT)
    v = _write(tmp_path, "v.hom", V_TEXT)
    code = cli.run(
        [
            "ladder", "--algebra", alg, "--module", mods, "--w", w, "--v", v,
            "--depth", "2", "--emit-matrices",
        ]
    )
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert "matrices" in out
    assert out["matrices"]["w"][0]["b"] == [["1"], ["0"]]


def test_cli_example_and_exit_codes(capsys):
    assert cli.run(["example", "z"]) == 0
    capsys.readouterr()
    assert cli.run(["example", "nosuch"]) == 2


def test_cli_zladder(capsys):
    assert cli.run(["zladder", "--w", "2", "--v", "3", "--depth", "4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert "Z/16" in out["results"][0]["evidence"]


def test_cli_degenerate(tmp_path, capsys):
    # a valid split-mono RZ input: U = Pb, X = Pa, mono = [g; 0]
    alg = _write(tmp_path, "kron.alg", KRONECKER_TEXT)
    mods = _write(
        tmp_path,
        "mods.mod",
        MODULES_TEXT
        + "\nmodule Mid over kron\ndim a = 1\ndim b = 3\n"
        + "matrix alpha = [[1],[0],[0]]\nmatrix beta = [[0],[1],[0]]\n"
        + "\nmodule Y over kron\ndim a = 1\ndim b = 2\n"
        + "matrix beta = [[1],[0]]\n",
    )
    u = _write(tmp_path, "u.mod", "module U over kron\ndim b = 1\n")
    x = _write(
        tmp_path,
        "x.mod",
        "module X over kron\ndim a = 1\ndim b = 2\nmatrix alpha = [[1],[0]]\nmatrix beta = [[0],[1]]\n",
    )
    mono = _write(tmp_path, "mono.hom", "hom mono : U -> Mid\nblock b = [[1],[0],[0]]\n")
    epi = _write(
        tmp_path,
        "epi.hom",
        "hom epi : Mid -> Y\nblock a = [[1]]\nblock b = [[0,1,0],[0,0,1]]\n",
    )
    code = cli.run(
        [
            "degenerate", "--algebra", alg, "--module", mods, "--u", u,
            "--x", x, "--mono", mono, "--epi", epi, "--depth", "4",
        ]
    )
    out = json.loads(capsys.readouterr().out)
    assert code == 0, out
    assert out["ok"]
    assert out["steering_nilpotency_index"] == 1
    assert out["split_indices"] == [1, 2, 3]


def test_cli_math_failure_exits_one(tmp_path, capsys):
    # Kronecker regular cokernels are not rigid: degenerate-cokernels must
    # fail with the NotRigid claim named and exit status 1
    alg = _write(tmp_path, "kron.alg", KRONECKER_TEXT)
    mods = _write(tmp_path, "mods.mod", MODULES_TEXT)
    w = _write(tmp_path, "w.hom", W_TEXT)
    v = _write(tmp_path, "v.hom", V_TEXT)
    code = cli.run(
        ["degenerate-cokernels", "--algebra", alg, "--module", mods, "--w", w, "--v", v]
    )
    out = json.loads(capsys.readouterr().out)
    assert code == 1
    assert not out["ok"]
    assert out["error"]["type"] == "NotRigid"


def test_cli_ext_class_basis(tmp_path, capsys):
    alg = _write(tmp_path, "kron.alg", KRONECKER_TEXT)
    reg = _write(
        tmp_path,
        "h.mod",
        "module H over kron\ndim a = 1\ndim b = 1\nmatrix alpha = [[1]]\n",
    )
    code = cli.run(["ext", "--algebra", alg, "--module", reg, "--self", "--standard"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert len(out["class_basis"]) == 1
    dims = {r["claim"]: r["evidence"] for r in out["results"]}
    assert dims["dim Ext^1(M, M)"] == "1"
    assert dims["dim standard subspace"] == "1"


def test_cli_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert cli.run(["zladder", "--w", "2", "--v", "3", "--depth", "2", "--out", str(target)]) == 0
    capsys.readouterr()
    saved = json.loads(target.read_text())
    assert saved["ok"]


def test_cli_check(capsys):
    assert cli.run(["check", "--seed", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["ok"]
    names = {r["scenario"] for r in out["reports"]}
    assert {"kronecker", "three-kronecker", "d4", "loop-beta", "loop-square", "z"} <= names
    assert any(n.startswith("suite-") for n in names)
