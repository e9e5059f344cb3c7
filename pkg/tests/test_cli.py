import json

import pytest

from tecc import cli
from tecc import repro as rp

GF5 = ["--field", "5", "--curve", "type1:1,1,0,1"]
GF4 = ["--field", "2^2", "--curve", "type2:0,0,0,1"]


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_field(capsys):
    code, out, _ = run(capsys, "field", "--field", "2^2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["q"] == 4 and len(obj["elements"]) == 4


def test_curve(capsys):
    code, out, _ = run(capsys, "curve", *GF5)
    assert code == 0
    assert "#E = 9" in out and "Z/1 x Z/9" in out


def test_code_and_dual(capsys):
    code, out, _ = run(capsys, "code", *GF5, "--k", "4")
    assert code == 0 and "1 1 1 1 1 1 1 1" in out
    code, out, _ = run(capsys, "dual", *GF5, "--k", "3", "--ell", "0", "--eta", "2", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["agree"] and {"recursive", "nullspace"} <= set(obj["routes"])


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", *GF5, "--k", "3", "--ell", "0", "--eta", "3", "--format", "json")
    obj = json.loads(out)
    assert code == 0
    assert (obj["d"], obj["class"], obj["case"]) == (4, "other", "n-k-1")


def test_analyze_descriptor(capsys):
    desc = json.dumps({"field": {"p": 5}, "curve": {"kind": "type1", "f": [1, 1, 0, 1]},
                       "D": {"n": 8}, "k": 3, "twist": {"ell": 0, "eta": 1}})
    code, out, _ = run(capsys, "analyze", "--descriptor", desc, "--format", "json")
    assert code == 0 and json.loads(out)["d"] == 5


def test_eta_subset(capsys):
    code, out, _ = run(capsys, "eta", *GF5, "--k", "3", "--ell", "0", "--subset", "(0,1);(2,4);(3,4);(4,3)")
    assert code == 0
    assert out.split()[-2:] == ["value", "3"]


def test_search(capsys):
    D = "(1,a);(1,a+1);(a,a);(a,a+1);(a+1,a);(a+1,a+1)"
    code, out, _ = run(capsys, "search", *GF4, "--points", D, "--k", "3", "--self-dual")
    assert code == 0 and out.strip().endswith("3 match(es)")
    code, out, _ = run(capsys, "search", *GF5, "--k", "3", "--want", "MDS")
    assert code == 0 and "0 match(es)" in out


def test_schur(capsys):
    code, out, _ = run(capsys, "schur", "--field", "13", "--curve", "type1:1,1,2,1", "--n", "14",
                       "--k", "5", "--ell", "1", "--eta", "1")
    assert code == 0
    assert "dim C^*2 = 11" in out and "verdict: NON_RS" in out


def test_repro_byte_stable(capsys):
    first = run(capsys, "repro", "example1")
    second = run(capsys, "repro", "example1")
    assert first[0] == 0 and first == second


def test_repro_all(capsys):
    code, out, _ = run(capsys, "repro", "all", "--format", "json")
    assert code == 0 and len(json.loads(out)) == len(rp.TARGETS)


def test_exit_validation(capsys):
    assert run(capsys, "code", *GF5)[0] == 1  # missing --k
    assert run(capsys, "code", "--field", "4", "--curve", "type1:1,1,0,1", "--k", "3")[0] == 1
    assert run(capsys, "repro", "nope")[0] == 1
    assert run(capsys, "bogus")[0] == 1
    assert run(capsys, "code", *GF5, "--k", "3", "--n", "7")[0] == 1


def test_exit_budget(capsys, monkeypatch):
    assert run(capsys, "analyze", *GF5, "--k", "4", "--budget", "2")[0] == 2
    monkeypatch.setenv("TECC_BUDGET", "2")
    assert run(capsys, "analyze", *GF5, "--k", "4")[0] == 2


def test_exit_mismatch(capsys, monkeypatch):
    def broken(name):
        rep = rp.ReproReport(name)
        rep.add("G", False)
        return rep
    monkeypatch.setattr(cli.rp, "repro", broken)
    assert run(capsys, "repro", "example1")[0] == 3


def test_out_atomic(capsys, tmp_path):
    dest = tmp_path / "report.json"
    dest.write_text("stale")
    code, out, _ = run(capsys, "curve", *GF5, "--format", "json", "--out", str(dest))
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["order"] == 9
    assert [p.name for p in tmp_path.iterdir()] == ["report.json"]


def test_out_untouched_on_error(capsys, tmp_path):
    dest = tmp_path / "report.txt"
    dest.write_text("keep")
    assert run(capsys, "code", *GF5, "--out", str(dest))[0] == 1
    assert dest.read_text() == "keep"


@pytest.mark.parametrize("text", ["5", "GF(5)", "2^4", "GF(2^4)", "16", '{"p": 2, "m": 4}'])
def test_parse_field_forms(text):
    ctx = cli.parse_field(text)
    assert ctx.q in (5, 16)
