import json
from pathlib import Path

import pytest

from taumap.algebra import AlgebraError
from taumap.cli import emit_report, main
from taumap.corpus import random_corpus
from taumap.fileformat import FileFormatError, emit_algebra_file, parse_algebra_file

DATA = Path(__file__).resolve().parent.parent / "data"

TWO_CYCLE = "vertices: 1 2\narrow a 1 2\narrow b 2 1\nrelation a b\n"


def write(tmp_path, text, name="alg.txt"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


# -- file format


def test_parse_two_cycle(two_cycle):
    f = parse_algebra_file(TWO_CYCLE)
    assert f.vertices == [1, 2]
    assert f.to_algebra() == two_cycle


def test_parse_semisimple():
    a = parse_algebra_file("vertices: 1").to_algebra()
    assert a.dim == 1 and a.quiver.arrows == ()


def test_parse_comments_and_name():
    f = parse_algebra_file("# header\nname: demo  \nvertices: x y # two\n\narrow p x y\n")
    assert f.name == "demo" and f.vertices == ["x", "y"] and f.arrows == [("p", "x", "y")]


@pytest.mark.parametrize("text,line,fragment", [
    ("vertices: 1 2\narrow a 1 2\nrelation a\n", 3, "length < 2"),
    ("vertices: 1 1\n", 1, "duplicate vertex"),
    ("vertices: 1 2\narrow a 1 2\narrow a 2 1\n", 3, "duplicate arrow"),
    ("vertices: 1 2\narrow a 1 2\nrelation a z\n", 3, "unknown arrow"),
    ("vertices: 1 2\narrow a 1 3\n", 2, "unknown vertex"),
    ("vertices: 1\nloop a 1\n", 2, "unknown directive"),
    ("arrow a 1 2\n", 1, "before vertices"),
    ("vertices: 1\narrow a 1\n", 2, "expected"),
])
def test_parse_errors(text, line, fragment):
    with pytest.raises(FileFormatError) as e:
        parse_algebra_file(text)
    assert e.value.line == line
    assert fragment in str(e.value)


def test_missing_vertices():
    with pytest.raises(FileFormatError):
        parse_algebra_file("# nothing\n")


def test_semantic_errors_are_delegated():
    f = parse_algebra_file("vertices: 1 2\narrow a 1 2\narrow b 2 1\n")
    with pytest.raises(AlgebraError):
        f.to_algebra()


@pytest.mark.parametrize("alg", random_corpus(25, seed=31), ids=lambda a: a.name)
def test_emit_parse_roundtrip(alg):
    assert parse_algebra_file(emit_algebra_file(alg)).to_algebra() == alg


# -- commands


def test_tau_map_two_cycle(capsys):
    code, rep = run_json(capsys, "tau-map", str(DATA / "two_cycle.alg"))
    assert code == 0
    assert rep["verdict"] == "exists" and rep["matrix"] == [[0, 1], [1, 0]]
    assert rep["algebra"] == {"name": "two-cycle", "dim": 5, "nakayama": True}


def test_tau_map_not_exists_is_success(capsys):
    code, rep = run_json(capsys, "tau-map", str(DATA / "cycle_with_source.alg"))
    assert code == 0 and rep["verdict"] == "not_exists" and "matrix" not in rep


def test_cartan_text(capsys):
    code, out, _ = run(capsys, "cartan", str(DATA / "two_cycle.alg"))
    assert code == 0
    assert "matrix:\n1 1\n1 2" in out


def test_coxeter_signs(capsys):
    _, rep = run_json(capsys, "coxeter", str(DATA / "two_cycle.alg"))
    assert rep["matrix"] == [[1, 0], [0, 1]]
    _, rep = run_json(capsys, "coxeter", "--sign", "minus", str(DATA / "hereditary_a2.alg"))
    assert rep["matrix"] == [[0, -1], [1, -1]]


def test_coxeter_singular_and_rational(capsys, tmp_path):
    p = write(tmp_path, "vertices: 1 2\narrow a 1 2\narrow b 2 1\nrelation a b\nrelation b a\n")
    _, rep = run_json(capsys, "coxeter", p)
    assert rep["verdict"] == "singular" and "matrix" not in rep
    p = write(tmp_path, "vertices: 1 2\narrow a 1 2\narrow x 1 1\nrelation x x\nrelation x a\n", "r.txt")
    _, rep = run_json(capsys, "coxeter", p)
    assert rep["verdict"] == "non_integral"
    assert rep["data"]["rational_matrix"] == [["1/2", "1"], ["-1/2", "1"]]


def test_verify_two_cycle(capsys):
    code, rep = run_json(capsys, "verify", str(DATA / "two_cycle.alg"))
    assert code == 0
    assert [c["name"] for c in rep["checks"]] == ["M(1,1)", "M(2,1)", "M(2,2)"]
    assert all(c["pass"] for c in rep["checks"])


def test_verify_rejects_non_nakayama(capsys):
    code, _, err = run(capsys, "verify", str(DATA / "star.alg"))
    assert code == 1 and "not Nakayama" in err


def test_info_ext_quiver_is_nakayama(capsys):
    _, rep = run_json(capsys, "info", str(DATA / "two_cycle.alg"))
    assert rep["data"]["basis_size"] == 5 and rep["data"]["components"] == [[1, 2]]
    _, rep = run_json(capsys, "ext-quiver", str(DATA / "hereditary_a2.alg"))
    assert rep["data"] == {"arrows": [[1, 2]], "sources": [1], "sinks": [2]}
    _, rep = run_json(capsys, "is-nakayama", str(DATA / "star.alg"))
    assert rep["verdict"] == "not_nakayama"


def test_tau_command(capsys):
    _, rep = run_json(capsys, "tau", "--simple", "1", str(DATA / "two_cycle.alg"))
    assert rep["data"]["dim_vector"] == [0, 1]
    _, rep = run_json(capsys, "tau", "--module", "2,2", str(DATA / "two_cycle.alg"))
    assert rep["data"]["tau"] == "M(1,2)" and rep["checks"][0]["pass"]
    _, rep = run_json(capsys, "tau", "--module", "2,3", str(DATA / "two_cycle.alg"))
    assert rep["verdict"] == "projective"
    code, rep = run_json(capsys, "tau", "--module", "2,9", str(DATA / "two_cycle.alg"))
    assert code == 1
    code, rep = run_json(capsys, "tau", str(DATA / "two_cycle.alg"))
    assert code == 1
    code, rep = run_json(capsys, "tau", "--simple", "7", str(DATA / "two_cycle.alg"))
    assert code == 1 and "unknown vertex" in rep["error"]


def test_five_term_command(capsys):
    code, rep = run_json(capsys, "five-term", "--simple", "1", str(DATA / "star.alg"))
    assert code == 0 and rep["verdict"] == "pass"
    assert rep["data"]["dims"]["N"] == [1, 0, 1]
    code, rep = run_json(capsys, "five-term", "--simple", "1", str(DATA / "two_cycle.alg"))
    assert code == 0 and rep["verdict"] == "not_applicable"


def test_reduce_roundtrip(capsys, tmp_path, cycle_plus_source):
    code, out, _ = run(capsys, "reduce", "--vertex", "3", str(DATA / "cycle_with_source.alg"))
    assert code == 0
    reduced = parse_algebra_file(out).to_algebra()
    assert reduced == cycle_plus_source.delete_source_vertex(3)
    code, _, err = run(capsys, "reduce", "--vertex", "1", str(DATA / "cycle_with_source.alg"))
    assert code == 1 and "not a source" in err


def test_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "info", str(tmp_path / "missing.txt"))
    assert code == 1
    p = write(tmp_path, "vertices: 1 2\narrow a 1 2\nrelation a\n")
    code, _, err = run(capsys, "info", p)
    assert code == 1 and "line 3" in err
    p = write(tmp_path, "vertices: 1 2\narrow a 1 2\narrow b 2 1\n", "inf.txt")
    code, _, err = run(capsys, "info", p)
    assert code == 1 and "infinite" in err


def test_json_is_deterministic(capsys):
    for cmd in ("info", "tau-map", "verify", "ext-quiver"):
        _, out, _ = run(capsys, cmd, "--json", str(DATA / "two_cycle.alg"))
        _, out2, _ = run(capsys, cmd, "--json", str(DATA / "two_cycle.alg"))
        assert out == out2


def test_batch_directory(capsys, tmp_path):
    write(tmp_path, TWO_CYCLE, "b.txt")
    write(tmp_path, "vertices: 1 2\narrow a 1 2\n", "a.txt")
    code, out, _ = run(capsys, "tau-map", "--json", str(tmp_path))
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and [x["file"] for x in lines] == ["a.txt", "b.txt"]
    write(tmp_path, "vertices: 1\nbogus\n", "c.txt")
    code, out, _ = run(capsys, "tau-map", "--json", str(tmp_path))
    assert code == 1 and len(out.splitlines()) == 3


def test_batch_verification_failure_wins(capsys, tmp_path, monkeypatch):
    import taumap.cli as cli

    write(tmp_path, TWO_CYCLE, "a.txt")
    write(tmp_path, "vertices: 1\nbogus\n", "b.txt")
    monkeypatch.setattr(cli, "identify", lambda k, m: None)
    code, _, _ = run(capsys, "verify", str(tmp_path))
    assert code == 2


def test_emit_report_shapes():
    rep = {"command": "tau-map", "algebra": {"name": None, "dim": 3, "nakayama": True},
           "verdict": "exists", "matrix": [[0, 1], [1, 0]]}
    assert json.loads(emit_report(rep, "json"))["matrix"] == [[0, 1], [1, 0]]
    text = emit_report(rep)
    assert "verdict: exists" in text and "0 1\n1 0" in text
