import json

import pytest
from click.testing import CliRunner

from platykit.cli import main
from platykit.constructions import fixture, generalized_petersen
from platykit.graph6 import decode_graph6, encode_graph6
from platykit.isomorphism import canonical_graph6

from conftest import flower_snark


@pytest.fixture()
def runner():
    return CliRunner()


def _run(runner, args, input=None):
    return runner.invoke(main, args, input=input, catch_exceptions=False)


def test_construct_gp(runner, petersen):
    res = _run(runner, ["construct", "gp", "5", "2"])
    assert res.exit_code == 0
    assert decode_graph6(res.output.strip()) == generalized_petersen(5, 2)


def test_construct_pp(runner):
    res = _run(runner, ["construct", "pp", "9", "2"])
    assert res.exit_code == 0
    assert decode_graph6(res.output.strip()).n == 36


def test_construct_fixture(runner):
    res = _run(runner, ["construct", "fixture", "fig8a_poly21"])
    assert res.exit_code == 0
    assert decode_graph6(res.output.strip()).n == 21


def test_construct_usage_error(runner):
    res = runner.invoke(main, ["construct", "gp", "5", "3"])
    assert res.exit_code == 2
    res = runner.invoke(main, ["construct", "whatnot"])
    assert res.exit_code == 2


def test_filter_platypus_girth(runner, petersen, tietze):
    stream = encode_graph6(petersen) + "\n" + encode_graph6(tietze) + "\n"
    res = _run(runner, ["filter", "--platypus", "--girth-min", "5", "-"], input=stream)
    assert res.exit_code == 0
    lines = res.output.split()
    assert lines == [encode_graph6(petersen)]


def test_filter_polyhedral_fixtures(runner, tmp_path):
    names = ["fig8a_poly21", "fig8b_poly28", "fig9a_poly22", "fig9b_poly23"]
    src = tmp_path / "fixtures.g6"
    src.write_text("".join(encode_graph6(fixture(n)) + "\n" for n in names))
    manifest = tmp_path / "m.json"
    res = _run(runner, [
        "filter", "--planar", "--connectivity", "3", "--platypus",
        "--manifest", str(manifest), str(src),
    ])
    assert res.exit_code == 0
    assert len(res.output.split()) == 4
    data = json.loads(manifest.read_text())
    assert data["passed"] == 4 and data["failed"] == 0
    assert all(v["pass"] for v in data["verdicts"])
    assert data["toolkit_version"]


def test_filter_empty_input(runner, tmp_path):
    manifest = tmp_path / "m.json"
    res = _run(runner, ["filter", "--platypus", "--manifest", str(manifest), "-"], input="")
    assert res.exit_code == 0
    assert res.output == ""
    assert json.loads(manifest.read_text())["passed"] == 0


def test_filter_malformed_line(runner, petersen):
    stream = encode_graph6(petersen) + "\n" + "C~~~\n"
    res = runner.invoke(main, ["filter", "-"], input=stream)
    assert res.exit_code == 3
    assert "line 2" in res.stderr
    # non-strict mode still emits the good line
    assert encode_graph6(petersen) in res.output
    res = runner.invoke(main, ["filter", "--strict", "-"], input="C~~~\n" + encode_graph6(petersen) + "\n")
    assert res.exit_code == 3
    assert encode_graph6(petersen) not in res.output


def test_filter_snark_pipeline(runner, tmp_path, petersen, tietze):
    # externally-supplied list: Petersen, Tietze, flower snarks J5 and J7
    src = tmp_path / "snarks.g6"
    graphs = [petersen, tietze, flower_snark(5), flower_snark(7)]
    src.write_text("".join(encode_graph6(g) + "\n" for g in graphs))
    res = _run(runner, ["filter", "--snark", str(src)])
    got = res.output.split()
    assert len(got) == 3  # Tietze has a triangle
    assert encode_graph6(tietze) not in got
    # every snark on <= 30 vertices is a platypus
    res = _run(runner, ["filter", "--snark", "--platypus", str(src)])
    assert len(res.output.split()) == 3


def test_census_cli(runner, tmp_path):
    out = tmp_path / "n9.g6"
    manifest = tmp_path / "n9.json"
    res = _run(runner, ["census", "9", "--out", str(out), "--manifest", str(manifest)])
    assert res.exit_code == 0
    assert res.output.strip() == "4"
    lines = out.read_text().split()
    assert len(lines) == 4 and lines == sorted(lines)
    data = json.loads(manifest.read_text())
    assert data["count"] == 4 and data["order"] == 9
    assert data["graph6_file"] == str(out)
    assert "hamiltonian_prunes" in data["prune_stats"]


def test_census_all_graphs(runner):
    res = _run(runner, ["census", "6", "--all-graphs"])
    assert res.output.strip() == "156"


def test_census_girth_flag(runner):
    res = _run(runner, ["census", "10", "--girth", "5"])
    assert res.output.strip() == "2"


def test_census_guard_exit_code(runner, monkeypatch):
    monkeypatch.delenv("PLATYKIT_GUARD_OVERRIDE", raising=False)
    res = runner.invoke(main, ["census", "17"])
    assert res.exit_code == 4


def test_check_report(runner, petersen):
    res = _run(runner, ["check", "-"], input=encode_graph6(petersen) + "\n")
    data = json.loads(res.output)
    assert data["platypus"] and not data["hamiltonian"]
    assert data["girth"] == 5 and data["snark"] is True
    assert data["automorphism_group_order"] == 120
    assert data["maximally_non_hamiltonian"] is True


def test_canon_pipe_composability(runner, petersen):
    rel = petersen.relabel([3, 1, 4, 0, 5, 9, 2, 6, 8, 7])
    stream = encode_graph6(petersen) + "\n" + encode_graph6(rel) + "\n"
    res = _run(runner, ["canon", "-"], input=stream)
    a, b = res.output.split()
    assert a == b == canonical_graph6(petersen)


def test_isomorphic_cmd(runner, tmp_path, petersen, tietze):
    a = tmp_path / "a.g6"
    b = tmp_path / "b.g6"
    a.write_text(encode_graph6(petersen) + "\n")
    b.write_text(encode_graph6(petersen.relabel([9, 8, 7, 6, 5, 4, 3, 2, 1, 0])) + "\n")
    res = _run(runner, ["isomorphic", str(a), str(b)])
    assert res.output.strip() == "true"
    b.write_text(encode_graph6(tietze) + "\n")
    res = _run(runner, ["isomorphic", str(a), str(b)])
    assert res.output.strip() == "false"


def test_audit_cmd(runner, petersen, k4):
    stream = encode_graph6(petersen) + "\n" + encode_graph6(k4) + "\n"
    res = _run(runner, ["audit", "-"], input=stream)
    data = json.loads(res.output)
    assert data["checked"] == 1
    assert data["violations"] == []
    assert data["skipped"][0]["reason"] == "not a platypus"


def test_construct_filter_roundtrip(runner):
    """construct output is bit-exact input for filter and canon."""
    res = _run(runner, ["construct", "pp", "9", "2"])
    line = res.output
    res2 = _run(runner, ["filter", "--girth-min", "9", "-"], input=line)
    assert res2.output == line
    res3 = _run(runner, ["canon", "-"], input=line)
    assert res3.exit_code == 0


def test_manifest_reruns_reproduce(runner, tmp_path):
    m1 = tmp_path / "m1.json"
    m2 = tmp_path / "m2.json"
    o1 = tmp_path / "o1.g6"
    o2 = tmp_path / "o2.g6"
    _run(runner, ["census", "9", "--out", str(o1), "--manifest", str(m1)])
    _run(runner, ["census", "9", "--out", str(o2), "--manifest", str(m2)])
    assert o1.read_text() == o2.read_text()
    d1, d2 = json.loads(m1.read_text()), json.loads(m2.read_text())
    assert d1["count"] == d2["count"]
