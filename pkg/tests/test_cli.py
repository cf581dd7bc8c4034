import json

import pytest

from realschubert.cli import main

CFG = {"d": 3, "blocks": [[{"x": 0.0}, {"x": 0.1}], [{"x": 1.0}, {"x": 1.1}],
                          [{"x": 2.0}, {"x": 2.1}], [{"x": 3.0}, {"x": 3.1}]]}


@pytest.fixture
def cfg_path(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(CFG))
    return str(path)


def test_kostka(capsys):
    assert main(["kostka", "--content", "1,1,1,1,1,1"]) == 0
    assert capsys.readouterr().out.strip() == "5"


def test_ssyt(capsys):
    assert main(["ssyt", "--content", "1,1,1,1"]) == 0
    assert capsys.readouterr().out.splitlines() == ["[1 2 | 3 4]", "[1 3 | 2 4]"]


def test_nets(capsys):
    assert main(["nets", "--content", "2,2"]) == 0
    assert capsys.readouterr().out.strip() == "(1,4) (2,3) -> [1 1 | 2 2]"


def test_invalid_content(capsys):
    assert main(["kostka", "--content", "2,1,1,1"]) == 1
    assert "2d-2" in capsys.readouterr().err


def test_bijection_check(capsys):
    assert main(["bijection-check", "--max-d", "4"]) == 0
    assert json.loads(capsys.readouterr().out)["ok"] is True


def test_check_separated(cfg_path, capsys):
    assert main(["check-separated", "--config", cfg_path]) == 0
    assert json.loads(capsys.readouterr().out)["separated"] is True


def test_solve(cfg_path, tmp_path):
    out = tmp_path / "out.json"
    assert main(["solve", "--config", cfg_path, "--seed", "3", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["found"] == report["target_count"] == 2 and report["real_count"] == 2


def test_solve_deficit(tmp_path, capsys):
    from realschubert.harness import random_separated_config

    path = tmp_path / "d4.json"
    path.write_text(json.dumps(random_separated_config(4, (1,) * 6, 0).to_json()))
    # a one-start budget cannot reach five classes even after re-gauging
    assert main(["solve", "--config", str(path), "--starts", "1"]) == 2
    assert json.loads(capsys.readouterr().out)["deficit"] is True


def test_solve_bad_config(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"d": 3, "blocks": [[{"x": 0}, {"x": 0}]]}))
    assert main(["solve", "--config", str(path)]) == 1
    assert main(["solve", "--config", str(tmp_path / "missing.json")]) == 1
    (tmp_path / "junk.json").write_text("{not json")
    assert main(["solve", "--config", str(tmp_path / "junk.json")]) == 1


def test_experiment(tmp_path):
    out = tmp_path / "exp.json"
    assert main(["experiment", "--d", "3", "--content", "1,1,1,1", "--trials", "2",
                 "--seed", "1", "--no-timestamp", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["aggregate"]["trials"] == 2 and "timestamp" not in report["provenance"]


def test_help_documents_schema(capsys):
    with pytest.raises(SystemExit):
        main(["solve", "--help"])
    text = capsys.readouterr().out
    assert '"blocks"' in text and '"m"' in text
