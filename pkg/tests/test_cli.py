import json

import pytest

from posbraid.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_info(capsys):
    code, data = run_json(capsys, "info", "s1^3")
    assert code == 0
    assert (data["w"], data["q"], data["mu"], data["tb"]) == (3, 2, 1, 1)


def test_aug_count(capsys):
    code, data = run_json(capsys, "aug", "count", "1 2 1 2 1 2 1 2 1 2 1 2", "--jobs", "2")
    assert code == 0
    assert data == {"count": 1597, "odd": True, "cross_check": True}


def test_aug_list_and_test(capsys):
    _, data = run_json(capsys, "aug", "list", "1^3")
    assert data["augmentations"] == [[1], [1, 2], [3], [2, 3], [1, 2, 3]]
    _, data = run_json(capsys, "aug", "test", "1^3", "--set", "1")
    assert data["augmentation"] and data["multipliers"] == {"2,1": 1}


def test_ruling_commands(capsys):
    code, out, _ = run(capsys, "ruling", "poly", "s1^11")
    assert out.strip() == "z^10 + 10z^8 + 36z^6 + 56z^4 + 35z^2 + 6"
    _, data = run_json(capsys, "ruling", "test", "1^3", "--set", "b1,b2,b3")
    assert data == {"ruling": True, "set": [1, 2, 3], "theta": -1}
    _, data = run_json(capsys, "ruling", "list", "1^3")
    assert len(data["rulings"]) == 3


def test_matrix_commands(capsys):
    _, data = run_json(capsys, "matrix", "1^3")
    assert data["matrix"][0][0] == "b1 + b3 + b1b2b3"
    _, data = run_json(capsys, "inverse", "1^3", "--ring", "Z")
    assert data["matrix"][0][0] == "-b2"
    _, data = run_json(capsys, "factor", "1^3")
    assert len(data["factors"]) == 3
    _, data = run_json(capsys, "differential", "1^3")
    assert data["a1"] == "1 + b1 + b3 + b1b2b3"


def test_simul(capsys):
    code, data = run_json(capsys, "simul", "1^3")
    assert code == 0 and data == {"X": [1], "forest": [[1, 2]], "theta": 1, "ok": True}


def test_identities_and_grobner(capsys):
    code, data = run_json(capsys, "identities", "--q", "3", "--samples", "20")
    assert code == 0 and all(data["results"].values())
    code, data = run_json(capsys, "grobner", "--q", "2")
    assert code == 0 and data["leading_terms"]


def test_grobner_guard(capsys):
    code, _, err = run(capsys, "grobner", "--q", "4")
    assert code == 2 and "q <= 3" in err


def test_usage_errors(capsys):
    assert run(capsys, "info", "1 x")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "aug", "count", "1^30")[0] == 2
    assert run(capsys, "info", "1", "--jobs", "0")[0] == 2


def test_report_passes(capsys):
    code, out, _ = run(capsys, "report")
    assert code == 0 and "20/20 records passed" in out


def test_report_mismatch(tmp_path, capsys):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"name": "trefoil", "word": "1^3", "expect": {"augmentations": 0}}\n')
    code, data = run_json(capsys, "report", "--catalog", str(path))
    assert code == 1
    assert data["records"][0]["failures"] == ["augmentations"]


def test_report_is_deterministic(capsys):
    outs = [run(capsys, "report", "--format", "json", "--jobs", str(j))[1] for j in (1, 1, 3)]
    assert outs[0] == outs[1] == outs[2]
    assert "ms" not in json.loads(outs[0])["records"][0]


@pytest.mark.parametrize("name", ["13n_981", "16n_92582"])
def test_report_records(capsys, name):
    code, data = run_json(capsys, "report", "--timing")
    rec = next(r for r in data["records"] if r["name"] == name)
    assert rec["pass"] and "ms" in rec
