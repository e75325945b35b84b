import json

import pytest

from hopfbrace import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def dump(name, path, capsys):
    code, _, _ = run(["catalog", "dump", name, "--out", str(path)], capsys)
    assert code == 0
    return path


def test_catalog_list(capsys):
    code, out, _ = run(["catalog", "list"], capsys)
    assert code == 0
    doc = json.loads(out)
    names = [e["name"] for e in doc["entries"]]
    assert "triv_C2_Q" in names and "proj_identity_C2" in names


def test_validate_pass(tmp_path, capsys):
    f = dump("triv_C2_Q", tmp_path / "b.json", capsys)
    code, out, _ = run(["validate", str(f)], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] and doc["kind"] == "brace"


def test_validate_field_override(tmp_path, capsys):
    f = dump("triv_C2_Q", tmp_path / "b.json", capsys)
    code, out, _ = run(["validate", str(f), "--field", "Fp:7"], capsys)
    assert code == 0


def test_validate_math_failure_exits_1(tmp_path, capsys):
    f = dump("triv_C2_Q", tmp_path / "b.json", capsys)
    doc = json.loads(f.read_text())
    doc["mult1"][0], doc["mult1"][1] = doc["mult1"][1], doc["mult1"][0]
    f.write_text(json.dumps(doc))
    code, out, _ = run(["validate", str(f)], capsys)
    assert code == 1
    report = json.loads(out)
    assert not report["ok"]


def test_parse_error_exits_2(tmp_path, capsys):
    f = tmp_path / "broken.json"
    f.write_text("{not json")
    code, _, err = run(["validate", str(f)], capsys)
    assert code == 2
    assert "line" in err


def test_missing_file_exits_2(capsys):
    code, _, err = run(["validate", "no_such_file.json"], capsys)
    assert code == 2


def test_lift(tmp_path, capsys):
    f = dump("sb_Z4_radical", tmp_path / "sb.json", capsys)
    code, out, _ = run(["lift", str(f), "--field", "Fp:7"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["kind"] == "brace"
    assert doc["result"]["dim"] == 4
    # lifting requires a field
    code, _, err = run(["lift", str(f)], capsys)
    assert code == 2


def test_bosonize(tmp_path, capsys):
    f = dump("yd_unit_C2_F7", tmp_path / "yd.json", capsys)
    code, out, _ = run(["bosonize", str(f)], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["dim"] == 2


def test_split_classify_roundtrip(tmp_path, capsys):
    f = dump("proj_identity_C2", tmp_path / "p.json", capsys)
    code, out, _ = run(["split", str(f)], capsys)
    assert code == 0
    assert json.loads(out)["result"]["rank"] == 1
    code, out, _ = run(["classify", str(f)], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["level"] == "v4"
    code, out, _ = run(["roundtrip", str(f)], capsys)
    assert code == 0


def test_classify_deterministic(tmp_path, capsys):
    f = dump("proj_identity_C2", tmp_path / "p.json", capsys)
    _, out1, _ = run(["classify", str(f)], capsys)
    _, out2, _ = run(["classify", str(f)], capsys)
    assert out1 == out2


def test_text_format(tmp_path, capsys):
    f = dump("triv_C2_Q", tmp_path / "b.json", capsys)
    code, out, _ = run(["validate", str(f), "--format", "text"], capsys)
    assert code == 0
    assert "[PASS]" in out


def test_catalog_dump_unknown_exits_2(capsys):
    code, _, err = run(["catalog", "dump", "nope"], capsys)
    assert code == 2
