import io
import json
from pathlib import Path

import pytest

from kodlat import cli, transition
from kodlat.e8 import E8Vector
from kodlat.embed import RankTwoForm, embedding_result
from kodlat.lattice import lattice_from_json, named_lattice

GOLDEN = Path(__file__).parent / "golden"


def call(*argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    buf = io.StringIO()
    rc = cli.run(list(argv), out=buf)
    return rc, buf.getvalue()


def test_roots_e8():
    assert call("roots", "--named", "E8") == (0, "240\n")


def test_roots_list_and_json():
    rc, out = call("roots", "--gram", "[[-2,1],[1,-2]]", "--list")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "6" and json.loads(lines[1]) == [-1, -1]
    rc, out = call("roots", "--named", "D4", "--format", "json")
    doc = json.loads(out)
    assert doc["schema_version"] == 1 and doc["count"] == 24
    assert lattice_from_json(doc["lattice"]) == named_lattice("D4")


def test_roots_from_file_and_stdin(tmp_path, monkeypatch):
    f = tmp_path / "a2.json"
    f.write_text('{"gram": [[-2, 1], [1, -2]]}')
    assert call("roots", str(f)) == (0, "6\n")
    assert call("roots", "-", stdin='{"gram": [[-2]]}', monkeypatch=monkeypatch) == (0, "2\n")


def test_malformed_json_reports_location(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text('{"gram": [[-2, 1],\n [1, -2]')
    rc, out = call("roots", str(f))
    assert rc == 2
    err = json.loads(out)["error"]
    assert err["kind"] == "input" and "line 2" in err["message"]


def test_rejected_query_is_structured():
    rc, out = call("roots", "--named", "U")
    doc = json.loads(out)
    assert rc == 2 and doc["schema_version"] == 1 and doc["error"]["kind"] == "rejected"
    rc, out = call("roots")
    assert rc == 2 and json.loads(out)["error"]["kind"] == "input"
    assert call("roots", "nonexistent.json")[0] == 2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as e:
        cli.run(["frobnicate"], out=io.StringIO())
    assert e.value.code == 2


def test_embed_paper_ir_alt1():
    rc, out = call("embed", "--paper", "IR_alt1")
    assert rc == 0 and "root_count=30 weight=27" in out


def test_embed_json_roundtrip(tmp_path):
    target = tmp_path / "out.json"
    rc, out = call("embed", "--gram", "[[-2,1],[1,-6]]", "--json", str(target), "--format", "json")
    assert rc == 0 and target.read_text() == out
    doc = json.loads(out)
    assert doc["mode"] == "first_root_fixed" and len(doc["results"]) == 1
    for r in doc["results"]:
        again = embedding_result(RankTwoForm.from_gram(r["form"]), E8Vector.from_json(r["v1"]),
                                 E8Vector.from_json(r["v2"]), r["pair_count"])
        assert again.to_json() == r
        assert r["root_count"] == 40 and r["weight"] == 32


def test_embed_csv_and_errors():
    rc, out = call("embed", "--paper", "cub", "--format", "csv")
    assert rc == 0 and out.splitlines()[1].startswith("72,48,True,1,")
    assert call("embed")[0] == 2
    assert call("embed", "--gram", "[[-2,1],[1,-1]]")[0] == 2


def test_family_builtin_and_custom():
    rc, out = call("family", "IR")
    doc = json.loads(out)
    assert doc["w0"] == 32 and doc["discriminant_group"]["order"] == 19
    rc, out = call("family", "--custom", '{"t": 1, "D": 7, "split": false}')
    doc = json.loads(out)
    assert doc["block"] == [[-2, 1], [1, -4]] and doc["block_det"] == 7
    assert doc["signature"] == [2, 20]
    assert lattice_from_json(doc["lattice"]).det == 7
    assert call("family", "--custom", '{"t": 2, "D": 4, "split": true}')[0] == 2
    assert call("family", "--custom", '{"t": 1}')[0] == 2


@pytest.mark.parametrize("fmt", ["md", "csv", "json"])
def test_table_golden(fmt):
    rc, out = call("table", "--format", fmt)
    assert rc == 0
    assert out == (GOLDEN / f"table.{fmt}").read_text()
    assert call("table", "--format", fmt)[1] == out


def test_table_json_schema():
    doc = json.loads((GOLDEN / "table.json").read_text())
    assert doc["schema_version"] == 1 and doc["check"] == {"ok": True, "mismatches": []}
    assert [r["kappa_nonneg"] for r in doc["reports"]] == [14, 6, 7, 6, 11, 16]


def test_table_check(monkeypatch, capsys):
    assert call("table", "--check")[0] == 0
    monkeypatch.setitem(transition.PAPER_TABLE, "kappa_pos", (23, 13, 12, 12, 19, 21))
    assert call("table", "--check")[0] == 1
    assert "MISMATCH IKKR kappa_pos" in capsys.readouterr().err


def test_info():
    rc, out = call("info", "--format", "json")
    doc = json.loads(out)
    assert rc == 0 and doc["commands"] == ["roots", "embed", "family", "table", "info"]


@pytest.mark.parametrize("argv", [
    ("roots", "--named", "E7", "--list"), ("embed", "--paper", "EPW", "--format", "json"),
    ("family", "LLSS"), ("info",),
])
def test_byte_identical(argv):
    assert call(*argv) == call(*argv)
