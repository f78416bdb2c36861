import json
import subprocess
import sys
from pathlib import Path

import pytest

from conftest import G
from dualgraph import io, named
from dualgraph.cli import main

GOLDEN = Path(__file__).parent / "golden"

POINT_DOC = """{
  "format_version": "1",
  "kind": "graph",
  "vertices": [
    {"id": 0, "genus": 0, "weight": 1}
  ],
  "edges": []
}
"""


def test_serialize_point(point):
    assert io.serialize(point) == POINT_DOC
    assert io.parse(POINT_DOC) == point


@pytest.mark.parametrize("name", named.golden_names())
def test_golden_documents(name):
    text = (GOLDEN / f"{name}.json").read_text()
    g, doc_name = io.parse_named(text)
    assert doc_name == name
    assert g == named.named(name)
    assert io.serialize(g, name) == text
    assert io.serialize(io.parse(io.serialize(g))) == io.serialize(g)


def test_named_shapes():
    assert len(named.named("A9")) == 9
    assert named.named("D5").edges == [(0, 1), (1, 2), (2, 3), (2, 4)]
    assert named.named("E6").edges == [(0, 1), (1, 2), (2, 3), (2, 5), (3, 4)]
    assert named.named("star-3-2") == G({0: (0, 3), 1: (0, 1), 2: (0, 1)}, [(0, 1), (0, 2)])
    with pytest.raises(KeyError):
        named.named("F4")


def test_parse_is_canonicalising():
    messy = json.dumps(
        {
            "format_version": "1",
            "edges": [[2, 0]],
            "vertices": [
                {"weight": 2, "genus": 0, "id": 2},
                {"id": 0, "genus": 0, "weight": 1},
            ],
        }
    )
    g = io.parse(messy)
    assert io.serialize(g).count("[0, 2]") == 1


@pytest.mark.parametrize(
    "doc, message",
    [
        ('{"format_version": "1", "vertices": [{"id": 2, "genus": 0, "weight": 1}], "edges": [[2, 2]]}', "loop"),
        ('{"format_version": "1", "vertices": [{"id": 0, "genus": 0, "weight": 0}], "edges": []}', "weight < 1"),
        (
            '{"format_version": "1", "vertices": [{"id": 0, "genus": 0, "weight": 1},'
            ' {"id": 1, "genus": 0, "weight": 1}], "edges": [[0, 1], [1, 0]]}',
            "multi-edge",
        ),
        ('{"format_version": "1", "vertices": [', "line 1 column"),
        ('{"format_version": "7", "vertices": []}', "format_version"),
    ],
)
def test_parse_errors(doc, message):
    with pytest.raises(io.DocumentError, match=message):
        io.parse(doc)


def run(argv, stdin=None, capsys=None, monkeypatch=None):
    if stdin is not None:
        import io as _io

        monkeypatch.setattr(sys, "stdin", _io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def cli(capsys, monkeypatch):
    return lambda argv, stdin=None: run(argv, stdin, capsys, monkeypatch)


def test_cli_named_point_is_regular(cli):
    _, doc, _ = cli(["named", "point"])
    code, out, _ = cli(["is-regular", "-"], doc)
    assert code == 0
    assert out.splitlines() == ["yes", "blowdown order: []"]


def test_cli_a2_is_sandwiched(cli, tmp_path):
    _, doc, _ = cli(["named", "A2"])
    code, out, err = cli(["is-sandwiched", "--budget", "4", "-"], doc)
    assert code == 0 and err.startswith("yes")
    witness = json.loads(out)
    assert witness["kind"] == "sandwich-witness"
    assert sum(n for _, n in witness["leaves"]) == 1
    path = tmp_path / "w.json"
    path.write_text(out)
    assert cli(["verify-witness", str(path)])[0] == 0


def test_cli_validate_loop(cli, tmp_path):
    path = tmp_path / "loop.json"
    path.write_text('{"format_version": "1", "vertices": [{"id": 2, "genus": 0, "weight": 1}], "edges": [[2, 2]]}')
    code, out, _ = cli(["validate", str(path)])
    assert code == 1 and "loop" in out
    code, out, _ = cli(["validate", "--json", str(path)])
    assert code == 1 and json.loads(out)["kind"] == "loop"


def test_cli_usage_and_parse_errors(cli, tmp_path):
    assert cli(["is-regular", str(tmp_path / "missing.json")])[0] == 2
    assert cli(["is-regular", "-"], "{not json")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["blowup", "-"])
    assert exc.value.code == 2
    _, doc, _ = cli(["named", "A2"])
    assert cli(["blowup", "--edge", "0,5", "-"], doc)[0] == 2
    assert cli(["named", "Q3"])[0] == 2


def test_cli_blowup_and_blowdown(cli):
    _, doc, _ = cli(["named", "point"])
    code, out, _ = cli(["blowup", "--vertex", "0", "-"], doc)
    assert code == 0
    assert io.parse(out) == G({0: (0, 2), 1: (0, 1)}, [(0, 1)])
    code, out2, _ = cli(["blowup", "--edge", "0,1", "--new-id", "9", "-"], out)
    assert io.parse(out2) == G({0: (0, 3), 1: (0, 2), 9: (0, 1)}, [(0, 9), (1, 9)])
    code, back, _ = cli(["blowdown", "--vertex", "9", "-"], out2)
    assert code == 0 and back == out
    code, msg, _ = cli(["blowdown", "--vertex", "0", "-"], out2)
    assert code == 1 and "weight" in msg


def test_cli_matrix_commands(cli):
    _, doc, _ = cli(["named", "A2"])
    code, out, _ = cli(["matrix", "--json", "-"], doc)
    assert json.loads(out)["entries"] == [[-2, 1], [1, -2]]
    assert cli(["det", "-"], doc)[1].strip() == "3"
    assert cli(["negdef", "-"], doc)[:2] == (0, "yes\n")
    pair = io.serialize(G({0: (0, 1), 1: (0, 1)}, [(0, 1)]))
    assert cli(["negdef", "-"], pair)[0] == 1


def test_cli_self_similar_and_extract(cli, tmp_path):
    _, doc, _ = cli(["named", "A3"])
    code, out, _ = cli(["is-self-similar", "-"], doc)
    assert code == 0
    path = tmp_path / "ss.json"
    path.write_text(out)
    assert cli(["verify-witness", str(path)])[0] == 0
    code, out, err = cli(["extract", str(path)])
    assert code == 0 and "k = 1" in err
    extraction = json.loads(out)
    assert extraction["kind"] == "extraction"


def test_cli_negative_verdicts(cli):
    genus = io.serialize(G({0: (1, 1)}))
    code, out, err = cli(["is-sandwiched", "-"], genus)
    assert code == 1 and out == "" and err.startswith("definitely-not")
    _, e8, _ = cli(["named", "E8"])
    code, out, _ = cli(["is-self-similar", "--budget", "2", "--json", "-"], e8)
    assert code == 1 and json.loads(out)["verdict"] == "no-within-budget"
    disconnected = io.serialize(G({0: (0, 2), 1: (0, 2)}))
    assert cli(["is-sandwiched", "-"], disconnected)[0] == 2


def test_cli_verify_rejects_tampered_witness(cli):
    _, doc, _ = cli(["named", "point"])
    _, out, _ = cli(["is-self-similar", "-"], doc)
    tampered = json.loads(out)
    tampered["embedding"] = [[0, 0]]
    code, msg, _ = cli(["verify-witness", "-"], json.dumps(tampered))
    assert code == 1 and "label mismatch" in msg


def test_cli_json_and_human_agree(cli):
    for name in named.golden_names():
        _, doc, _ = cli(["named", name])
        for cmd in (["is-regular"], ["negdef"], ["is-sandwiched", "--budget", "8"], ["is-self-similar", "--budget", "8"]):
            h_code, h_out, h_err = cli(cmd + ["-"], doc)
            j_code, j_out, _ = cli(cmd + ["--json", "-"], doc)
            assert h_code == j_code
            payload = json.loads(j_out)
            verdict = payload.get("verdict", "yes" if payload.get("negative_definite") else "no")
            human = (h_err or h_out).split(":")[0].split()[0]
            assert human == verdict


def test_cli_roundtrip(cli):
    code, out, _ = cli(["roundtrip", "--seed", "3", "--count", "25"])
    assert code == 0 and out.startswith("25/25")


def test_cli_export_dot(cli):
    _, doc, _ = cli(["named", "A2"])
    _, out, _ = cli(["export-dot", "-"], doc)
    assert '0 [label="0:(0,2)"];' in out
    assert "0 -- 1;" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dualgraph", "named", "point"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == io.serialize(named.named("point"), "point")
