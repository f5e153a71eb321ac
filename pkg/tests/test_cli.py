import json

from rotlat.cli import EXIT_INPUT_ERROR, EXIT_OK, EXIT_UNVERIFIED, main
from rotlat.constructions import module_to_json
from rotlat import TwistedModule
from helpers import get_module


def test_construct_writes_module(tmp_path, capsys):
    out = tmp_path / "module.json"
    code = main(["construct", "--construction", "p34", "--r", "3", "--p", "5",
                 "--out", str(out)])
    assert code == EXIT_OK
    obj = json.loads(out.read_text())
    assert obj["c"] == 20
    assert obj["construction"] == "p34"
    assert obj["field"]["family"] == "comp-pow2-odd"


def test_construct_validation_messages(tmp_path, capsys):
    code = main(["construct", "--construction", "p32", "--p", "4",
                 "--out", str(tmp_path / "x.json")])
    assert code == EXIT_INPUT_ERROR
    assert "p must be a prime >= 7" in capsys.readouterr().err

    code = main(["construct", "--construction", "p37", "--p1", "5", "--p2", "5",
                 "--out", str(tmp_path / "x.json")])
    assert code == EXIT_INPUT_ERROR
    assert "p1 != p2" in capsys.readouterr().err

    code = main(["construct", "--construction", "p34", "--r", "3",
                 "--out", str(tmp_path / "x.json")])
    assert code == EXIT_INPUT_ERROR
    assert "--p" in capsys.readouterr().err


def test_verify_round_trip(tmp_path, capsys):
    out = tmp_path / "module.json"
    assert main(["construct", "--construction", "p32", "--p", "7", "--out", str(out)]) == EXIT_OK
    code = main(["verify", str(out)])
    captured = capsys.readouterr()
    assert code == EXIT_OK
    report = json.loads(captured.out)
    assert report["verdict"] is True
    assert report["det_cross_check"]["equal"] is True
    assert report["det_cross_check"]["gram"] == report["det_cross_check"]["formula"] == "1372"


def test_verify_false_module_exits_one(tmp_path, capsys):
    m = get_module("p34", r=3, p=5)
    K = m.field
    ambient = TwistedModule(K, K.basis, m.alpha, m.c, "ambient")
    path = tmp_path / "ambient.json"
    path.write_text(json.dumps(module_to_json(ambient)))
    code = main(["verify", str(path)])
    captured = capsys.readouterr()
    assert code == EXIT_UNVERIFIED
    report = json.loads(captured.out)
    assert report["verdict"] is False
    assert report["checks"]["index_is_2"] is False


def test_verify_corrupted_json_exits_two(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code = main(["verify", str(path)])
    assert code == EXIT_INPUT_ERROR
    assert "parse error" in capsys.readouterr().err


def test_verify_missing_file_exits_two(tmp_path, capsys):
    code = main(["verify", str(tmp_path / "absent.json")])
    assert code == EXIT_INPUT_ERROR


def test_table1_stdout_and_file(tmp_path, capsys):
    assert main(["table1"]) == EXIT_OK
    text = capsys.readouterr().out
    assert "n,p,r,r1,p1,p2,p3,K1,K2,K3,K4,note" in text
    row3 = next(line for line in text.splitlines() if line.startswith("3,"))
    assert "0.369646" in row3
    row20 = next(line for line in text.splitlines() if line.startswith("20,"))
    assert "0.121175" in row20 and "0.104475" in row20
    row_big = next(line for line in text.splitlines() if line.startswith("32768,"))
    assert "0.00276258" in row_big and "0.00276222" in row_big
    n15 = next(line for line in text.splitlines() if line.startswith("15,"))
    assert "0.1380198" in n15

    out = tmp_path / "table.csv"
    assert main(["table1", "--out", str(out)]) == EXIT_OK
    assert out.read_text() == text


def test_feasibility_commands(capsys):
    assert main(["feasibility", "--family", "odd-prime", "--p", "11"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["verdict"] == "ImpossibleOddDisc"

    assert main(["feasibility", "--family", "pow2", "--r", "4"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["verdict"] == "KnownConstruction"

    assert main(["feasibility", "--family", "comp-odd-odd", "--p1", "5", "--p2", "7"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["verdict"] == "ImpossibleOddDisc"

    assert main(["feasibility", "--family", "odd-prime", "--p", "6"]) == EXIT_INPUT_ERROR
    capsys.readouterr()


def test_embed_precision_env_override(tmp_path, capsys, monkeypatch):
    out = tmp_path / "module.json"
    assert main(["construct", "--construction", "p32", "--p", "7", "--out", str(out)]) == EXIT_OK
    monkeypatch.setenv("ROTLAT_PRECISION", "64")
    assert main(["embed", str(out)]) == EXIT_OK
    text = capsys.readouterr().out
    assert text.startswith("# precision_bits=64")
    monkeypatch.delenv("ROTLAT_PRECISION")
    assert main(["embed", str(out), "--precision", "96"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("# precision_bits=96")


def test_byte_identical_reruns(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["construct", "--construction", "p37", "--p1", "5", "--p2", "7",
                     "--out", str(path)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()

    ta, tb = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (ta, tb):
        assert main(["table1", "--out", str(path)]) == EXIT_OK
    assert ta.read_bytes() == tb.read_bytes()
