import json

import pytest

from sbecdbed import params
from sbecdbed.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tables_matches_generator(capsys):
    code, out, _ = _run(capsys, "tables", "--table", "2", "--b", "5")
    assert code == 0
    assert out == params.to_csv(params.gen_table2([5]))
    assert _run(capsys, "tables", "--table", "2", "--b", "5")[1] == out


def test_tables_6(capsys):
    code, out, _ = _run(capsys, "tables", "--table", "6", "--b", "8")
    assert code == 0
    assert "8,1024,1048,24,T1;T3" in out.splitlines()


def test_best(capsys):
    code, out, _ = _run(capsys, "best", "--b", "8", "--k", "1024")
    assert code == 0
    assert '"(1048,1024)"' in out and "T1;T3" in out


def test_validate_pass_and_fail(capsys):
    code, out, _ = _run(capsys, "validate", "--b", "2", "--r", "5")
    assert code == 0 and out.strip() == "PASS singles=108 doubles=5670"
    code, out, _ = _run(capsys, "validate", "--b", "2", "--r", "3", "--double")
    assert code == 3 and out.startswith("FAIL") and "single-collision" in out


def test_diff(capsys):
    code, out, _ = _run(capsys, "diff", "--table", "2")
    assert code == 0
    assert "T2,7,5,\"(35,11300,118265)\",\"(35,118300,118265)\",misprint" in out
    code, out, _ = _run(capsys, "diff")
    assert code == 0 and ",attribution" in out


def test_construct_and_validate_file(capsys, tmp_path):
    path = tmp_path / "h.txt"
    assert _run(capsys, "construct", "--b", "3", "--r", "3", "-o", str(path))[0] == 0
    code, out, _ = _run(capsys, "validate", "--matrix", str(path))
    assert code == 0 and out.startswith("PASS singles=70")


def test_encode_decode_roundtrip(capsys, tmp_path):
    src = tmp_path / "in.bin"
    src.write_bytes(bytes(range(256)) * 3)
    enc, dec = tmp_path / "e.bin", tmp_path / "o.bin"
    common = ["--b", "4", "--r", "3"]
    assert _run(capsys, "encode", *common, "--input", str(src), "--output", str(enc))[0] == 0
    code, _, err = _run(capsys, "decode", *common, "--input", str(enc), "--output", str(dec))
    assert code == 0 and dec.read_bytes() == src.read_bytes()
    assert "Corrected=0" in err
    assert _run(capsys, "encode", *common, "--inject-seed", "9", "--input", str(src),
                "--output", str(enc))[0] == 0
    code, _, err = _run(capsys, "decode", *common, "--input", str(enc), "--output", str(dec))
    assert code == 0 and dec.read_bytes() == src.read_bytes()
    assert "DetectedUncorrectable=0" in err


def test_decode_wrong_code(capsys, tmp_path):
    enc = tmp_path / "e.bin"
    src = tmp_path / "in.bin"
    src.write_bytes(b"abc")
    _run(capsys, "encode", "--b", "4", "--r", "3", "--input", str(src), "--output", str(enc))
    code, _, err = _run(capsys, "decode", "--b", "5", "--r", "3", "--input", str(enc),
                        "--output", str(tmp_path / "o"))
    assert code == 4 and "error" in err


def test_simulate(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"b": 2, "r": 5, "trials": 300, "seed": 1,
                               "fault_models": [{"kind": "SingleByte"}]}))
    code, out, err = _run(capsys, "simulate", "--config", str(cfg))
    assert code == 0
    stats = json.loads(out)
    assert stats["trials"] == 300 and stats["miscorrected"] == 0
    assert err.startswith("trials=300")
    cfg.write_text("{not json")
    assert _run(capsys, "simulate", "--config", str(cfg))[0] == 4


def test_rs(capsys):
    code, out, _ = _run(capsys, "rs", "--b", "3", "--t", "1", "--encode", "1,0,0,0,0")
    assert code == 0
    cw = [int(v) for v in out.strip().split(",")]
    bad = list(cw)
    bad[4] ^= 6
    code, out, _ = _run(capsys, "rs", "--b", "3", "--t", "1", "--decode", ",".join(map(str, bad)))
    assert code == 0 and [int(v) for v in out.strip().split(",")] == cw
    assert _run(capsys, "rs", "--b", "3", "--t", "2", "--distance")[1].strip() == "5"
    assert _run(capsys, "rs", "--b", "3", "--t", "3")[0] == 2


@pytest.mark.parametrize("argv,code", [
    (["bogus"], 2),
    (["tables"], 2),
    (["validate"], 2),
    (["validate", "--matrix", "/nonexistent/h.txt"], 4),
])
def test_error_codes(capsys, argv, code):
    assert run(argv) == code
