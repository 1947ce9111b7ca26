import csv

import numpy as np
import pytest

from gpcb.cli import main, parse_code, parse_ebn0, build_spec, CliError, DEFAULTS
from gpcb.simulator import CSV_COLUMNS


def test_parse_code_named():
    code = parse_code("RS(63,53)")
    assert (code.kind, code.n, code.k) == ("rs", 63, 53)
    # case and spacing insensitive
    assert repr(parse_code("bch( 127, 113 )")) == repr(parse_code("BCH(127,113)"))


def test_parse_code_custom():
    code = parse_code("rs:7,3,2")
    assert (code.n, code.k, code.t) == (7, 3, 2)


def test_parse_code_rejects():
    with pytest.raises(CliError):
        parse_code("LDPC(100,50)")
    with pytest.raises(CliError):
        parse_code("rs:8,4,2")       # 8 is not 2^m - 1
    with pytest.raises(CliError):
        parse_code("rs:7,4,2")       # wrong k for t=2


def test_parse_ebn0():
    assert parse_ebn0("3.5") == [3.5]
    assert parse_ebn0("1:0.5:2") == [1.0, 1.5, 2.0]
    with pytest.raises(CliError):
        parse_ebn0("1:0:2")
    with pytest.raises(CliError):
        parse_ebn0("1:2")


def test_build_spec_c2():
    cfg = dict(DEFAULTS, code="BCH(63,51)", construction="c2")
    spec = build_spec(cfg)
    assert spec.construction == "c2"
    assert repr(spec) == "GPCB-BCH-RS(75,51)"
    with pytest.raises(CliError):
        build_spec(dict(DEFAULTS, code="RS(63,53)", construction="c2"))


def test_list_codes(capsys):
    assert main(["list-codes"]) == 0
    out = capsys.readouterr().out
    assert "GPCB-RS(73,53)" in out
    assert "GPCB-BCH-RS(271,239)" in out


def test_encode_decode_round_trip(tmp_path):
    rng = np.random.default_rng(1)
    msg = rng.integers(0, 8, 3)
    msg_file = tmp_path / "msg.txt"
    msg_file.write_text(" ".join(map(str, msg)))
    word_file = tmp_path / "word.txt"
    assert main(["encode", "--code", "rs:7,3,2", "--out", str(word_file),
                 str(msg_file)]) == 0
    word = np.array([int(t) for t in word_file.read_text().split()])
    assert word.tolist()[:3] == msg.tolist()

    # high-confidence LLRs from the codeword bits
    bits = ((word[:, None] >> np.arange(3)[None, :]) & 1).reshape(-1)
    llr_file = tmp_path / "llr.txt"
    llr_file.write_text(" ".join(f"{v:.1f}" for v in (2.0 * bits - 1.0) * 6))
    out_file = tmp_path / "dec.txt"
    assert main(["decode", "--code", "rs:7,3,2", "--iterations", "2",
                 "--out", str(out_file), str(llr_file)]) == 0
    dec = [int(t) for t in out_file.read_text().split()]
    assert dec == msg.tolist()


def test_simulate_writes_csv(tmp_path):
    out = tmp_path / "sim.csv"
    assert main(["simulate", "--code", "rs:7,3,2", "--ebn0", "2:1:3",
                 "--iterations", "2", "--min-frame-errors", "3",
                 "--max-frames", "20", "--seed", "4",
                 "--out", str(out)]) == 0
    with open(out) as fh:
        rows = list(csv.DictReader(fh))
    assert tuple(rows[0].keys()) == CSV_COLUMNS
    # 2 Eb/N0 points x 2 iterations
    assert len(rows) == 4
    assert {r["ebn0_db"] for r in rows} == {"2", "3"}
    assert all(r["code"] == "GPCB-RS(11,3)" for r in rows)


def test_config_file_and_override(tmp_path):
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text(
        "code: rs:7,3,2\nebn0: '2'\niterations: 2\n"
        "min_frame_errors: 3\nmax_frames: 10\nseed: 4\n")
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert main(["simulate", "--config", str(cfg), "--out", str(out1)]) == 0
    # CLI --max-frames overrides the file
    assert main(["simulate", "--config", str(cfg), "--max-frames", "5",
                 "--out", str(out2)]) == 0
    with open(out1) as fh:
        frames1 = int(list(csv.DictReader(fh))[0]["frames"])
    with open(out2) as fh:
        frames2 = int(list(csv.DictReader(fh))[0]["frames"])
    assert frames1 <= 10 and frames2 <= 5


def test_tune_outputs_schedule(tmp_path, capsys):
    assert main(["tune", "--code", "rs:7,3,2", "--ebn0", "3",
                 "--iterations", "1", "--min-frame-errors", "2",
                 "--max-frames", "10", "--seed", "2"]) == 0
    out = capsys.readouterr().out
    assert "alpha:" in out and "beta:" in out and "iterations: 1" in out


def test_missing_code_is_an_error(tmp_path, capsys):
    assert main(["simulate", "--ebn0", "2", "--out",
                 str(tmp_path / "x.csv")]) == 2
    assert "code" in capsys.readouterr().err


def test_simulate_requires_out(capsys):
    assert main(["simulate", "--code", "rs:7,3,2", "--ebn0", "2",
                 "--min-frame-errors", "1", "--max-frames", "2"]) == 2
    assert "--out" in capsys.readouterr().err
