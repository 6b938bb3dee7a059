"""End-to-end CLI behaviour: formats, exit codes, report files."""

import csv
import io
import json

import pytest

from padkit import cli, core, decimation
from padkit.errors import CertificateMismatch


@pytest.fixture(autouse=True)
def _restore_index_cap():
    # the env hook mutates process-wide state; keep tests independent
    old = core.index_cap()
    yield
    core.set_index_cap(old)


def run(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_eval_plain(capsys):
    rc, out, err = run(capsys, "eval", "38")
    assert rc == 0
    assert out == "31572\n"
    assert err == ""


def test_eval_negative_index(capsys):
    rc, out, _ = run(capsys, "eval", "-10")
    assert rc == 0
    assert out.strip() == "2"


def test_eval_check_agrees(capsys):
    rc, out, _ = run(capsys, "eval", "500", "--check", "--strategy", "decimated:9")
    assert rc == 0
    assert out.strip() == str(core.pad(500))


def test_eval_check_detects_disagreement(capsys, monkeypatch):
    real = decimation.evaluate

    def skewed(n, strategy="iter"):
        value = real(n, strategy)
        return value + 1 if strategy == "matrix" else value

    monkeypatch.setattr(decimation, "evaluate", skewed)
    rc, _, err = run(capsys, "eval", "10", "--check")
    assert rc == 1
    assert "disagreement" in err


def test_eval_json_envelope(capsys):
    rc, out, _ = run(capsys, "eval", "40", "--format", "json", "--deterministic")
    assert rc == 0
    doc = json.loads(out)
    assert doc["tool"] == "padkit"
    assert doc["command"] == "eval"
    assert "timestamp" not in doc
    assert doc["result"]["value"] == "55405"
    assert isinstance(doc["result"]["n"], int)
    # canonical rendering round-trips byte-for-byte
    assert json.dumps(doc, indent=2) + "\n" == out


def test_json_timestamp_present_by_default(capsys):
    rc, out, _ = run(capsys, "eval", "5", "--format", "json")
    assert rc == 0
    assert "timestamp" in json.loads(out)


def test_eval_big_value_json(capsys):
    rc, out, _ = run(capsys, "eval", "30000", "--format", "json", "--deterministic")
    assert rc == 0
    value = json.loads(out)["result"]["value"]
    assert int(value) == core.pad(30000)


def test_coeffs_negative_range(capsys):
    rc, out, _ = run(capsys, "coeffs", "-8..0")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].split() == ["a", "rho", "sigma"]
    first = lines[1].split()
    assert first == ["-8", "5", "-10"]
    assert len(lines) == 10  # header + 9 steps


def test_coeffs_csv(capsys):
    rc, out, _ = run(capsys, "coeffs", "1..8", "--format", "csv")
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["a", "rho", "sigma"]
    assert rows[8] == ["8", "10", "-5"]


def test_reduce_plain(capsys):
    rc, out, _ = run(capsys, "reduce", "38", "7")
    assert rc == 0
    fields = dict(line.split(None, 1) for line in out.splitlines())
    assert fields["b"] == "3"
    assert fields["m"] == "5"
    assert (fields["c2"], fields["c1"], fields["c0"]) == ("358", "57", "50")
    assert fields["heads"].split() == ["17", "10", "3"]
    assert fields["value"] == "31572"


def test_reduce_csv_row(capsys):
    rc, out, _ = run(capsys, "reduce", "38", "7", "--format", "csv")
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][0] == "n"
    assert rows[1] == ["38", "7", "3", "5", "358", "57", "50", "17", "10", "3", "31572"]


def test_table_plain_values(capsys):
    rc, out, _ = run(capsys, "table", "5", "4")
    assert rc == 0
    numbers = [int(tok) for line in out.splitlines() for tok in line.split()]
    assert numbers == [core.pad(n) for n in range(1, 21)]


def test_sums_scalar_and_series(capsys):
    rc, out, _ = run(capsys, "sums", "4", "4", "4")
    assert rc == 0
    assert out.strip() == "295"

    rc, out, _ = run(capsys, "sums", "4", "4", "4", "--series", "--format", "json",
                     "--deterministic")
    assert rc == 0
    doc = json.loads(out)
    assert doc["result"]["values"] == ["2", "9", "30", "95", "295"]


def test_qr_range(capsys):
    rc, out, _ = run(capsys, "qr", "0..3", "--format", "csv")
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1:] == [["0", "2", "0"], ["1", "1", "1"], ["2", "2", "0"],
                        ["3", "2", "2"]]


def test_verify_quick(capsys):
    rc, out, _ = run(capsys, "verify", "--quick")
    assert rc == 0
    assert "FAIL" not in out
    assert out.count("PASS") == 20


def test_verify_deterministic_bytes(capsys):
    args = ("verify", "--quick", "--deterministic", "--format", "json")
    rc1, out1, _ = run(capsys, *args)
    rc2, out2, _ = run(capsys, *args)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_verify_out_dir(capsys, tmp_path):
    rc, _, _ = run(capsys, "verify", "--quick", "--deterministic",
                   "--out-dir", str(tmp_path))
    assert rc == 0
    doc = json.loads((tmp_path / "verify.json").read_text())
    assert len(doc["result"]["identities"]) == 20
    rows = list(csv.reader((tmp_path / "verify.csv").open()))
    assert rows[0] == ["identity", "range", "checked", "failures", "status"]
    assert len(rows) == 21
    png = (tmp_path / "verify_checks.png").read_bytes()
    assert png[:4] == b"\x89PNG"


def test_bench_small_ladder(capsys, tmp_path):
    rc, out, _ = run(capsys, "bench", "--ladder", "30,90", "--reps", "3",
                     "--format", "json", "--deterministic",
                     "--out-dir", str(tmp_path))
    assert rc == 0
    doc = json.loads(out)
    entries = doc["result"]["entries"]
    assert len(entries) == 8
    lows = {e["low_digits"] for e in entries if e["n"] == 30}
    assert len(lows) == 1
    rows = list(csv.reader((tmp_path / "bench.csv").open()))
    assert rows[0][0] == "strategy"
    assert len(rows) == 9
    assert (tmp_path / "bench_times.png").read_bytes()[:4] == b"\x89PNG"


def test_bench_rejects_bad_reps(capsys):
    rc, _, err = run(capsys, "bench", "--ladder", "10", "--reps", "1")
    assert rc == 2
    assert "reps" in err


# --- exit-code mapping ---------------------------------------------------


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "coeffs", "8..1")[0] == 2
    assert run(capsys, "reduce", "5", "0")[0] == 2
    assert run(capsys, "sums", "4", "9", "5")[0] == 2
    assert run(capsys, "qr", "-3..3")[0] == 2
    assert run(capsys, "eval", "5", "--strategy", "fft")[0] == 2


def test_consistency_errors_exit_1(capsys, monkeypatch):
    def forced(n, a):
        raise CertificateMismatch("forced")

    monkeypatch.setattr(decimation, "reduce_to_head", forced)
    rc, _, err = run(capsys, "reduce", "38", "7")
    assert rc == 1
    assert "forced" in err


def test_argparse_failures_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["eval"])
    assert exc.value.code == 2


def test_index_cap_env(capsys, monkeypatch):
    monkeypatch.setenv(cli.INDEX_CAP_ENV, "50")
    rc, _, err = run(capsys, "eval", "100")
    assert rc == 2
    assert "cap" in err
    assert run(capsys, "eval", "40")[0] == 0


def test_index_cap_env_rejects_garbage(capsys, monkeypatch):
    monkeypatch.setenv(cli.INDEX_CAP_ENV, "zillion")
    rc, _, err = run(capsys, "eval", "5")
    assert rc == 2
    assert cli.INDEX_CAP_ENV in err


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0
    assert "padkit" in capsys.readouterr().out
