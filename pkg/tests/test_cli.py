import csv
import io
import json
import subprocess
import sys

import pytest

from gcifc import cli
from gcifc.core import ChannelParams
from gcifc.regimes import FLAG_NAMES


def run(*argv):
    return cli.main(list(argv))


def rows(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_classify_output(capsys):
    assert run("classify", "--P1", "10", "--P2", "10", "--a-re", "-1", "--b-mag", "2") == 0
    out = capsys.readouterr().out
    assert "pdc" in out.split("\n")[0]
    assert "Q0: 87.0" in out and "Q1: 927.0" in out and "very_strong_lhs: -90.0" in out


def test_classify_weak_and_complex(capsys):
    assert run("classify", "--b-mag", "0.5", "--format", "json") == 0
    assert "weak" in json.loads(capsys.readouterr().out)["flags"]
    assert run("classify", "--a-re", "0.5", "--a-im", "0.3", "--b-mag", "2", "--format", "json") == 0
    info = json.loads(capsys.readouterr().out)
    assert "degraded" not in info["flags"] and info["channel"]["a_im"] == 0.3


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"channel": {"a_re": -1, "b_mag": 2, "P1": 10, "P2": 10},
                               "outputs": {"format": "json", "path": str(tmp_path)}}))
    assert run("classify", "--config", str(cfg)) == 0
    assert "pdc" in json.loads(capsys.readouterr().out)["flags"]
    # flat flags win over the file
    assert run("classify", "--config", str(cfg), "--b-mag", "0.5") == 0
    assert "weak" in json.loads(capsys.readouterr().out)["flags"]


@pytest.mark.parametrize("content", [
    "{not json",
    "[1, 2]",
    json.dumps({"channel": {"b_mag": -1, "P1": 1, "P2": 1}}),
    json.dumps({"grids": {"alpha": 1}}),
    json.dumps({"outputs": {"format": "png"}}),
    json.dumps({"a_range": [1]}),
])
def test_config_errors_exit_2(tmp_path, capsys, content):
    cfg = tmp_path / "bad.json"
    cfg.write_text(content)
    assert run("classify", "--config", str(cfg)) == cli.EXIT_CONFIG
    assert "error" in capsys.readouterr().err


def test_missing_config_exit_2(tmp_path):
    assert run("classify", "--config", str(tmp_path / "nope.json")) == cli.EXIT_CONFIG


def test_region_span_below_one_exit_2(tmp_path):
    assert run("region", "--out", str(tmp_path), "--lambda-span", "0.5") == cli.EXIT_CONFIG


def test_io_error_exit_3(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    assert run("region", "--out", str(blocker / "sub"), "--alpha-grid", "5", "--lambda-grid", "5") == cli.EXIT_IO


def test_region_files(tmp_path):
    out = tmp_path / "fig8"
    assert run("region", "--out", str(out), "--a-re", "2", "--b-mag", "3", "--P1", "6", "--P2", "6",
               "--alpha-grid", "101", "--lambda-grid", "41") == 0
    for name in ("outer_region", "inner_region", "perfect_dpc", "any_dpc", "sum_rate_optimal"):
        assert rows(out / f"{name}.csv")[0] == ["r1_bits", "r2_bits"]
    corners = json.loads((out / "corners.json").read_text())
    assert set(corners) >= {"A", "B", "C"}
    assert rows(out / "sum_rate_roots.csv")[0] == ["alpha", "lambda_root_1", "lambda_root_2"]


def test_region_p1_zero_segment(tmp_path):
    assert run("region", "--out", str(tmp_path), "--P1", "0", "--alpha-grid", "5", "--lambda-grid", "5") == 0
    for name in ("outer_region", "inner_region"):
        pts = [tuple(map(float, r)) for r in rows(tmp_path / f"{name}.csv")[1:]]
        assert all(x == 0.0 for x, _ in pts)


def test_region_json_and_svg(tmp_path):
    assert run("region", "--out", str(tmp_path / "j"), "--format", "json", "--alpha-grid", "11",
               "--lambda-grid", "5") == 0
    assert isinstance(json.loads((tmp_path / "j" / "outer_region.json").read_text()), list)
    assert run("region", "--out", str(tmp_path / "s"), "--format", "svg", "--alpha-grid", "11",
               "--lambda-grid", "5") == 0
    assert (tmp_path / "s" / "regions.svg").read_text().startswith("<svg")
    assert (tmp_path / "s" / "outer_region.csv").exists()


def test_map_small(tmp_path):
    assert run("map", "--out", str(tmp_path), "--resolution", "2", "--powers", "1", "10") == 0
    r = rows(tmp_path / "regime_map.csv")
    assert r[0] == ["a", "b_mag", *FLAG_NAMES] and len(r) == 5
    assert len(rows(tmp_path / "gap_condition_P1.csv")) == 5
    assert (tmp_path / "gap_condition_P10.csv").exists()


def test_lambda_sweep_files(tmp_path):
    out = tmp_path / "fig3"
    args = ["lambda-sweep", "--out", str(out), "--a-re", str(0.3 ** 0.5), "--b-mag", str(2 ** 0.5),
            "--P1", "6", "--P2", "6", "--alpha", "0.5", "--lambda-grid", "101"]
    assert run(*args) == 0
    r = rows(out / "lambda_sweep.csv")
    assert r[0] == ["lambda_re", "lambda_im", "r1_bits", "r2_bits", "sum_bits"]
    info = json.loads((out / "sweep_info.json").read_text())
    data = [list(map(float, x)) for x in r[1:]]
    best = max(data, key=lambda x: x[2])
    worst = min(data, key=lambda x: x[3])
    assert best[0] == info["lambda_costa_1"][0]
    assert worst[0] == info["lambda_costa_2"][0]
    assert rows(out / "point_d.csv")[0] == ["lambda_re", "lambda_im", "d_r1_bits", "d_r2_bits"]
    assert len(info["outer_corner_C"]) == 2


def test_lambda_sweep_single_row(tmp_path):
    assert run("lambda-sweep", "--out", str(tmp_path), "--lambda-span", "0") == 0
    assert len(rows(tmp_path / "lambda_sweep.csv")) == 2


def test_gap_command(capsys):
    assert run("gap", "--a-re", "-1", "--b-mag", "2", "--P1", "10", "--P2", "10") == 0
    info = json.loads(capsys.readouterr().out)
    assert info["applicable"] and info["additive_ok"] and info["multiplicative_ok"]


def test_verify_exit_codes(capsys):
    assert run("verify", "--num-channels", "0") == 0
    assert "overall: PASS" in capsys.readouterr().out
    assert run("verify", "--num-channels", "20", "--seed", "3") == 0
    assert run("verify", "--num-channels", "5", "--tolerance", "-1") == cli.EXIT_VERIFY


def test_verify_deterministic():
    a, b = io.StringIO(), io.StringIO()
    cli.cmd_verify(4, 30, stream=a)
    cli.cmd_verify(4, 30, stream=b)
    assert a.getvalue() == b.getvalue()


def test_region_deterministic(tmp_path):
    for d in ("x", "y"):
        run("region", "--out", str(tmp_path / d), "--alpha-grid", "31", "--lambda-grid", "11")
    for name in ("outer_region.csv", "inner_region.csv", "corners.json", "sum_rate_roots.csv"):
        assert (tmp_path / "x" / name).read_bytes() == (tmp_path / "y" / name).read_bytes()


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "gcifc.cli", "classify", "--b-mag", "0.5"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "weak" in res.stdout


def test_figure_fixtures_table():
    assert set(cli.FIGURES) == {f"fig{k}" for k in range(2, 9)}
    assert cli.FIGURES["fig8"]["channel"] == ChannelParams(2.0, 3.0, 6.0, 6.0)
