"""CLI contract: CSV formats, manifests, replay, error surfacing."""

import json
import math
import os

import numpy as np
import pytest
from click.testing import CliRunner

from kerrdimer.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def read_csv(path):
    with open(path) as fh:
        lines = fh.read().split("\n")
    assert lines[-1] == ""  # trailing LF
    return lines[:-1]


def test_trace_csv_contract(runner, tmp_path):
    out = tmp_path / "t.csv"
    result = runner.invoke(
        main,
        ["trace", "--p", "1", "--q", "0", "--chi-over-g", "0.34",
         "--t-max", "3.141592653589793", "--steps", "5", "--out", str(out)],
    )
    assert result.exit_code == 0, result.output
    lines = read_csv(out)
    assert lines[0] == "gt,entropy,n1,n2,delta_n"
    assert len(lines) == 6
    rows = [line.split(",") for line in lines[1:]]
    assert all(len(r) == 5 for r in rows)
    # 15-significant-digit, locale-independent rendering
    assert rows[1][0] == f"{math.pi / 4:.15g}"
    assert "," not in rows[0][0] and "." in rows[1][0]
    # quarter-period row: ln 2 entropy, balanced populations
    assert float(rows[1][1]) == pytest.approx(math.log(2.0), abs=1e-10)
    assert float(rows[1][2]) == pytest.approx(0.5, abs=1e-10)
    assert float(rows[1][4]) == pytest.approx(0.0, abs=1e-10)


def test_trace_vacuum_all_zero(runner, tmp_path):
    out = tmp_path / "v.csv"
    result = runner.invoke(
        main, ["trace", "--p", "0", "--q", "0", "--steps", "4", "--out", str(out)]
    )
    assert result.exit_code == 0
    for line in read_csv(out)[1:]:
        assert [float(v) for v in line.split(",")[1:]] == [0.0, 0.0, 0.0, 0.0]


def test_trace_manifest_written(runner, tmp_path):
    out = tmp_path / "m.csv"
    result = runner.invoke(
        main, ["trace", "--p", "2", "--q", "1", "--out", str(out)]
    )
    assert result.exit_code == 0
    with open(str(out) + ".manifest.json") as fh:
        manifest = json.load(fh)
    assert manifest["command"] == "trace"
    assert manifest["parameters"] == {
        "p": 2, "q": 1, "chi_over_g": 0.34, "t_max": 12.0, "steps": 2400,
    }
    assert manifest["output"] == str(out)
    assert set(manifest) == {
        "command", "parameters", "artifact_version", "output", "timestamp",
    }


def test_trace_replay_reproduces_bytes(runner, tmp_path):
    out = tmp_path / "r.csv"
    args = ["trace", "--p", "2", "--q", "0", "--t-max", "6", "--steps", "600",
            "--out", str(out)]
    assert runner.invoke(main, args).exit_code == 0
    first = out.read_bytes()
    with open(str(out) + ".manifest.json") as fh:
        manifest = json.load(fh)
    replay_args = ["trace"]
    for key, value in manifest["parameters"].items():
        replay_args += [f"--{key.replace('_', '-')}", str(value)]
    replay_args += ["--out", str(out)]
    assert runner.invoke(main, replay_args).exit_code == 0
    assert out.read_bytes() == first


def test_trace_capacity_error_names_limit(runner, tmp_path):
    result = runner.invoke(
        main, ["trace", "--p", "40", "--q", "0", "--out", str(tmp_path / "x.csv")]
    )
    assert result.exit_code != 0
    assert "L_MAX = 30" in result.output


def test_trace_usage_error(runner):
    assert runner.invoke(main, ["trace", "--q", "0"]).exit_code == 2


def test_out_dir_env_sets_default_location(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("OUT_DIR", str(tmp_path))
    result = runner.invoke(main, ["trace", "--p", "1", "--q", "0", "--steps", "4"])
    assert result.exit_code == 0, result.output
    assert (tmp_path / "trace.csv").exists()
    assert (tmp_path / "trace.csv.manifest.json").exists()


def test_maxscan_single_row(runner, tmp_path):
    out = tmp_path / "s.csv"
    result = runner.invoke(
        main,
        ["maxscan", "--l-max", "1", "--ratios", "0,0.34", "--t-max", "40",
         "--out", str(out)],
    )
    assert result.exit_code == 0, result.output
    lines = read_csv(out)
    assert lines[0] == "L,ratio,e_star,t_star,ln_Lplus1,gap"
    assert len(lines) == 3
    for line in lines[1:]:
        row = [float(v) for v in line.split(",")]
        assert row[0] == 1.0
        assert row[2] == pytest.approx(math.log(2.0), abs=1e-10)
        assert row[5] == pytest.approx(0.0, abs=1e-10)


def test_maxscan_rejects_empty_ratios(runner, tmp_path):
    result = runner.invoke(
        main, ["maxscan", "--ratios", ",", "--out", str(tmp_path / "x.csv")]
    )
    assert result.exit_code != 0


def test_envelope_sections_and_dominance(runner, tmp_path):
    out = tmp_path / "e.csv"
    result = runner.invoke(
        main,
        ["envelope", "--l", "2", "--chi-over-g", "0.34", "--t-max", "30",
         "--steps", "3000", "--out", str(out)],
    )
    assert result.exit_code == 0, result.output
    content = out.read_text()
    scatter_block, envelope_block = content.split("\n\n")
    scatter = scatter_block.split("\n")
    envelope = envelope_block.split("\n")[:-1]
    assert scatter[0] == "delta_n,entropy"
    assert envelope[0] == "delta_n_grid,e_jaynes"
    assert len(scatter) == 3001
    assert len(envelope) >= 202
    grid = np.array([[float(v) for v in line.split(",")] for line in envelope[1:]])
    assert grid[0, 0] == -2.0 and grid[-1, 0] == 2.0
    assert grid[0, 1] == 0.0 and grid[-1, 1] == 0.0
    center = grid[np.abs(grid[:, 0]).argmin()]
    assert center[1] == pytest.approx(math.log(3.0), abs=1e-10)
    # every scatter point sits at or below the exact envelope
    from kerrdimer import jaynes_entropy

    points = np.array([[float(v) for v in line.split(",")] for line in scatter[1:]])
    for dn, entropy in points:
        assert entropy <= jaynes_entropy(float(np.clip(dn, -2.0, 2.0)), 2) + 1e-9


def test_envelope_center_value_for_l4(runner, tmp_path):
    out = tmp_path / "e4.csv"
    result = runner.invoke(
        main,
        ["envelope", "--l", "4", "--t-max", "5", "--steps", "50", "--out", str(out)],
    )
    assert result.exit_code == 0
    envelope = read_csv(out)
    start = envelope.index("delta_n_grid,e_jaynes")
    rows = [[float(v) for v in line.split(",")] for line in envelope[start + 1:]]
    center = min(rows, key=lambda r: abs(r[0]))
    assert center[1] == pytest.approx(math.log(5.0), abs=1e-10)


def test_verify_quick_passes(runner):
    result = runner.invoke(main, ["verify", "--quick"])
    assert result.exit_code == 0, result.output
    lines = [l for l in result.output.strip().split("\n") if l]
    assert sum(l.startswith("PASS") for l in lines) == 11
    assert not any(l.startswith("FAIL") for l in lines)
