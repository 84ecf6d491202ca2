"""End-to-end exercises of the command-line interface."""

from __future__ import annotations

import hashlib
import io
import json

import pytest

from golden import (
    TRACE8_EDGES,
    TRACE8_MAX_T,
    TRACE8_N,
    TRACE8_TEXT,
    TRACE8_T_STABLE_4,
    WALK16_ANSWER,
    WALK16_CROSSES,
    WALK16_DELTA,
)
from oracles import brute_stability
from ticonn import parse_trace, serialize_pattern
from ticonn.cli import cli


@pytest.fixture
def trace_file(tmp_path):
    path = tmp_path / "golden.trace"
    path.write_text(TRACE8_TEXT)
    return str(path)


@pytest.fixture
def walk_pattern_file(tmp_path):
    path = tmp_path / "walk.pattern"
    path.write_text(serialize_pattern(WALK16_DELTA, WALK16_CROSSES))
    return str(path)


def run(capsys, argv):
    code = cli(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def last_json(out: str) -> dict:
    return json.loads(out.strip().splitlines()[-1])


def test_maxt_report_shape(capsys, trace_file):
    code, out, _ = run(capsys, ["maxt", trace_file])
    report = last_json(out)
    assert code == 0
    assert report["schema"] == 1
    assert report["command"] == "maxt"
    assert report["algorithm"] == "optimal"
    assert report["result"] == TRACE8_MAX_T
    assert report["input_sha256"] == hashlib.sha256(TRACE8_TEXT.encode()).hexdigest()
    assert report["intersections"] > 0
    assert report["connectivity_tests"] > 0
    assert report["wall_time_s"] >= 0


@pytest.mark.parametrize("algo", ["naive", "rowbased", "optimal"])
def test_all_algorithms_agree_on_the_golden_trace(capsys, trace_file, algo):
    code, out, _ = run(capsys, ["maxt", trace_file, "--algo", algo])
    assert code == 0
    assert last_json(out)["result"] == TRACE8_MAX_T
    code, out, _ = run(capsys, ["check", trace_file, "--algo", algo, "--t", "3"])
    assert code == 0 and last_json(out)["result"] is True
    code, out, _ = run(capsys, ["check", trace_file, "--algo", algo, "--t", "4"])
    assert code == 0 and last_json(out)["result"] is False


def test_rowbased_accepts_workers(capsys, trace_file):
    code, out, _ = run(
        capsys, ["maxt", trace_file, "--algo", "rowbased", "--workers", "4"]
    )
    assert code == 0
    assert last_json(out)["result"] == TRACE8_MAX_T


def test_strict_turns_false_into_exit_one(capsys, trace_file):
    code, out, _ = run(capsys, ["check", trace_file, "--t", "4", "--strict"])
    assert code == 1
    assert last_json(out)["result"] is False
    code, _, _ = run(capsys, ["check", trace_file, "--t", "3", "--strict"])
    assert code == 0


def test_strict_maxt_zero_exits_one(capsys, tmp_path):
    path = tmp_path / "dead.trace"
    path.write_text("2 1 undirected\nstep 1 0\n")
    code, out, _ = run(capsys, ["maxt", str(path), "--strict"])
    assert code == 1
    assert last_json(out)["result"] == 0
    code, _, _ = run(capsys, ["maxt", str(path)])
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "/nonexistent/path.trace", "--t", "2"],
        ["check", "--t", "2", "--algo", "wrong", "-"],
        ["check", "-"],  # --t is required
        ["nonsense"],
        ["gen", "--n", "4", "--delta", "5", "--p", "1.5"],
        ["bench", "--deltas", "ten,twenty"],
    ],
)
def test_usage_and_input_errors_exit_two(capsys, monkeypatch, argv):
    monkeypatch.setattr("sys.stdin", io.StringIO("3 1 undirected\nstep 1 0\n"))
    assert cli(argv) == 2
    capsys.readouterr()


def test_malformed_trace_exits_two_with_line_number(capsys, tmp_path):
    path = tmp_path / "broken.trace"
    path.write_text("4 2 undirected\nstep 2 0\n")
    code, _, err = run(capsys, ["maxt", str(path)])
    assert code == 2
    assert "line 2" in err


def test_invalid_t_exits_two(capsys, trace_file):
    code, _, err = run(capsys, ["check", trace_file, "--t", "0"])
    assert code == 2
    assert "error:" in err
    code, _, _ = run(capsys, ["check", trace_file, "--t", "99"])
    assert code == 2


def test_synthetic_pattern_replay(capsys, walk_pattern_file):
    for algo in ("naive", "rowbased", "optimal"):
        code, out, _ = run(
            capsys, ["maxt", walk_pattern_file, "--synthetic", "--algo", algo]
        )
        assert code == 0
        assert last_json(out)["result"] == WALK16_ANSWER
    code, out, _ = run(
        capsys, ["check", walk_pattern_file, "--synthetic", "--t", "3"]
    )
    assert last_json(out)["result"] is True
    code, out, _ = run(
        capsys, ["check", walk_pattern_file, "--synthetic", "--t", "4"]
    )
    assert last_json(out)["result"] is False


def test_stream_prints_one_verdict_per_step(capsys, trace_file):
    code, out, _ = run(capsys, ["stream", trace_file, "--t", "4"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 9  # 8 verdicts plus the report
    labels = {None: "pending", True: "true", False: "false"}
    for idx, want in enumerate(TRACE8_T_STABLE_4, start=1):
        assert lines[idx - 1] == f"{idx} {labels[want]}"
    report = json.loads(lines[-1])
    assert report["command"] == "stream"
    assert report["algorithm"] == "online-t-checker"
    assert report["result"] == TRACE8_T_STABLE_4
    assert report["input_sha256"] == hashlib.sha256(TRACE8_TEXT.encode()).hexdigest()


def test_stability_values_match_the_oracle(capsys, trace_file):
    code, out, _ = run(capsys, ["stability", trace_file])
    assert code == 0
    lines = out.strip().splitlines()
    want = brute_stability(TRACE8_N, "undirected", [frozenset(e) for e in TRACE8_EDGES])
    assert [int(line.split()[1]) for line in lines[:-1]] == want
    report = json.loads(lines[-1])
    assert report["algorithm"] == "stability-stream"
    assert report["result"] == want


def test_stability_fixed_t_mode(capsys, trace_file):
    code, out, _ = run(capsys, ["stability", trace_file, "--t", "4"])
    assert code == 0
    report = last_json(out)
    assert report["algorithm"] == "t-stability-stream"
    assert report["result"] == TRACE8_T_STABLE_4


def test_streaming_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(TRACE8_TEXT))
    code, out, _ = run(capsys, ["stream", "-", "--t", "4"])
    assert code == 0
    assert last_json(out)["result"] == TRACE8_T_STABLE_4


def test_offline_commands_read_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(TRACE8_TEXT))
    code, out, _ = run(capsys, ["maxt"])
    assert code == 0
    assert last_json(out)["result"] == TRACE8_MAX_T


def test_gen_emits_a_parseable_trace_and_report(capsys):
    code, out, err = run(
        capsys, ["gen", "--n", "4", "--delta", "6", "--p", "0.5", "--seed", "9"]
    )
    assert code == 0
    trace = parse_trace(out)
    assert trace.n == 4 and trace.delta == 6
    report = last_json(err)
    assert report["command"] == "gen"
    assert report["result"]["seed"] == 9
    # same seed, same bytes
    _, again, _ = run(
        capsys, ["gen", "--n", "4", "--delta", "6", "--p", "0.5", "--seed", "9"]
    )
    assert again == out


def test_gen_honors_the_seed_env_var(capsys, monkeypatch):
    monkeypatch.setenv("TIC_SEED", "9")
    code, from_env, _ = run(capsys, ["gen", "--n", "4", "--delta", "6", "--p", "0.5"])
    assert code == 0
    monkeypatch.delenv("TIC_SEED")
    _, from_flag, _ = run(
        capsys, ["gen", "--n", "4", "--delta", "6", "--p", "0.5", "--seed", "9"]
    )
    assert from_env == from_flag


def test_gen_rejects_a_bad_seed_env_var(capsys, monkeypatch):
    monkeypatch.setenv("TIC_SEED", "lots")
    code, _, err = run(capsys, ["gen", "--n", "4", "--delta", "6"])
    assert code == 2
    assert "TIC_SEED" in err


def test_gen_planted_reports_ground_truth(capsys):
    code, out, err = run(
        capsys, ["gen", "--n", "5", "--delta", "12", "--planted-t", "3", "--seed", "2"]
    )
    assert code == 0
    report = last_json(err)
    assert report["result"]["ground_truth_max_t"] >= 1
    trace = parse_trace(out)
    assert trace.delta == 12
    code, _, _ = run(
        capsys,
        ["gen", "--n", "5", "--delta", "12", "--planted-t", "3", "--mode", "directed"],
    )
    assert code == 2


def test_gen_can_write_to_a_file(capsys, tmp_path):
    target = tmp_path / "out.trace"
    code, out, _ = run(
        capsys,
        ["gen", "--n", "3", "--delta", "4", "--seed", "1", "--out", str(target)],
    )
    assert code == 0
    assert out == ""
    assert parse_trace(target.read_text()).delta == 4


def test_gen_then_consume_the_file(capsys, tmp_path):
    target = tmp_path / "pipe.trace"
    run(capsys, ["gen", "--n", "5", "--delta", "10", "--p", "0.8", "--seed", "3",
                 "--out", str(target)])
    code, out, _ = run(capsys, ["maxt", str(target)])
    assert code == 0
    assert isinstance(last_json(out)["result"], int)


def test_bench_prints_a_table_and_report(capsys):
    code, out, err = run(
        capsys, ["bench", "--family", "naive", "--deltas", "40,80", "--n", "4"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split("\t")[:3] == ["family", "delta", "n"]
    assert len(lines) == 3
    report = last_json(err)
    assert report["command"] == "bench"
    assert len(report["result"]) == 2
    assert {row["delta"] for row in report["result"]} == {40, 80}


def test_help_exits_zero(capsys):
    assert cli(["--help"]) == 0
    capsys.readouterr()
