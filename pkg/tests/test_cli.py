"""Tests for the Typer CLI commands and exit codes."""

import json

import pytest
from typer.testing import CliRunner

from metric_lines import __version__
from metric_lines.cli.app import app, run
from metric_lines.formats.writers import format_edge_list, format_graph6
from tests.helpers import cycle

runner = CliRunner()

P3 = "3 2\n0 1\n1 2\n"
C5 = format_edge_list(cycle(5))


@pytest.fixture(autouse=True)
def _isolated_config(config_dir):
    return config_dir


def invoke(args, stdin=None):
    return runner.invoke(app, args, input=stdin)


class TestVersionCommand:
    def test_version_output(self):
        result = invoke(["version"])
        assert result.exit_code == 0
        assert __version__ in result.output


class TestLinesCLI:
    def test_path_json(self):
        result = invoke(["lines", "--format", "edgelist"], P3)
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["distinct_lines"] == 1
        assert data["has_universal"] is True

    def test_metric_file(self, tmp_path):
        path = tmp_path / "k3.txt"
        path.write_text("3\n0 1 1\n1 0 1\n1 1 0\n", encoding="utf-8")
        result = invoke(["lines", str(path)])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["lines"] == [[0, 1], [0, 2], [1, 2]]

    def test_pretty(self):
        result = invoke(["lines", "--output", "pretty"], P3)
        assert result.exit_code == 0
        assert "0 1 2" in result.output

    def test_bad_input(self):
        result = invoke(["lines"], "3 1\n0 9\n")
        assert result.exit_code == 1
        assert "line 2, column 3" in result.output

    def test_missing_file(self, tmp_path):
        result = invoke(["lines", str(tmp_path / "nope.txt")])
        assert result.exit_code == 1


class TestCheckCLI:
    def test_graph(self):
        result = invoke(["check"], C5)
        assert result.exit_code == 0
        verdict = json.loads(result.stdout)
        assert verdict["satisfies"] is True
        assert verdict["n"] == 5
        assert verdict["distinct_lines"] == 10
        assert verdict["has_universal"] is False

    def test_metric(self):
        result = invoke(["check", "--format", "metric"], "2\n0 3\n3 0\n")
        assert result.exit_code == 0
        assert json.loads(result.stdout)["has_universal"] is True

    def test_metric_axiom_violation(self):
        result = invoke(["check"], "3\n0 1 5\n1 0 1\n5 1 0\n")
        assert result.exit_code == 1


class TestRecognizeCLI:
    def test_five_cycle_not_dh(self):
        result = invoke(["recognize", "--output", "json"], C5)
        assert result.exit_code == 2
        data = json.loads(result.stdout)
        assert data["distance_hereditary"] is False
        assert data["residual_vertices"] == [0, 1, 2, 3, 4]

    def test_sequence_output(self):
        result = invoke(["recognize"], P3)
        assert result.exit_code == 0
        assert result.stdout.startswith("dh-seq v1 n=3\n")

    def test_bruteforce(self):
        result = invoke(["recognize", "--output", "json", "--bruteforce"], C5)
        data = json.loads(result.stdout)
        assert data["bruteforce"]["witness"]["graph_distance"] == 2

    def test_properties(self):
        result = invoke(["recognize", "--output", "json", "--properties"], C5)
        props = json.loads(result.stdout)["properties"]
        assert props["crossing_chords"] == {"holds": False, "cycle": [0, 1, 2, 3, 4]}
        assert props["level_neighborhoods"]["witness"] == {"source": 0, "u": 2, "v": 3}
        assert props["disjoint_twin_pairs"] is None

    def test_generate_then_recognize(self):
        generated = invoke(["generate", "random", "12", "--seed", "5"])
        assert generated.exit_code == 0
        result = invoke(["recognize"], generated.stdout)
        assert result.exit_code == 0


class TestGenerateCLI:
    def test_random_is_deterministic(self):
        first = invoke(["generate", "random", "10", "--seed", "3", "--weights", "1,2,1"])
        second = invoke(["generate", "random", "10", "--seed", "3", "--weights", "1,2,1"])
        assert first.stdout == second.stdout
        assert first.stdout.startswith("10 ")

    def test_multipartite_graph6(self):
        result = invoke(["generate", "multipartite", "2,2", "--output", "graph6"])
        assert result.exit_code == 0
        assert result.stdout == format_graph6(cycle(4).relabel([0, 2, 1, 3]))

    def test_dh_seq_replay(self):
        seq = invoke(["generate", "random", "8", "--seed", "1", "--output", "dh-seq"]).stdout
        replayed = invoke(["generate", "replay"], seq)
        direct = invoke(["generate", "random", "8", "--seed", "1"])
        assert replayed.exit_code == 0
        assert replayed.stdout == direct.stdout

    def test_replay_with_origin(self):
        c4 = format_edge_list(cycle(4))
        seq = invoke(["recognize"], c4).stdout
        replayed = invoke(["generate", "replay", "--original"], seq)
        assert replayed.stdout == c4

    def test_bad_weights(self):
        result = invoke(["generate", "random", "5", "--weights", "0,0,0"])
        assert result.exit_code == 1


class TestLemmasCLI:
    def test_four_cycle(self):
        result = invoke(["lemmas"], format_edge_list(cycle(4)))
        assert result.exit_code == 0
        assert all(entry["holds"] for entry in json.loads(result.stdout).values())

    def test_non_dh(self):
        assert invoke(["lemmas"], C5).exit_code == 1


class TestSweepCLI:
    def test_exhaustive(self):
        result = invoke(["sweep", "--exhaustive", "--n-max", "5", "--jobs", "1"])
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["violations"] == []
        assert "duration_seconds" not in report

    def test_timing(self):
        result = invoke(["sweep", "--exhaustive", "--n-max", "3", "--jobs", "1", "--timing"])
        assert "duration_seconds" in json.loads(result.stdout)

    def test_csv_is_reproducible(self):
        args = [
            "sweep", "--random", "--count", "200", "--seed", "4",
            "--n-max", "12", "--family", "dh", "--output", "csv",
        ]
        first, second = invoke(args), invoke(args)
        assert first.exit_code == 0
        assert first.stdout == second.stdout
        assert first.stdout.startswith("n,instances,min_lines_non_universal,violations\n")

    def test_needs_one_corpus(self):
        assert invoke(["sweep"]).exit_code == 1
        assert invoke(["sweep", "--exhaustive", "--random"]).exit_code == 1

    def test_guard(self):
        assert invoke(["sweep", "--exhaustive", "--n-max", "9"]).exit_code == 1

    def test_explicit_zero_is_not_a_default(self):
        assert invoke(["sweep", "--exhaustive", "--n-max", "0"]).exit_code == 1
        assert invoke(["sweep", "--random", "--count", "0"]).exit_code == 1
        assert invoke(["sweep", "--exhaustive", "--n-max", "3", "--jobs", "0"]).exit_code == 1
        assert invoke(["two-metric", "3", "--jobs", "0"]).exit_code == 1

    def test_two_metric(self):
        result = invoke(["two-metric", "4", "--jobs", "1"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["checked"] == 64

    def test_scaling_csv(self):
        result = invoke(["scaling", "--sides", "3"])
        assert result.exit_code == 0
        assert result.stdout == "side,n,distinct_lines,n_4_3,ratio\n3,27,63,81.0,0.777778\n"

    def test_scaling_json(self):
        result = invoke(["scaling", "--sides", "3", "--output", "json"])
        assert result.exit_code == 0
        rows = json.loads(result.stdout)
        assert len(rows) == 1
        assert (rows[0]["side"], rows[0]["n"], rows[0]["distinct_lines"]) == (3, 27, 63)

    def test_scaling_rejects_small_side(self):
        assert invoke(["scaling", "--sides", "2"]).exit_code == 1


class TestConfigCLI:
    def test_config_init(self, config_dir):
        result = invoke(["config", "init"])
        assert result.exit_code == 0
        assert (config_dir / "config.yaml").exists()

    def test_config_show(self):
        result = invoke(["config", "show"])
        assert result.exit_code == 0
        assert "random_count" in result.output


class TestRunExitCodes:
    def test_ok(self, capsys):
        assert run(["version"]) == 0

    def test_usage_error_is_one(self, capsys):
        assert run(["no-such-command"]) == 1

    def test_bad_option_value_is_one(self, capsys):
        assert run(["sweep", "--exhaustive", "--n-max", "many"]) == 1

    def test_violation_is_two(self, tmp_path, capsys):
        path = tmp_path / "c5.txt"
        path.write_text(C5, encoding="utf-8")
        assert run(["recognize", str(path)]) == 2

    def test_bad_log_level(self, capsys):
        assert run(["--log-level", "LOUD", "version"]) == 1

    def test_instance_commands_reject_csv(self, tmp_path, capsys):
        path = tmp_path / "p3.txt"
        path.write_text(P3, encoding="utf-8")
        for command in ("lines", "check", "recognize", "lemmas"):
            assert run([command, "--output", "csv", str(path)]) == 1

    def test_invalid_settings_is_one(self, config_dir, monkeypatch, capsys):
        (config_dir / "config.yaml").write_text("random_count: -1\n", encoding="utf-8")
        monkeypatch.setenv("METRIC_LINES_LOG", "WARNING")
        assert run(["sweep", "--random", "--count", "5"]) == 1

    def test_internal_error_is_three(self, tmp_path, monkeypatch, capsys):
        import metric_lines.cli.instance_cmd as instance_mod

        def boom(*args, **kwargs):
            raise RuntimeError("boom")

        monkeypatch.setattr(instance_mod, "all_lines", boom)
        path = tmp_path / "p3.txt"
        path.write_text(P3, encoding="utf-8")
        assert run(["lines", str(path)]) == 3
