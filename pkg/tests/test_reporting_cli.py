import csv
import json
from dataclasses import replace

import pytest
from click.testing import CliRunner

from selfrep import (
    CSV_COLUMNS,
    SimConfig,
    aggregate_summary,
    render_chart,
    run,
    run_sweep,
    write_series_csv,
    write_summary,
)
from selfrep.cli import main

SMALL = SimConfig(
    primes_n=10, n_a=10, g_max=12, runs=4, seed_base=0, population_cap=10**7
)


def small_result(seed=0):
    return run(SMALL.sim_params(seed=seed), SMALL.rule())


class TestSeriesCsv:
    def test_header_and_row_count(self, tmp_path):
        result = small_result()
        path = write_series_csv(result, 0, tmp_path / "run.csv")
        with path.open() as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == CSV_COLUMNS
        assert len(rows) - 1 == result.generations_executed

    def test_rows_satisfy_conservation_law(self, tmp_path):
        result = small_result(seed=2)
        path = write_series_csv(result, 2, tmp_path / "run.csv")
        with path.open() as fh:
            rows = list(csv.DictReader(fh))
        for prev, cur in zip(rows, rows[1:]):
            assert int(cur["population_total"]) == (
                int(prev["population_total"])
                - int(cur["rule_deaths"])
                - int(cur["lifetime_deaths"])
                + int(cur["births"])
                - int(cur["purged"])
            )

    def test_byte_identical_for_identical_config(self, tmp_path):
        a = write_series_csv(small_result(), 0, tmp_path / "a.csv")
        b = write_series_csv(small_result(), 0, tmp_path / "b.csv")
        assert a.read_bytes() == b.read_bytes()


class TestSweep:
    def test_runs_all_seeds_in_order(self):
        outcome = run_sweep(SMALL)
        assert [seed for seed, _ in outcome.results] == [0, 1, 2, 3]
        assert outcome.failures == {}
        assert outcome.summary["runs"] == 4

    def test_single_run_summary_matches_series(self):
        outcome = run_sweep(replace(SMALL, runs=1))
        (seed, result), = outcome.results
        per_gen = outcome.summary["per_generation"]
        assert len(per_gen) == len(result.series)
        for g, row in enumerate(per_gen):
            assert row["mean_max_complexity"] == result.series[g].max_complexity
            assert row["mean_distinct_genomes"] == result.series[g].distinct_genomes
            assert row["contributing_runs"] == 1

    def test_deterministic_summaries(self, tmp_path):
        a = run_sweep(SMALL)
        b = run_sweep(SMALL)
        pa = write_summary(a.results, tmp_path / "a.json", a.failures)
        pb = write_summary(b.results, tmp_path / "b.json", b.failures)
        assert pa.read_bytes() == pb.read_bytes()

    def test_unequal_lengths_average_over_alive_runs(self):
        outcome = run_sweep(replace(SMALL, runs=6, population_cap=10**3))
        lengths = {len(res.series) for _, res in outcome.results}
        per_gen = outcome.summary["per_generation"]
        assert len(per_gen) == max(lengths)
        assert per_gen[-1]["contributing_runs"] >= 1

    def test_summary_requires_results(self):
        with pytest.raises(ValueError, match="no results"):
            aggregate_summary([])

    def test_write_summary_requires_results(self, tmp_path):
        with pytest.raises(ValueError, match="no results"):
            write_summary([], tmp_path / "s.json")


class TestChart:
    def test_renders_svg(self, tmp_path):
        path = render_chart(small_result(), tmp_path / "chart.svg")
        content = path.read_text()
        assert content.lstrip().startswith("<?xml")
        assert "<svg" in content


class TestCli:
    def write_config(self, tmp_path, extra=""):
        path = tmp_path / "sim.cfg"
        path.write_text(
            "primes.n = 10\nn_a = 10\ng_max = 12\npopulation_cap = 10000000\n" + extra
        )
        return str(path)

    def test_run_command(self, tmp_path):
        runner = CliRunner()
        cfg = self.write_config(tmp_path)
        out = tmp_path / "out"
        result = runner.invoke(
            main, ["run", "--config", cfg, "--seed", "3", "--out", str(out)]
        )
        assert result.exit_code == 0, result.output
        assert (out / "run_3.csv").exists()
        assert (out / "summary.json").exists()
        assert "seed 3" in result.output

    def test_run_engine_override(self, tmp_path):
        runner = CliRunner()
        cfg = self.write_config(tmp_path)
        out = tmp_path / "out"
        result = runner.invoke(
            main, ["run", "--config", cfg, "--engine", "naive", "--out", str(out)]
        )
        assert result.exit_code == 0, result.output
        assert "engine = naive" in (out / "effective_config.txt").read_text()

    def test_sweep_command(self, tmp_path):
        runner = CliRunner()
        cfg = self.write_config(tmp_path)
        out = tmp_path / "out"
        result = runner.invoke(
            main, ["sweep", "--config", cfg, "--runs", "3", "--out", str(out)]
        )
        assert result.exit_code == 0, result.output
        for seed in range(3):
            assert (out / f"run_{seed}.csv").exists()
        summary = json.loads((out / "summary.json").read_text())
        assert summary["runs"] == 3

    def test_sweep_byte_identical_outputs(self, tmp_path):
        runner = CliRunner()
        cfg = self.write_config(tmp_path)
        blobs = []
        for name in ("x", "y"):
            out = tmp_path / name
            result = runner.invoke(
                main, ["sweep", "--config", cfg, "--runs", "2", "--out", str(out)]
            )
            assert result.exit_code == 0, result.output
            blobs.append(
                (out / "summary.json").read_bytes()
                + (out / "run_0.csv").read_bytes()
                + (out / "run_1.csv").read_bytes()
            )
        assert blobs[0] == blobs[1]

    def test_primes_demo(self, tmp_path):
        runner = CliRunner()
        out = tmp_path / "demo"
        result = runner.invoke(main, ["primes-demo", "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert (out / "run_0.csv").exists()
        assert (out / "chart_0.svg").exists()
        assert "population_cap_exceeded" in result.output

    def test_onemax_demo(self, tmp_path):
        runner = CliRunner()
        out = tmp_path / "demo"
        result = runner.invoke(main, ["onemax-demo", "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert "target_reached" in result.output

    def test_run_rejects_bad_config(self, tmp_path):
        runner = CliRunner()
        bad = tmp_path / "bad.cfg"
        bad.write_text("p_m = 1.5\n")
        result = runner.invoke(main, ["run", "--config", str(bad)])
        assert result.exit_code != 0
