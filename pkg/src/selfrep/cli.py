"""Command-line surface: single runs, multi-seed sweeps, and the two
default experiments (prime-sequence discovery and OneMax)."""

from __future__ import annotations

from dataclasses import replace
from pathlib import Path

import click

from .config import SimConfig, format_config, load_config
from .engine import run
from .reporting import render_chart, run_sweep, write_series_csv, write_summary


def _apply_overrides(cfg: SimConfig, engine: str | None, out: str | None) -> SimConfig:
    if engine is not None:
        cfg = replace(cfg, engine=engine)
    if out is not None:
        cfg = replace(cfg, output_dir=out)
    return cfg


def _emit_single(cfg: SimConfig, seed: int) -> None:
    result = run(cfg.sim_params(seed=seed), cfg.rule())
    out = Path(cfg.output_dir)
    csv_path = write_series_csv(result, seed, out / f"run_{seed}.csv")
    write_summary([(seed, result)], out / "summary.json")
    (out / "effective_config.txt").write_text(
        format_config(replace(cfg, seed=seed)), encoding="utf-8"
    )
    click.echo(f"seed {seed}: {result.termination} after "
               f"{result.generations_executed} generations "
               f"(max complexity {result.series[-1].max_complexity})")
    click.echo(f"wrote {csv_path}")
    if cfg.emit_chart:
        click.echo(f"wrote {render_chart(result, out / f'chart_{seed}.svg')}")


def _emit_sweep(cfg: SimConfig) -> None:
    outcome = run_sweep(cfg)
    out = Path(cfg.output_dir)
    for seed, result in outcome.results:
        write_series_csv(result, seed, out / f"run_{seed}.csv")
    write_summary(outcome.results, out / "summary.json", outcome.failures)
    (out / "effective_config.txt").write_text(format_config(cfg), encoding="utf-8")
    if cfg.emit_chart and outcome.results:
        render_chart(outcome.results[0][1], out / "chart_first_run.svg")
    terminations = outcome.summary["termination_counts"]
    click.echo(f"{len(outcome.results)} runs completed, "
               f"{len(outcome.failures)} failed; terminations: {terminations}")
    click.echo(f"wrote {out / 'summary.json'}")


engine_option = click.option(
    "--engine", type=click.Choice(["cohort", "naive"]), default=None,
    help="Override the engine mode from the config.",
)
out_option = click.option("--out", type=click.Path(), default=None,
                          help="Output directory.")


@click.group()
def main() -> None:
    """Self-replication population simulator."""


@main.command("run")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=None)
@engine_option
@out_option
def run_cmd(config_path, seed, engine, out) -> None:
    """Execute a single run and write its per-generation CSV."""
    cfg = load_config(config_path) if config_path else SimConfig()
    cfg = _apply_overrides(cfg, engine, out)
    _emit_single(cfg, cfg.seed if seed is None else seed)


@main.command("sweep")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--runs", type=click.IntRange(min=1), default=None,
              help="Number of seeds (overrides config).")
@click.option("--seed-base", type=click.IntRange(0, 2**64 - 1), default=None)
@engine_option
@out_option
def sweep_cmd(config_path, runs, seed_base, engine, out) -> None:
    """Execute a multi-seed sweep and write per-run CSVs plus a summary."""
    cfg = load_config(config_path) if config_path else SimConfig()
    if runs is not None:
        cfg = replace(cfg, runs=runs)
    if seed_base is not None:
        cfg = replace(cfg, seed_base=seed_base)
    cfg = _apply_overrides(cfg, engine, out)
    _emit_sweep(cfg)


@main.command("primes-demo")
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=0)
@engine_option
@out_option
def primes_demo(seed, engine, out) -> None:
    """Prime-sequence run with the default hyperparameters and a 10^6
    population cap (no extinction): shows the complexity ceiling."""
    cfg = SimConfig(population_cap=10**6, emit_chart=True,
                    output_dir="out/primes-demo")
    cfg = _apply_overrides(cfg, engine, out)
    _emit_single(cfg, seed)


@main.command("onemax-demo")
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=0)
@engine_option
@out_option
def onemax_demo(seed, engine, out) -> None:
    """OneMax run with selective extinction, stopping at an all-ones
    genome of length 20."""
    cfg = SimConfig(
        problem="onemax",
        onemax_target_len=20,
        g_max=20_000,
        stop_at_target=True,
        extinction_policy="low_complexity_purge",
        emit_chart=True,
        output_dir="out/onemax-demo",
    )
    cfg = _apply_overrides(cfg, engine, out)
    _emit_single(cfg, seed)


if __name__ == "__main__":
    main()
