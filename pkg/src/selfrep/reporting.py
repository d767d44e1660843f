"""Sweep execution and result emission: CSV series, JSON summary, charts.

The CSV is the interface of record; the summary and charts are
projections of it. Column order is fixed so downstream tooling can rely
on byte-identical output for identical configs.
"""

from __future__ import annotations

import csv
import json
import statistics
from dataclasses import dataclass
from pathlib import Path

from .config import SimConfig
from .engine import RunResult, run

CSV_COLUMNS = [
    "run_seed",
    "generation",
    "population_total",
    "satisfying_total",
    "distinct_genomes",
    "max_complexity",
    "mean_complexity",
    "births",
    "rule_deaths",
    "lifetime_deaths",
    "purged",
    "extinction_triggered",
]


@dataclass(frozen=True)
class SweepOutcome:
    results: list[tuple[int, RunResult]]
    failures: dict[int, str]
    summary: dict


def run_sweep(config: SimConfig) -> SweepOutcome:
    """Run seeds seed_base .. seed_base+runs-1 independently.

    A failing seed is recorded and does not abort the others. Results are
    kept in seed order, so any parallel execution strategy would produce
    identical output.
    """
    rule = config.rule()
    results: list[tuple[int, RunResult]] = []
    failures: dict[int, str] = {}
    for seed in range(config.seed_base, config.seed_base + config.runs):
        try:
            results.append((seed, run(config.sim_params(seed=seed), rule)))
        except Exception as exc:  # noqa: BLE001 - per-seed isolation
            failures[seed] = f"{type(exc).__name__}: {exc}"
    summary = aggregate_summary(results, failures)
    return SweepOutcome(results=results, failures=failures, summary=summary)


def aggregate_summary(
    results: list[tuple[int, RunResult]], failures: dict[int, str] | None = None
) -> dict:
    """Per-generation mean/stddev of max complexity and diversity.

    Runs of unequal length are averaged over the runs still alive at each
    generation, with the contributing-run count recorded alongside.
    """
    if not results:
        raise ValueError("no results")
    failures = failures or {}
    longest = max(len(res.series) for _, res in results)
    per_generation = []
    for g in range(longest):
        max_c = [res.series[g].max_complexity for _, res in results if g < len(res.series)]
        div = [res.series[g].distinct_genomes for _, res in results if g < len(res.series)]
        per_generation.append(
            {
                "generation": g,
                "contributing_runs": len(max_c),
                "mean_max_complexity": statistics.fmean(max_c),
                "stddev_max_complexity": statistics.pstdev(max_c),
                "mean_distinct_genomes": statistics.fmean(div),
                "stddev_distinct_genomes": statistics.pstdev(div),
            }
        )
    terminations: dict[str, int] = {}
    for _, res in results:
        terminations[res.termination] = terminations.get(res.termination, 0) + 1
    return {
        "runs": len(results) + len(failures),
        "seeds": [seed for seed, _ in results],
        "failed_seeds": failures,
        "termination_counts": dict(sorted(terminations.items())),
        "final_max_complexity": {
            str(seed): res.series[-1].max_complexity for seed, res in results
        },
        "per_generation": per_generation,
    }


def write_series_csv(result: RunResult, seed: int, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for s in result.series:
            writer.writerow(
                [
                    seed,
                    s.generation,
                    s.population_total,
                    s.satisfying_total,
                    s.distinct_genomes,
                    s.max_complexity,
                    repr(float(s.mean_complexity)),
                    s.births,
                    s.rule_deaths,
                    s.lifetime_deaths,
                    s.purged,
                    "true" if s.extinction_triggered else "false",
                ]
            )
    return path


def write_summary(
    results: list[tuple[int, RunResult]],
    path: str | Path,
    failures: dict[int, str] | None = None,
) -> Path:
    summary = aggregate_summary(results, failures)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(summary, indent=2) + "\n", encoding="utf-8")
    return path


def render_chart(result: RunResult, path: str | Path) -> Path:
    """Line plot of the main observables vs generation (SVG)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    gens = [s.generation for s in result.series]
    fig, axes = plt.subplots(3, 1, figsize=(8, 9), sharex=True)
    axes[0].plot(gens, [s.population_total for s in result.series], color="tab:blue")
    axes[0].set_ylabel("population total")
    if any(s.population_total > 0 for s in result.series):
        axes[0].set_yscale("symlog")
    axes[1].plot(gens, [s.max_complexity for s in result.series], color="tab:red")
    axes[1].set_ylabel("max complexity")
    axes[2].plot(gens, [s.distinct_genomes for s in result.series], color="tab:green")
    axes[2].set_ylabel("distinct genomes")
    axes[2].set_xlabel("generation")
    fig.tight_layout()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, format="svg")
    plt.close(fig)
    return path
