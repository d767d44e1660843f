"""Self-replication based population simulator and stochastic optimizer.

Agents survive and copy themselves only while their genome satisfies a
replication rule; imperfect copying (one-element additive or subtractive
mutations) drives growth in complexity and diversity without any
fitness-proportional selection.
"""

from .config import ConfigError, SimConfig, format_config, load_config, parse_config
from .engine import (
    ENGINE_COHORT,
    ENGINE_NAIVE,
    TERM_CAP,
    TERM_COMPLETED,
    TERM_EXTINCT,
    TERM_OVERFLOW,
    TERM_TARGET,
    GenomeLengthError,
    RunResult,
    SimParams,
    init_population,
    naive_step_generation,
    run,
    sample_offspring,
    step_generation,
)
from .extinction import ExtinctionPolicy, apply_extinction
from .metrics import GenerationStats, collect_stats
from .mutation import mutate
from .population import Cohort, CountOverflowError, Genome, Population
from .reporting import (
    CSV_COLUMNS,
    SweepOutcome,
    aggregate_summary,
    render_chart,
    run_sweep,
    write_series_csv,
    write_summary,
)
from .rules import (
    ReplicationRule,
    all_ones_rule,
    all_ones_satisfies,
    make_rule,
    prime_sequence_rule,
    prime_sequence_satisfies,
    prime_sieve,
    sequence_prefix_rule,
)

__all__ = [
    "CSV_COLUMNS",
    "Cohort",
    "ConfigError",
    "CountOverflowError",
    "ENGINE_COHORT",
    "ENGINE_NAIVE",
    "ExtinctionPolicy",
    "GenerationStats",
    "Genome",
    "GenomeLengthError",
    "Population",
    "ReplicationRule",
    "RunResult",
    "SimConfig",
    "SimParams",
    "SweepOutcome",
    "TERM_CAP",
    "TERM_COMPLETED",
    "TERM_EXTINCT",
    "TERM_OVERFLOW",
    "TERM_TARGET",
    "aggregate_summary",
    "all_ones_rule",
    "all_ones_satisfies",
    "apply_extinction",
    "collect_stats",
    "format_config",
    "init_population",
    "load_config",
    "make_rule",
    "mutate",
    "naive_step_generation",
    "parse_config",
    "prime_sequence_rule",
    "prime_sequence_satisfies",
    "prime_sieve",
    "render_chart",
    "run",
    "run_sweep",
    "sample_offspring",
    "sequence_prefix_rule",
    "step_generation",
    "write_series_csv",
    "write_summary",
]
