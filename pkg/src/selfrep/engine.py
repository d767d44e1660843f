"""Generation loop for the self-replication mechanism.

Each generation, every agent is evaluated against the replication rule
under snapshot semantics: offspring produced this generation are not
evaluated until the next one. A satisfying agent emits exactly one
offspring (mutated with probability p_m), its remaining lifetime drops by
one, and agents whose lifetime reaches zero are removed. Rule-failing
agents are removed immediately.

Two interchangeable backends:

* cohort mode compresses identical agents and samples offspring with
  exact binomial/multinomial draws, so it is distributionally identical
  to per-agent simulation while handling populations of millions;
* naive mode draws one mutation decision per individual agent and serves
  as the distributional oracle for cohort mode.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

import numpy as np

from .extinction import ExtinctionPolicy, apply_extinction
from .metrics import GenerationStats, collect_stats
from .mutation import mutate
from .population import Cohort, CountOverflowError, Genome, Population
from .rules import ReplicationRule

ENGINE_COHORT = "cohort"
ENGINE_NAIVE = "naive"

TERM_COMPLETED = "completed_g_max"
TERM_TARGET = "target_reached"
TERM_EXTINCT = "population_extinct"
TERM_CAP = "population_cap_exceeded"
TERM_OVERFLOW = "count_overflow"

# Optional per-agent hook, called between the rule check and replication
# for every satisfying cohort. Reserved for learning extensions; the
# shipped engine never installs one.
AgentHook = Callable[[Cohort], None]


@dataclass(frozen=True)
class SimParams:
    g_max: int = 500
    lifetime_L: int = 4
    p_m: float = 0.2
    n_a: int = 100
    element_set: tuple[int, ...] = tuple(range(1, 101))
    seed: int = 0
    engine_mode: str = ENGINE_COHORT
    population_cap: int = 10**12
    reseed_on_extinction: bool = True
    stop_at_target: bool = False
    target_complexity: Optional[int] = None
    max_genome_length: int = 10**4
    extinction: ExtinctionPolicy = field(default_factory=ExtinctionPolicy)

    def __post_init__(self) -> None:
        if not 0.0 <= self.p_m <= 1.0:
            raise ValueError("p_m must lie in [0, 1]")
        if self.lifetime_L < 1:
            raise ValueError("lifetime_L must be >= 1")
        if self.n_a < 1:
            raise ValueError("n_a must be >= 1")
        if self.g_max < 1:
            raise ValueError("g_max must be >= 1")
        if not self.element_set:
            raise ValueError("element_set must be non-empty")
        if self.engine_mode not in (ENGINE_COHORT, ENGINE_NAIVE):
            raise ValueError(f"unknown engine_mode {self.engine_mode!r}")
        if self.population_cap < 1:
            raise ValueError("population_cap must be >= 1")
        if self.max_genome_length < 1:
            raise ValueError("max_genome_length must be >= 1")
        if self.stop_at_target and self.target_complexity is None:
            raise ValueError("stop_at_target requires target_complexity")


@dataclass(frozen=True)
class RunResult:
    series: list[GenerationStats]
    termination: str
    generations_executed: int
    wall_time: float


class GenomeLengthError(RuntimeError):
    """Additive mutation would exceed the configured genome length cap."""


def init_population(params: SimParams, rng: np.random.Generator) -> Population:
    """Primordial soup: n_a length-1 genomes drawn uniformly from E."""
    elements = np.asarray(params.element_set)
    counts = np.bincount(
        rng.integers(0, len(elements), size=params.n_a), minlength=len(elements)
    )
    pop = Population()
    for element, count in zip(params.element_set, counts):
        pop.add((element,), params.lifetime_L, int(count))
    return pop


def sample_offspring(
    cohort: Cohort, params: SimParams, rng: np.random.Generator
) -> list[Cohort]:
    """Offspring of a rule-satisfying cohort, one per parent.

    Exact decomposition of per-agent sampling: the mutant count is
    binomial, the additive/subtractive split is binomial(1/2), and the
    placement of additive elements / removal positions is multinomial.
    No normal approximation anywhere, so cohort mode matches naive mode
    in distribution.
    """
    genome, count, L = cohort.genome, cohort.count, params.lifetime_L
    mutants = int(rng.binomial(count, params.p_m)) if params.p_m > 0 else 0
    merged: dict[Genome, int] = {}
    if count - mutants:
        merged[genome] = count - mutants
    if mutants:
        additive = int(rng.binomial(mutants, 0.5))
        subtractive = mutants - additive
        if len(genome) == 0:
            # no removable position: subtractive draws become additive
            additive, subtractive = mutants, 0
        if additive:
            if len(genome) + 1 > params.max_genome_length:
                raise GenomeLengthError(
                    f"genome length cap {params.max_genome_length} exceeded"
                )
            k = len(params.element_set)
            per_element = rng.multinomial(additive, np.full(k, 1.0 / k))
            for element, c in zip(params.element_set, per_element):
                if c:
                    child = genome + (element,)
                    merged[child] = merged.get(child, 0) + int(c)
        if subtractive:
            n = len(genome)
            per_pos = rng.multinomial(subtractive, np.full(n, 1.0 / n))
            for pos, c in enumerate(per_pos):
                if c:
                    child = genome[:pos] + genome[pos + 1 :]
                    merged[child] = merged.get(child, 0) + int(c)
    return [Cohort(g, L, c) for g, c in merged.items()]


def step_generation(
    pop: Population,
    rule: ReplicationRule,
    params: SimParams,
    rng: np.random.Generator,
    agent_hook: Optional[AgentHook] = None,
) -> tuple[Population, dict[str, int]]:
    """One synchronous generation in cohort mode."""
    nxt = Population()
    births = rule_deaths = lifetime_deaths = 0
    for cohort in pop.sorted_cohorts():
        if rule.predicate(cohort.genome):
            if agent_hook is not None:
                agent_hook(cohort)
            births += cohort.count
            for child in sample_offspring(cohort, params, rng):
                nxt.add(child.genome, child.lifetime, child.count)
            if cohort.lifetime > 1:
                nxt.add(cohort.genome, cohort.lifetime - 1, cohort.count)
            else:
                lifetime_deaths += cohort.count
        else:
            rule_deaths += cohort.count
    counters = {
        "births": births,
        "rule_deaths": rule_deaths,
        "lifetime_deaths": lifetime_deaths,
    }
    return nxt, counters


def naive_step_generation(
    pop: Population,
    rule: ReplicationRule,
    params: SimParams,
    rng: np.random.Generator,
    agent_hook: Optional[AgentHook] = None,
) -> tuple[Population, dict[str, int]]:
    """One generation with an independent mutation draw per agent.

    Same contract as step_generation; the difference is randomness
    granularity. Guarded by population_cap because per-agent draws
    allocate one uniform per living agent.
    """
    if pop.total > params.population_cap:
        raise MemoryError(
            f"naive mode refuses to expand {pop.total} agents "
            f"(population_cap={params.population_cap})"
        )
    nxt = Population()
    births = rule_deaths = lifetime_deaths = 0
    L = params.lifetime_L
    for cohort in pop.sorted_cohorts():
        if not rule.predicate(cohort.genome):
            rule_deaths += cohort.count
            continue
        if agent_hook is not None:
            agent_hook(cohort)
        births += cohort.count
        # one independent mutation decision per individual agent
        if params.p_m > 0:
            n_mutants = int(np.count_nonzero(rng.random(cohort.count) < params.p_m))
        else:
            n_mutants = 0
        if cohort.count - n_mutants:
            nxt.add(cohort.genome, L, cohort.count - n_mutants)
        for _ in range(n_mutants):
            child = mutate(cohort.genome, params.element_set, rng)
            if len(child) > params.max_genome_length:
                raise GenomeLengthError(
                    f"genome length cap {params.max_genome_length} exceeded"
                )
            nxt.add(child, L, 1)
        if cohort.lifetime > 1:
            nxt.add(cohort.genome, cohort.lifetime - 1, cohort.count)
        else:
            lifetime_deaths += cohort.count
    counters = {
        "births": births,
        "rule_deaths": rule_deaths,
        "lifetime_deaths": lifetime_deaths,
    }
    return nxt, counters


def _target_reached(pop: Population, rule: ReplicationRule, target: int) -> bool:
    return any(
        len(c.genome) >= target and rule.predicate(c.genome) for c in pop
    )


def run(
    params: SimParams,
    rule: ReplicationRule,
    agent_hook: Optional[AgentHook] = None,
) -> RunResult:
    """Execute a full run; identical params (seed included) give a
    bit-identical series."""
    start = time.perf_counter()
    rng = np.random.default_rng(params.seed)
    step = step_generation if params.engine_mode == ENGINE_COHORT else naive_step_generation

    pop = init_population(params, rng)
    series = [collect_stats(pop, rule, 0)]
    termination = TERM_COMPLETED
    target = params.target_complexity if params.stop_at_target else None

    if target is not None and _target_reached(pop, rule, target):
        termination = TERM_TARGET
    else:
        pending_reseed = False
        for g in range(1, params.g_max + 1):
            try:
                pop, counters = step(pop, rule, params, rng, agent_hook)
            except CountOverflowError:
                termination = TERM_OVERFLOW
                break
            pre_purge_total = pop.total
            pop, triggered = apply_extinction(pop, params.extinction, rule)
            purged = pre_purge_total - pop.total
            series.append(
                collect_stats(
                    pop,
                    rule,
                    g,
                    purged=purged,
                    extinction_triggered=triggered,
                    reseeded=pending_reseed,
                    **counters,
                )
            )
            pending_reseed = False
            if target is not None and _target_reached(pop, rule, target):
                termination = TERM_TARGET
                break
            if pop.total == 0:
                if params.reseed_on_extinction:
                    pop = init_population(params, rng)
                    pending_reseed = True
                else:
                    termination = TERM_EXTINCT
                    break
            elif pop.total > params.population_cap:
                termination = TERM_CAP
                break

    return RunResult(
        series=series,
        termination=termination,
        generations_executed=len(series),
        wall_time=time.perf_counter() - start,
    )


def with_seed(params: SimParams, seed: int) -> SimParams:
    return replace(params, seed=seed)
