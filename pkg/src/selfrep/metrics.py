"""Per-generation observables: population size, complexity, diversity.

Diversity is the number of distinct genome values in the population,
ignoring lifetime and count multiplicity. Complexity is genome length.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .population import Population
from .rules import ReplicationRule


@dataclass(frozen=True)
class GenerationStats:
    generation: int
    population_total: int
    satisfying_total: int
    distinct_genomes: int
    max_complexity: int
    mean_complexity: Fraction
    complexity_histogram: dict[int, int] = field(default_factory=dict)
    births: int = 0
    rule_deaths: int = 0
    lifetime_deaths: int = 0
    purged: int = 0
    extinction_triggered: bool = False
    # Set on the generation computed from a freshly reseeded population;
    # the step-to-step conservation law does not hold across a reseed.
    reseeded: bool = False


def collect_stats(
    pop: Population,
    rule: ReplicationRule,
    generation: int,
    *,
    births: int = 0,
    rule_deaths: int = 0,
    lifetime_deaths: int = 0,
    purged: int = 0,
    extinction_triggered: bool = False,
    reseeded: bool = False,
) -> GenerationStats:
    histogram: Counter[int] = Counter()
    genomes = set()
    satisfying = 0
    sat_cache: dict[tuple, bool] = {}
    for c in pop:
        histogram[len(c.genome)] += c.count
        genomes.add(c.genome)
        ok = sat_cache.get(c.genome)
        if ok is None:
            ok = rule.predicate(c.genome)
            sat_cache[c.genome] = ok
        if ok:
            satisfying += c.count
    total = pop.total
    weighted = sum(level * count for level, count in histogram.items())
    return GenerationStats(
        generation=generation,
        population_total=total,
        satisfying_total=satisfying,
        distinct_genomes=len(genomes),
        max_complexity=max(histogram) if histogram else 0,
        mean_complexity=Fraction(weighted, total) if total else Fraction(0),
        complexity_histogram=dict(sorted(histogram.items())),
        births=births,
        rule_deaths=rule_deaths,
        lifetime_deaths=lifetime_deaths,
        purged=purged,
        extinction_triggered=extinction_triggered,
        reseeded=reseeded,
    )
