"""Periodic selective extinction.

When the population grows past a trigger threshold, every cohort whose
complexity (genome length) falls below the k-th highest complexity level
that still holds rule-satisfying genomes is purged. Anchoring the cutoff
on satisfying levels (rather than on raw lengths present) matters: the
longest genomes at any instant are usually fresh non-satisfying mutants,
one element past the viable frontier. They die at their next evaluation,
so a purge keyed on raw lengths routinely strands the population on a
doomed level and wipes out the run. Keeping everything at or above the
top satisfying level preserves the only parents able to discover the
next complexity level while still discarding the exponentially large
low-complexity mass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .population import Population
from .rules import ReplicationRule

KIND_NONE = "none"
KIND_LOW_COMPLEXITY_PURGE = "low_complexity_purge"


@dataclass(frozen=True)
class ExtinctionPolicy:
    kind: str = KIND_NONE
    trigger_threshold: int = 10**6
    keep_top_k: int = 1

    def __post_init__(self) -> None:
        if self.kind not in (KIND_NONE, KIND_LOW_COMPLEXITY_PURGE):
            raise ValueError(f"unknown extinction kind {self.kind!r}")
        if self.trigger_threshold < 1:
            raise ValueError("trigger_threshold must be >= 1")
        if self.keep_top_k < 1:
            raise ValueError("keep_top_k must be >= 1")


def apply_extinction(
    pop: Population,
    policy: ExtinctionPolicy,
    rule: Optional[ReplicationRule] = None,
) -> tuple[Population, bool]:
    """Purge low-complexity cohorts if the trigger fires.

    The trigger is strict: a total exactly at the threshold does not
    fire. With a rule supplied, the complexity cutoff is the keep_top_k-th
    highest level containing a satisfying genome, and every cohort at or
    above the cutoff survives. Without a rule (or when nothing satisfies
    it), the cutoff falls back to the keep_top_k-th highest raw genome
    length present. A non-empty population is never emptied by the purge
    itself, because the cutoff is drawn from levels actually present.
    """
    if policy.kind == KIND_NONE:
        return pop, False
    if pop.total <= policy.trigger_threshold:
        return pop, False
    levels: set[int] = set()
    if rule is not None:
        sat_cache: dict[tuple, bool] = {}
        for c in pop:
            ok = sat_cache.get(c.genome)
            if ok is None:
                ok = rule.predicate(c.genome)
                sat_cache[c.genome] = ok
            if ok:
                levels.add(len(c.genome))
    if not levels:
        levels = {len(c.genome) for c in pop}
    ranked = sorted(levels, reverse=True)
    cutoff = ranked[min(policy.keep_top_k, len(ranked)) - 1]
    survivors = Population()
    for c in pop:
        if len(c.genome) >= cutoff:
            survivors.add(c.genome, c.lifetime, c.count)
    return survivors, True
