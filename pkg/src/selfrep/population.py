"""Cohort-compressed population storage.

A genome is an ordered tuple of element identifiers. Identical agents
(same genome, same remaining lifetime) are stored as a single cohort with
a count, so exponentially growing populations stay cheap to hold. The
naive engine mode uses the same structure but draws randomness per agent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

Genome = tuple[int, ...]

# Counts are signed-64-bit with checked arithmetic; a silent wraparound
# would corrupt every downstream statistic.
MAX_COUNT = 2**63 - 1


class CountOverflowError(RuntimeError):
    """A cohort count or the population total exceeded 2^63 - 1."""


@dataclass(frozen=True)
class Cohort:
    genome: Genome
    lifetime: int
    count: int


class Population:
    """Multiset of agents keyed by (genome, lifetime)."""

    __slots__ = ("_cohorts", "_total")

    def __init__(self) -> None:
        self._cohorts: dict[tuple[Genome, int], int] = {}
        self._total = 0

    @classmethod
    def from_cohorts(cls, cohorts) -> "Population":
        pop = cls()
        for c in cohorts:
            pop.add(c.genome, c.lifetime, c.count)
        return pop

    def add(self, genome: Genome, lifetime: int, count: int) -> None:
        if count < 0:
            raise ValueError("cohort count must be non-negative")
        if count == 0:
            return
        key = (genome, lifetime)
        new = self._cohorts.get(key, 0) + count
        if new > MAX_COUNT:
            raise CountOverflowError(
                f"cohort count for genome of length {len(genome)} exceeds 2^63 - 1"
            )
        if self._total + count > MAX_COUNT:
            raise CountOverflowError("population total exceeds 2^63 - 1")
        self._cohorts[key] = new
        self._total += count

    @property
    def total(self) -> int:
        return self._total

    def __len__(self) -> int:
        return len(self._cohorts)

    def __iter__(self) -> Iterator[Cohort]:
        for (genome, lifetime), count in self._cohorts.items():
            yield Cohort(genome, lifetime, count)

    def sorted_cohorts(self) -> list[Cohort]:
        """Cohorts in a canonical order, so processing is seed-reproducible."""
        return [
            Cohort(genome, lifetime, count)
            for (genome, lifetime), count in sorted(self._cohorts.items())
        ]

    def count_of(self, genome: Genome, lifetime: int) -> int:
        return self._cohorts.get((genome, lifetime), 0)

    def as_dict(self) -> dict[tuple[Genome, int], int]:
        return dict(self._cohorts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Population):
            return NotImplemented
        return self._cohorts == other._cohorts

    def __repr__(self) -> str:
        return f"Population(total={self._total}, cohorts={len(self._cohorts)})"
