"""Replication rules: the binary survival predicates that gate copying.

A rule plays the role a fitness function plays in a classic evolutionary
algorithm, except it is a yes/no gate: agents whose genome satisfies the
rule replicate once per generation, all others are removed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .population import Genome


@dataclass(frozen=True)
class ReplicationRule:
    name: str
    predicate: Callable[[Genome], bool]
    max_complexity_hint: Optional[int] = None


def prime_sieve(limit: int) -> list[int]:
    """Ascending list of all primes <= limit (sieve of Eratosthenes)."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if limit < 2:
        return []
    is_prime = bytearray([1]) * (limit + 1)
    is_prime[0] = is_prime[1] = 0
    p = 2
    while p * p <= limit:
        if is_prime[p]:
            is_prime[p * p :: p] = bytearray(len(is_prime[p * p :: p]))
        p += 1
    return [i for i in range(2, limit + 1) if is_prime[i]]


def prime_sequence_satisfies(genome: Genome, limit: int) -> bool:
    """True iff genome is a non-empty prefix of the primes <= limit."""
    primes = tuple(prime_sieve(limit))
    return 0 < len(genome) <= len(primes) and tuple(genome) == primes[: len(genome)]


def all_ones_satisfies(genome: Genome) -> bool:
    """True iff genome is non-empty and every element equals 1."""
    return len(genome) > 0 and all(e == 1 for e in genome)


def prime_sequence_rule(limit: int) -> ReplicationRule:
    """Genome must be a contiguous run of primes starting at 2, no repeats."""
    primes = tuple(prime_sieve(limit))
    n = len(primes)

    def predicate(genome: Genome) -> bool:
        k = len(genome)
        return 0 < k <= n and genome == primes[:k]

    return ReplicationRule(
        name=f"primes[{limit}]", predicate=predicate, max_complexity_hint=n
    )


def all_ones_rule(target_len: Optional[int] = None) -> ReplicationRule:
    return ReplicationRule(
        name="onemax",
        predicate=all_ones_satisfies,
        max_complexity_hint=target_len,
    )


def sequence_prefix_rule(sequence: Sequence[int], name: str = "prefix") -> ReplicationRule:
    """Experimental rule: genome must be a non-empty prefix of `sequence`.

    Not part of the config surface; library-only convenience for trying
    arbitrary target sequences.
    """
    target = tuple(sequence)
    if not target:
        raise ValueError("target sequence must be non-empty")

    def predicate(genome: Genome) -> bool:
        k = len(genome)
        return 0 < k <= len(target) and genome == target[:k]

    return ReplicationRule(
        name=name, predicate=predicate, max_complexity_hint=len(target)
    )


def make_rule(problem: str, **kwargs) -> ReplicationRule:
    """Build a rule from a config-style selector ('primes' or 'onemax')."""
    if problem == "primes":
        return prime_sequence_rule(kwargs.get("n", 100))
    if problem == "onemax":
        return all_ones_rule(kwargs.get("target_len"))
    raise ValueError(f"unknown problem {problem!r}")
