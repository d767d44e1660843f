import itertools

import pytest
from hypothesis import given, strategies as st

from selfrep import (
    all_ones_rule,
    all_ones_satisfies,
    make_rule,
    prime_sequence_rule,
    prime_sequence_satisfies,
    prime_sieve,
    sequence_prefix_rule,
)


def trial_division_primes(limit):
    """Independent oracle: brute-force primality by trial division."""
    out = []
    for n in range(2, limit + 1):
        if all(n % d for d in range(2, n)):
            out.append(n)
    return out


class TestPrimeSieve:
    def test_no_primes_below_two(self):
        assert prime_sieve(1) == []

    def test_small(self):
        assert prime_sieve(10) == [2, 3, 5, 7]

    def test_hundred_against_trial_division(self):
        primes = prime_sieve(100)
        assert primes == trial_division_primes(100)
        assert len(primes) == 25
        assert primes[-1] == 97

    @pytest.mark.parametrize("limit", [1, 2, 3, 17, 50, 200])
    def test_matches_oracle(self, limit):
        assert prime_sieve(limit) == trial_division_primes(limit)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            prime_sieve(0)


class TestPrimeSequenceRule:
    def test_prefixes_satisfy(self):
        assert prime_sequence_satisfies((2, 3, 5), 100)

    @pytest.mark.parametrize(
        "genome",
        [(2, 3, 7), (3, 5), (2, 2, 3), ()],
    )
    def test_violations(self, genome):
        assert not prime_sequence_satisfies(genome, 100)

    def test_exhaustive_short_genomes(self):
        # brute force over every genome of length <= 3 with elements 1..10
        rule = prime_sequence_rule(10)
        satisfying = set()
        for length in range(4):
            for genome in itertools.product(range(1, 11), repeat=length):
                if rule.predicate(genome):
                    satisfying.add(genome)
        assert satisfying == {(2,), (2, 3), (2, 3, 5)}

    def test_hint_is_prime_count(self):
        assert prime_sequence_rule(100).max_complexity_hint == 25
        assert prime_sequence_rule(10).max_complexity_hint == 4

    def test_genome_longer_than_sequence_fails(self):
        assert not prime_sequence_satisfies((2, 3, 5, 7, 11), 10)


class TestAllOnesRule:
    def test_all_ones(self):
        assert all_ones_satisfies((1, 1, 1))

    def test_contains_zero(self):
        assert not all_ones_satisfies((1, 0, 1))

    def test_empty_fails(self):
        assert not all_ones_satisfies(())

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=20))
    def test_permutation_invariant(self, elements):
        genome = tuple(elements)
        assert all_ones_satisfies(genome) == all_ones_satisfies(tuple(reversed(genome)))


class TestPrefixClosure:
    """satisfies(g) and |g| >= 2 implies satisfies(g[:-1]) for shipped rules."""

    @pytest.mark.parametrize(
        "rule",
        [prime_sequence_rule(10), all_ones_rule(), sequence_prefix_rule([4, 8, 15])],
        ids=["primes", "onemax", "prefix"],
    )
    def test_brute_force(self, rule):
        for length in range(2, 4):
            for genome in itertools.product(range(1, 11), repeat=length):
                if rule.predicate(genome):
                    assert rule.predicate(genome[:-1])


class TestSequencePrefixRule:
    def test_prefixes(self):
        rule = sequence_prefix_rule([9, 1, 1])
        assert rule.predicate((9,))
        assert rule.predicate((9, 1, 1))
        assert not rule.predicate((1,))
        assert not rule.predicate(())
        assert not rule.predicate((9, 1, 1, 1))
        assert rule.max_complexity_hint == 3

    def test_empty_sequence_rejected(self):
        with pytest.raises(ValueError):
            sequence_prefix_rule([])


class TestRegistry:
    def test_primes(self):
        rule = make_rule("primes", n=10)
        assert rule.predicate((2, 3))
        assert rule.max_complexity_hint == 4

    def test_onemax(self):
        rule = make_rule("onemax", target_len=5)
        assert rule.predicate((1, 1))
        assert rule.max_complexity_hint == 5

    def test_unknown(self):
        with pytest.raises(ValueError):
            make_rule("twomax")
