"""Imperfect-copy operator: one additive or subtractive change, equiprobable.

Additive mutation appends one element drawn uniformly from the element
set; subtractive mutation deletes one uniformly chosen position. Genome
length therefore always changes by exactly +-1, making complexity a
one-step random walk.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .population import Genome


def mutate(genome: Genome, element_set: Sequence[int], rng: np.random.Generator) -> Genome:
    """Return a mutated copy of `genome`.

    An empty genome has no removable position, so it mutates additively
    with certainty. The engine never feeds one in (empty genomes fail
    every shipped rule), but the operator stays total.
    """
    if len(genome) == 0 or rng.random() < 0.5:
        element = element_set[int(rng.integers(len(element_set)))]
        return genome + (element,)
    pos = int(rng.integers(len(genome)))
    return genome[:pos] + genome[pos + 1 :]
