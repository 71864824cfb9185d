"""Enumeration of small weight vectors for sweeps and experiments."""

from __future__ import annotations

from itertools import product
from math import gcd

from .grading import WeightVector


def enumerate_weight_vectors(sizes=(2, 3, 4), max_weight: int = 4,
                             max_total: int = 12) -> list[WeightVector]:
    """All ordered weight tuples with the given lengths, entries in
    1..max_weight, gcd 1, and total at most max_total, in lexicographic
    order within each length."""
    out = []
    for n in sizes:
        for ws in product(range(1, max_weight + 1), repeat=n):
            if sum(ws) > max_total:
                continue
            if gcd(*ws) != 1:
                continue
            out.append(WeightVector(ws))
    return out
