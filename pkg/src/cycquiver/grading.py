"""Exact lattice-point combinatorics for weighted polynomial gradings.

A weight vector (a_1, ..., a_n) of positive integers with gcd 1 grades the
polynomial ring in n variables by deg x_i = a_i.  The graded piece of degree
d has the monomials of weighted degree d as a basis, so its dimension is the
number of exponent vectors m with sum(a_i * m_i) = d.  The invariant subring
collects the degrees divisible by N = a_1 + ... + a_n.

All counting here is exact integer arithmetic (dynamic programming over
degrees); no floating point appears on any code path.  Monomial listings are
always in lexicographic order on exponent vectors, which fixes a canonical
basis order for every downstream consumer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd


class WeightError(ValueError):
    """Base class for rejected weight vectors."""


class TooFewWeights(WeightError):
    pass


class NonPositiveWeight(WeightError):
    pass


class GcdNotOne(WeightError):
    pass


@dataclass(frozen=True)
class WeightVector:
    """Validated tuple of positive integer weights with gcd 1 and length >= 2."""

    weights: tuple[int, ...]

    def __post_init__(self):
        ws = tuple(int(a) for a in self.weights)
        object.__setattr__(self, "weights", ws)
        if len(ws) < 2:
            raise TooFewWeights(f"need at least 2 weights, got {len(ws)}")
        if any(a <= 0 for a in ws):
            raise NonPositiveWeight(f"weights must be positive, got {ws}")
        if gcd(*ws) != 1:
            raise GcdNotOne(f"gcd{ws} = {gcd(*ws)} != 1")

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> int:
        """N, the sum of the weights (also the order of the grading step)."""
        return sum(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.weights) + ")"


def validate_weights(raw) -> WeightVector:
    """Validate a raw integer sequence as a weight vector.

    Raises TooFewWeights, NonPositiveWeight, or GcdNotOne.
    """
    return WeightVector(tuple(raw))


@dataclass(frozen=True, order=True)
class Monomial:
    """An exponent vector together with its (cached) weighted degree."""

    exponents: tuple[int, ...]
    degree: int

    @classmethod
    def of(cls, w: WeightVector, exponents) -> "Monomial":
        exps = tuple(int(m) for m in exponents)
        if len(exps) != w.n:
            raise ValueError(f"expected {w.n} exponents, got {len(exps)}")
        if any(m < 0 for m in exps):
            raise ValueError(f"exponents must be nonnegative, got {exps}")
        return cls(exps, sum(a * m for a, m in zip(w.weights, exps)))


def _count_table(weights, max_degree: int) -> list[int]:
    # coin-counting DP: table[d] = #{m >= 0 : sum a_i m_i = d}
    table = [0] * (max_degree + 1)
    table[0] = 1
    for a in weights:
        for d in range(a, max_degree + 1):
            table[d] += table[d - a]
    return table


def _interior_count_table(weights, max_degree: int) -> list[int]:
    # same DP but every variable must appear with exponent >= 1
    table = [0] * (max_degree + 1)
    table[0] = 1
    for a in weights:
        new = [0] * (max_degree + 1)
        for d in range(a, max_degree + 1):
            # exponent j >= 1 of the current variable: sum_j table[d - j*a]
            new[d] = table[d - a] + new[d - a]
        table = new
    return table


def dim_R(w: WeightVector, d: int) -> int:
    """Dimension of the degree-d graded piece of the weighted polynomial ring."""
    if d < 0:
        return 0
    return _count_table(w.weights, d)[d]


def dim_A(w: WeightVector, k: int) -> int:
    """Dimension of the degree-k piece of the invariant subring (degrees k*N)."""
    if k < 0:
        return 0
    return dim_R(w, k * w.total)


def dim_A_interior(w: WeightVector, k: int) -> int:
    """Number of strictly positive exponent vectors of weighted degree k*N.

    Counted by its own dynamic program (every exponent at least 1), not via
    any shift identity, so it can serve as one side of the reciprocity check.
    """
    if k <= 0:
        return 0
    target = k * w.total
    return _interior_count_table(w.weights, target)[target]


def enumerate_monomials(w: WeightVector, d: int) -> list[Monomial]:
    """All monomials of weighted degree d, lexicographic on exponent vectors."""
    if d < 0:
        return []
    out = []
    for exps in _exponent_vectors(w.weights, d):
        out.append(Monomial(exps, d))
    return out


def _exponent_vectors(weights, d: int) -> list[tuple[int, ...]]:
    if not weights:
        return [()] if d == 0 else []
    head = weights[0]
    tail = weights[1:]
    vectors = []
    for m in range(d // head + 1):
        for rest in _exponent_vectors(tail, d - m * head):
            vectors.append((m,) + rest)
    return vectors


# ---------------------------------------------------------------------------
# Packed enumeration kernel.
#
# Degree windows in the reciprocity sweep get large enough that building
# millions of Python tuples dominates the runtime.  Packing each exponent
# vector into a single integer (one fixed-width lane per variable, first
# variable in the most significant lane) keeps enumeration, the all-ones
# shift, and list comparison at native int speed while staying exact.
# ---------------------------------------------------------------------------

PACK_BITS = 32


def pack_exponents(exponents) -> int:
    value = 0
    for m in exponents:
        value = (value << PACK_BITS) | m
    return value


def unpack_exponents(packed: int, n: int) -> tuple[int, ...]:
    mask = (1 << PACK_BITS) - 1
    out = []
    for i in range(n):
        out.append((packed >> (PACK_BITS * (n - 1 - i))) & mask)
    return tuple(out)


def packed_ones(n: int) -> int:
    """The packed form of the all-ones exponent vector of length n."""
    return pack_exponents([1] * n)


def packed_monomials(weights, degree: int, min_exponent: int = 0,
                     memo: dict | None = None) -> list[int]:
    """Packed exponent vectors of the given weighted degree, ascending.

    Ascending packed order coincides with lexicographic order on exponent
    vectors.  With min_exponent=1 this enumerates the strictly positive
    solutions.  A memo dict may be passed in to share suffix enumerations
    across calls with the same weights.  Exponents must stay below 2**PACK_BITS,
    which holds for any degree below 2**PACK_BITS.
    """
    if degree < 0:
        return []
    if memo is None:
        memo = {}
    weights = tuple(weights)
    n = len(weights)
    if n == 0:
        return [0] if degree == 0 else []
    head = weights[0]
    shift = PACK_BITS * (n - 1)
    out = []
    for m in range(min_exponent, degree // head + 1):
        rest = _packed_suffix(weights, 1, degree - m * head, min_exponent, memo)
        if not rest:
            continue
        if m == 0:
            out.extend(rest)
        else:
            top = m << shift
            out.extend([top | r for r in rest])
    return out


def _packed_suffix(weights, i: int, degree: int, min_exponent: int, memo: dict):
    if i == len(weights):
        return (0,) if degree == 0 else ()
    key = (i, degree, min_exponent)
    got = memo.get(key)
    if got is not None:
        return got
    a = weights[i]
    shift = PACK_BITS * (len(weights) - 1 - i)
    vectors = []
    for m in range(min_exponent, degree // a + 1):
        rest = _packed_suffix(weights, i + 1, degree - m * a, min_exponent, memo)
        if not rest:
            continue
        if m == 0:
            vectors.extend(rest)
        else:
            top = m << shift
            vectors.extend([top | r for r in rest])
    memo[key] = vectors
    return vectors


@dataclass(frozen=True)
class HilbertTable:
    """Dimensions of one graded ring over a contiguous index window from 0."""

    ring: str  # "R" (full weighted ring) or "A" (invariant subring)
    weights: tuple[int, ...]
    dims: dict[int, int]

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "weights": list(self.weights),
            "dims": {str(k): v for k, v in sorted(self.dims.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def hilbert_table(w: WeightVector, ring: str, max_index: int) -> HilbertTable:
    """Dimension table for indices 0..max_index of ring "R" or "A"."""
    if ring not in ("R", "A"):
        raise ValueError(f'ring must be "R" or "A", got {ring!r}')
    if max_index < 0:
        raise ValueError(f"max_index must be >= 0, got {max_index}")
    if ring == "R":
        table = _count_table(w.weights, max_index)
        dims = {d: table[d] for d in range(max_index + 1)}
    else:
        table = _count_table(w.weights, max_index * w.total)
        dims = {k: table[k * w.total] for k in range(max_index + 1)}
    return HilbertTable(ring, w.weights, dims)
