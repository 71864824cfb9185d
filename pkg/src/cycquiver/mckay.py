"""Exact character arithmetic for a diagonal cyclic group action.

The group of order N acts on n variables through a fixed generator whose
i-th diagonal entry is the primitive N-th root of unity raised to the i-th
weight.  Its N irreducible characters are indexed by residues k mod N, and
the character value of the k-th one at the m-th group element is the root
of unity with exponent (-k*m) mod N.  Everything below works with those
integer exponents; no complex number is ever formed.

The McKay quiver is produced twice, by the arrow rule and by character
inner products, and verify_mckay_consistency confronts the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .grading import WeightVector
from .quiver import Arrow, Quiver
from .reports import Assertion, CheckReport


def character_exponent(w: WeightVector, k: int, m: int) -> int:
    """Exponent residue of the k-th character at the m-th group element."""
    return (-k * m) % w.total


def _root_of_unity_sum(step: int, modulus: int) -> int:
    """Sum of zeta^(step*m) over m = 0..modulus-1, evaluated exactly.

    The exponents step*m sweep the subgroup of residues generated by
    gcd(step, modulus), hitting each member the same number of times.  A
    full set of t-th roots of unity sums to 0 for t > 1 (they are the roots
    of z^t - 1, whose degree-(t-1) coefficient vanishes), and to 1 for t = 1.
    The literal residue tally below verifies that orbit structure before the
    closed form is applied.
    """
    step %= modulus
    tally = [0] * modulus
    for m in range(modulus):
        tally[(step * m) % modulus] += 1
    if step == 0:
        assert tally[0] == modulus
        return modulus
    g = gcd(step, modulus)
    t = modulus // g  # subgroup order, > 1 since step is a nonzero residue
    assert t > 1
    for r in range(modulus):
        expected = g if r % g == 0 else 0
        assert tally[r] == expected, (step, modulus, r)
    # g copies of the full set of t-th roots of unity, each summing to 0
    return 0


def _multiplicity_by_character_sum(w: WeightVector, k: int, l: int) -> int:
    # (1/N) * sum_m chi_{l-th tensor natural}(g^m) * conj(chi_k(g^m)); the
    # product of character values at g^m splits into one root-of-unity term
    # per variable, with exponent (k - l + a_i) * m
    N = w.total
    total = 0
    for a in w.weights:
        total += _root_of_unity_sum(k - l + a, N)
    assert total % N == 0, "character inner product must be integral"
    return total // N


def _multiplicity_by_counting(w: WeightVector, k: int, l: int) -> int:
    N = w.total
    return sum(1 for a in w.weights if (k + a - l) % N == 0)


def tensor_multiplicity(w: WeightVector, k: int, l: int) -> int:
    """Multiplicity of the k-th irreducible in (l-th irreducible) tensor
    (natural representation), computed two ways which must agree."""
    N = w.total
    if not (0 <= k < N and 0 <= l < N):
        raise ValueError(f"irreducible labels must lie in 0..{N - 1}")
    by_sum = _multiplicity_by_character_sum(w, k, l)
    by_count = _multiplicity_by_counting(w, k, l)
    assert by_sum == by_count, (w.weights, k, l, by_sum, by_count)
    return by_count


@dataclass(frozen=True)
class TensorDecomposition:
    """Multiplicities of every irreducible in (l-th irreducible) tensor (natural)."""

    l: int
    multiplicities: dict[int, int]


def tensor_decomposition(w: WeightVector, l: int) -> TensorDecomposition:
    mults = {k: tensor_multiplicity(w, k, l) for k in range(w.total)}
    assert sum(mults.values()) == w.n  # the natural representation is n-dimensional
    return TensorDecomposition(l, mults)


def mckay_quiver(w: WeightVector) -> Quiver:
    """The McKay quiver: N vertices rho_0..rho_{N-1} and n*N arrows, where
    x<i>_<k> runs from rho_k to rho_{k + a_i mod N}."""
    N = w.total
    vertices = tuple(f"rho{k}" for k in range(N))
    arrows = []
    for i, a in enumerate(w.weights, start=1):
        for k in range(N):
            aid = len(arrows)
            arrows.append(Arrow(aid, f"x{i}_{k}", k, (k + a) % N, i, k))
    return Quiver(vertices, tuple(arrows))


def verify_mckay_consistency(w: WeightVector) -> CheckReport:
    """Confront the arrow counts of the McKay quiver with the character-side
    multiplicities for every vertex pair."""
    N = w.total
    counts = mckay_quiver(w).arrow_count_matrix()
    assertions = []
    for k in range(N):
        for l in range(N):
            expected = tensor_multiplicity(w, k, l)
            got = counts[k][l]
            assertions.append(Assertion(
                id=f"pair-{k}-{l}",
                status="pass" if got == expected else "fail",
                detail=f"arrows {got}, tensor multiplicity {expected}",
            ))
    return CheckReport("mckay", w.weights, assertions)
