"""
Constructors for symmetric and skew-symmetric polynomials.
"""

from itertools import combinations, combinations_with_replacement, permutations
from typing import Literal, Sequence

from schubCalc import DomainError

from .ring import MultiPoly, poly_ring, from_terms


def sym_generators(kind: Literal["elementary", "complete"], m: int, k: int) -> MultiPoly:
    """The elementary symmetric polynomial e_m or the complete symmetric polynomial h_m in k variables.

    e_0 = h_0 = 1, and e_m = 0 for m > k.
    """
    if m < 0 or k < 0:
        raise DomainError(f"Degree and variable count must be nonnegative, got m={m}, k={k}")
    if kind == "elementary":
        index_sets = combinations(range(k), m)
    elif kind == "complete":
        index_sets = combinations_with_replacement(range(k), m)
    else:
        raise DomainError(f"kind must be elementary or complete, got {kind!r}")

    terms = {}
    for indices in index_sets:
        exponent = [0] * k
        for i in indices:
            exponent[i] += 1
        terms[tuple(exponent)] = 1
    return from_terms(terms, k)

def elementary(m: int, k: int) -> MultiPoly:
    return sym_generators("elementary", m, k)

def complete(m: int, k: int) -> MultiPoly:
    return sym_generators("complete", m, k)

def permutation_sign(sigma: Sequence[int]) -> int:
    "Sign of a permutation given as a sequence of distinct comparable values"
    inversions = sum(1 for a, b in combinations(sigma, 2) if a > b)
    return -1 if inversions % 2 else 1

def alternant(parts: Sequence[int], k: int) -> MultiPoly:
    """The skew-symmetrization a_{lambda+delta} of x^(lambda+delta) in k variables.

    With delta = (k-1, ..., 1, 0), so that ``alternant((), k)`` is the Vandermonde product over i<j of (x_i - x_j).

    Parameters
    ----------
    parts : Sequence[int]
        Weakly decreasing parts of lambda; must have at most k nonzero entries
    k : int
        The number of variables
    """
    parts = tuple(p for p in parts if p)
    if len(parts) > k:
        raise DomainError(f"Partition {list(parts)} has more than {k} parts")
    padded = parts + (0,) * (k - len(parts))
    shifted = [padded[i] + k - 1 - i for i in range(k)]
    terms = {}
    for sigma in permutations(range(k)):
        exponent = [0] * k
        for i, target in enumerate(sigma):
            exponent[target] = shifted[i]
        terms[tuple(exponent)] = permutation_sign(sigma)
    return from_terms(terms, k)

def vandermonde(k: int) -> MultiPoly:
    "Product over i<j of (x_i - x_j), equal to ``alternant((), k)``"
    ring = poly_ring(k)
    x = ring.gens
    result = ring.one
    for i, j in combinations(range(k), 2):
        result *= x[i] - x[j]
    return result
