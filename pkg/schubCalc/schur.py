"""
Schur polynomials and expansions in the Schur basis.

Two independent constructions (bialternant quotient and tableau sum), the Pieri sets, and Schur expansion by peeling lex leading monomials, which yields the Littlewood-Richardson coefficients.
"""

from functools import lru_cache
from typing import Literal, Mapping

import schubCalc
from schubCalc import DomainError
from schubCalc.helpers import verify
from schubCalc.combinatorics import Partition, as_partition, ssyt_enumerate
from schubCalc.polynomials import (
    MultiPoly,
    poly_ring,
    alternant,
    vandermonde,
    is_symmetric,
    coefficient_of,
    leading_exponent,
    to_coefficient,
    sym_generators,
)

_LOGGER = schubCalc.getLogger(__name__)

SchurExpansion = dict[Partition, int]
"Mapping from partitions to their (nonzero) coefficient in a Schur expansion"


@lru_cache(maxsize=None)
def _schur_bialternant(lam: Partition, k: int) -> MultiPoly:
    if lam.length > k:
        raise DomainError(f"{lam} has more than {k} parts")
    return alternant(lam.parts, k).exquo(vandermonde(k))

def schur_bialternant(lam: Partition, k: int) -> MultiPoly:
    "s_lambda in k variables as the exact quotient a_{lambda+delta} / a_delta"
    return _schur_bialternant(as_partition(lam), k)

@lru_cache(maxsize=None)
def _schur_ssyt(lam: Partition, k: int) -> MultiPoly:
    ring = poly_ring(k)
    counts: dict[tuple[int, ...], int] = {}
    for tableau in ssyt_enumerate(lam, k):
        weight = tableau.weight(k)
        counts[weight] = counts.get(weight, 0) + 1
    return ring.from_dict({exp: to_coefficient(c) for exp, c in counts.items()}) if counts else ring.zero

def schur_ssyt(lam: Partition, k: int) -> MultiPoly:
    "s_lambda in k variables as the sum of x^T over semistandard tableaux T with entries at most k"
    return _schur_ssyt(as_partition(lam), k)

def schur_polynomial(lam: Partition, k: int, method: Literal["ssyt", "bialternant"] = "ssyt") -> MultiPoly:
    lam = as_partition(lam)
    if method == "bialternant":
        return schur_bialternant(lam, k)
    return schur_ssyt(lam, k)

def pieri_partition_set(lam: Partition, m: int, kind: Literal["row", "column"] = "row") -> list[Partition]:
    """The partitions obtained from lambda by adding m boxes, no two in one column (``row``) or no two in one row (``column``).

    Ordered by decreasing parts.
    """
    lam = as_partition(lam)
    if m < 0:
        raise DomainError(f"Cannot add a negative number of boxes, got {m}")
    if kind == "column":
        return sorted((nu.conjugate() for nu in pieri_partition_set(lam.conjugate(), m, "row")),
                      key=lambda nu: nu.parts, reverse=True)
    if kind != "row":
        raise DomainError(f"kind must be row or column, got {kind!r}")

    ## a horizontal strip: lambda_i <= nu_i <= lambda_{i-1}, with one new row allowed at the bottom
    parts = lam.parts + (0,)
    found = []

    def extend(i: int, prefix: tuple[int, ...], remaining: int):
        if i == len(parts):
            if remaining == 0:
                found.append(Partition(prefix))
            return
        upper = parts[i] + remaining if i == 0 else min(parts[i-1], parts[i] + remaining)
        for value in range(upper, parts[i] - 1, -1):
            extend(i + 1, prefix + (value,), remaining - (value - parts[i]))

    extend(0, (), m)
    return found

def pieri_multiply_schur(lam: Partition, m: int, kind: Literal["row", "column"] = "row") -> SchurExpansion:
    "The expansion of s_lambda * h_m (row) or s_lambda * e_m (column) given by the Pieri rule"
    return {nu: 1 for nu in pieri_partition_set(lam, m, kind)}

def schur_expand(f: MultiPoly, expect_positive: bool = False) -> SchurExpansion:
    """Expands a symmetric polynomial in the Schur basis of its ring.

    Repeatedly takes the lex leading monomial x^nu, which for a symmetric polynomial has nu weakly decreasing, and subtracts c * s_nu.
    This works because the lex leading monomial of s_nu is x^nu.

    Parameters
    ----------
    f : MultiPoly
        A polynomial symmetric in all of its variables, with integral Schur coefficients
    expect_positive : bool
        If True, every coefficient met while peeling must be positive. Used for products of Schur polynomials.

    Returns
    -------
    SchurExpansion
    """
    if not is_symmetric(f):
        raise DomainError("Schur expansion needs a symmetric polynomial")
    k = f.ring.ngens
    expansion: SchurExpansion = {}
    remainder = f
    steps = 0
    while remainder:
        exponent = leading_exponent(remainder)
        verify(all(exponent[i] >= exponent[i+1] for i in range(len(exponent) - 1)),
               "Leading exponent %s of a symmetric remainder is not a partition", exponent)
        nu = Partition(exponent)
        coeff = coefficient_of(remainder, exponent)
        if coeff.denominator != 1:
            raise DomainError(f"Coefficient {coeff} of s{nu} is not an integer")
        if expect_positive:
            verify(coeff > 0, "Schur expansion met the negative coefficient %s at s%s", coeff, nu)
        expansion[nu] = int(coeff)
        remainder = remainder - schur_ssyt(nu, k).mul_ground(to_coefficient(coeff))
        steps += 1
    _LOGGER.verbose(f"Schur expansion finished after {steps} peeling steps")
    return expansion

def _pair_key(lam: Partition, mu: Partition) -> tuple[Partition, Partition]:
    return (lam, mu) if lam.parts <= mu.parts else (mu, lam)

@lru_cache(maxsize=None)
def _schur_product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    k = max(lam.size + mu.size, 1)
    product = schur_ssyt(lam, k) * schur_ssyt(mu, k)
    expansion = schur_expand(product, expect_positive=True)
    _LOGGER.debug(f"Expanded s{lam} * s{mu} in {k} variables into {len(expansion)} terms")
    return tuple(sorted(expansion.items(), key=lambda item: item[0].parts, reverse=True))

def schur_product(lam: Partition, mu: Partition) -> SchurExpansion:
    "The Schur expansion of s_lambda * s_mu, computed with |lambda|+|mu| variables so nothing is truncated"
    return dict(_schur_product(*_pair_key(as_partition(lam), as_partition(mu))))

def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    "The Littlewood-Richardson coefficient c^nu_{lambda mu}: the coefficient of s_nu in s_lambda * s_mu"
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if lam.size + mu.size != nu.size:
        return 0
    return schur_product(lam, mu).get(nu, 0)

def lr_coefficient_bruteforce(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^nu_{lambda mu} read off as the coefficient of x^(nu+delta) in a_delta * s_lambda * s_mu.

    Independent of the tableau code: both factors come from bialternant division.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if lam.size + mu.size != nu.size:
        return 0
    k = max(nu.length, 1)
    if lam.length > k or mu.length > k:
        return 0
    product = vandermonde(k) * schur_bialternant(lam, k) * schur_bialternant(mu, k)
    target = tuple(p + k - 1 - i for i, p in enumerate(nu.padded(k)))
    value = coefficient_of(product, target)
    verify(value.denominator == 1, "Brute force Littlewood-Richardson coefficient %s is not integral", value)
    return int(value)

def expansion_to_polynomial(expansion: Mapping[Partition, int], k: int) -> MultiPoly:
    "Sum of c * s_lambda in k variables"
    result = poly_ring(k).zero
    for lam, coeff in expansion.items():
        if lam.length <= k:
            result += schur_ssyt(lam, k).mul_ground(to_coefficient(coeff))
    return result

def complete_or_elementary(m: int, k: int, kind: Literal["row", "column"]) -> MultiPoly:
    "h_m for the row kind and e_m for the column kind, in k variables"
    return sym_generators("complete" if kind == "row" else "elementary", m, k)
