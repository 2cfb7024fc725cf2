"""
The cohomology ring of the Grassmannian Gr(k,n) in the basis of Schubert classes sigma_lambda, lambda inside the k x (n-k) box.

Products go through Schur polynomials in k variables: s_lambda * s_mu is expanded there and partitions sticking out of the box are dropped.
Restricting to k variables kills exactly the s_nu with more than k rows, and dropping nu_1 > n-k is the rest of the projection onto the cohomology ring, so the result is exact.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from types import MappingProxyType
from typing import Literal, Mapping, Sequence, Union

from sympy.polys.rings import PolyRing
from sympy.polys.domains import QQ
from sympy.polys.orderings import lex

import schubCalc
from schubCalc import DomainError
from schubCalc.helpers import DimensionError, verify, as_fraction
from schubCalc.combinatorics import (
    Partition,
    Box,
    as_partition,
    partitions_in_box,
    complement,
    hooks_and_syt_count,
    q_binomial,
)
from schubCalc.polynomials import MultiPoly, from_terms, evaluate
from schubCalc.schur import schur_ssyt, schur_expand, pieri_partition_set

_LOGGER = schubCalc.getLogger(__name__)


@dataclass(frozen=True)
class GrClassSum:
    """An integer combination of Schubert classes of Gr(k,n).

    ``terms`` maps partitions inside ``box`` to nonzero coefficients.
    """

    box: Box
    terms: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for lam, coeff in self.terms.items():
            lam = as_partition(lam)
            if not lam.fits(self.box):
                raise DimensionError(f"{lam} does not fit in the {self.box} box")
            coeff = int(coeff)
            if coeff:
                cleaned[lam] = cleaned.get(lam, 0) + coeff
        cleaned = {lam: c for lam, c in sorted(cleaned.items(), key=lambda item: item[0].sort_key()) if c}
        object.__setattr__(self, "terms", MappingProxyType(cleaned))

    @classmethod
    def basis(cls, lam: Union[Partition, Sequence[int]], k: int, n: int) -> "GrClassSum":
        "The class sigma_lambda in Gr(k,n)"
        return cls(Box.grassmannian(k, n), {as_partition(lam): 1})

    @classmethod
    def zero(cls, k: int, n: int) -> "GrClassSum":
        return cls(Box.grassmannian(k, n))

    @property
    def k(self) -> int:
        return self.box.rows

    @property
    def n(self) -> int:
        return self.box.rows + self.box.cols

    def _check_context(self, other: "GrClassSum"):
        if self.box != other.box:
            raise DimensionError(f"Classes live in different Grassmannians: box {self.box} and box {other.box}")

    def __add__(self, other: "GrClassSum") -> "GrClassSum":
        self._check_context(other)
        terms = dict(self.terms)
        for lam, coeff in other.terms.items():
            terms[lam] = terms.get(lam, 0) + coeff
        return GrClassSum(self.box, terms)

    def scale(self, factor: int) -> "GrClassSum":
        return GrClassSum(self.box, {lam: factor * c for lam, c in self.terms.items()})

    def __mul__(self, other: "GrClassSum") -> "GrClassSum":
        return gr_product(self, other)

    def coefficient(self, lam) -> int:
        return self.terms.get(as_partition(lam), 0)

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for lam, coeff in sorted(self.terms.items(), key=lambda item: (-item[0].size, item[0].parts), reverse=False):
            parts.append(f"s{lam}" if coeff == 1 else f"{coeff}*s{lam}")
        return " + ".join(parts)


def _check_pieri_degree(box: Box, m: int, kind: str):
    limit = box.cols if kind == "row" else box.rows
    if not 0 <= m <= limit:
        raise DomainError(f"Pieri multiplication by a {kind} of {m} boxes needs 0 <= m <= {limit} in the {box} box")

def pieri_multiply(x: GrClassSum, m: int, kind: Literal["row", "column"] = "row") -> GrClassSum:
    """Multiplies by the special class sigma_m (``row``) or sigma_{1^m} (``column``) with the Pieri rule.

    Each sigma_lambda goes to the sum of sigma_nu over the partitions nu obtained by adding m boxes, no two in one column (row kind) or row (column kind), that still fit the box.
    """
    _check_pieri_degree(x.box, m, kind)
    terms: dict[Partition, int] = {}
    for lam, coeff in x.terms.items():
        for nu in pieri_partition_set(lam, m, kind):
            if nu.fits(x.box):
                terms[nu] = terms.get(nu, 0) + coeff
    return GrClassSum(x.box, terms)

@lru_cache(maxsize=None)
def _basis_product(lam: Partition, mu: Partition, box: Box) -> tuple[tuple[Partition, int], ...]:
    k = box.rows
    if lam.size + mu.size > box.area:
        return ()
    expansion = schur_expand(schur_ssyt(lam, k) * schur_ssyt(mu, k), expect_positive=True)
    kept = []
    for nu, coeff in expansion.items():
        verify(nu.size == lam.size + mu.size, "Product s%s * s%s produced s%s of the wrong degree", lam, mu, nu)
        if nu.fits(box):
            kept.append((nu, coeff))
    _LOGGER.debug(f"sigma{lam} * sigma{mu} in the {box} box has {len(kept)} terms")
    return tuple(kept)

def gr_product(x: GrClassSum, y: GrClassSum) -> GrClassSum:
    "The product in the cohomology ring of Gr(k,n), bilinear over the basis products"
    x._check_context(y)
    terms: dict[Partition, int] = {}
    for lam, a in x.terms.items():
        for mu, b in y.terms.items():
            key = (lam, mu) if lam.parts <= mu.parts else (mu, lam)
            for nu, c in _basis_product(*key, x.box):
                terms[nu] = terms.get(nu, 0) + a * b * c
    return GrClassSum(x.box, terms)

def gr_power(x: GrClassSum, exponent: int) -> GrClassSum:
    if exponent < 0:
        raise DomainError(f"Exponent must be nonnegative, got {exponent}")
    result = GrClassSum(x.box, {Partition(): 1})
    for _ in range(exponent):
        result = gr_product(result, x)
    return result

def gr_product_table(k: int, n: int) -> dict[tuple[Partition, Partition], GrClassSum]:
    "Every product sigma_lambda * sigma_mu of basis classes of Gr(k,n)"
    box = Box.grassmannian(k, n)
    basis = partitions_in_box(box)
    return {
        (lam, mu): gr_product(GrClassSum(box, {lam: 1}), GrClassSum(box, {mu: 1}))
        for lam in basis for mu in basis
    }


@dataclass(frozen=True)
class DualityMatrix:
    """Coefficient of the point class in sigma_lambda * sigma_mu, for all basis pairs.

    Rows and columns are indexed by the same basis, so the matrix is square. It vanishes off the complementary degree strata.
    """

    rows: tuple
    cols: tuple
    entries: tuple[tuple[int, ...], ...]

    def entry(self, row, col) -> int:
        return self.entries[self.rows.index(row)][self.cols.index(col)]

    def stratum(self, degree: int, degree_of) -> "DualityMatrix":
        "The square block pairing basis elements of ``degree`` with the complementary ones"
        row_idx = [i for i, r in enumerate(self.rows) if degree_of(r) == degree]
        top = max(degree_of(c) for c in self.cols)
        col_idx = [j for j, c in enumerate(self.cols) if degree_of(c) == top - degree]
        return DualityMatrix(
            tuple(self.rows[i] for i in row_idx),
            tuple(self.cols[j] for j in col_idx),
            tuple(tuple(self.entries[i][j] for j in col_idx) for i in row_idx),
        )

def duality_pairing(k: int, n: int) -> DualityMatrix:
    """The pairing matrix of Gr(k,n): entry (lambda, mu) is the coefficient of the point class in sigma_lambda * sigma_mu.

    Checked to be 1 exactly when mu is the complement of lambda and 0 otherwise.
    """
    box = Box.grassmannian(k, n)
    basis = tuple(partitions_in_box(box))
    point = box.full
    entries = []
    for lam in basis:
        row = []
        for mu in basis:
            if lam.size + mu.size != box.area:
                row.append(0)
                continue
            value = gr_product(GrClassSum(box, {lam: 1}), GrClassSum(box, {mu: 1})).coefficient(point)
            verify(value == (1 if mu == complement(lam, box) else 0),
                   "Pairing of sigma%s and sigma%s in Gr(%s,%s) is %s", lam, mu, k, n, value)
            row.append(value)
        entries.append(tuple(row))
    return DualityMatrix(basis, basis, tuple(entries))

def gr_poincare(k: int, n: int) -> MultiPoly:
    "The Poincare polynomial of Gr(k,n) in q, the q-binomial coefficient, checked against the cell count"
    box = Box.grassmannian(k, n)
    result = q_binomial(n, k)
    counts: dict[tuple[int], int] = {}
    for lam in partitions_in_box(box):
        counts[(lam.size,)] = counts.get((lam.size,), 0) + 1
    verify(result == from_terms(counts, 1, "q"), "Poincare polynomial of Gr(%s,%s) disagrees with the cell count", k, n)
    return result

def grassmannian_degree(k: int, n: int) -> int:
    "Degree of Gr(k,n) in its Pluecker embedding: (k(n-k))! * prod over i < k of i! / (n-k+i)!"
    box = Box.grassmannian(k, n)
    value = Fraction(factorial(box.area))
    for i in range(k):
        value *= Fraction(factorial(i), factorial(box.cols + i))
    verify(value.denominator == 1, "Degree formula for Gr(%s,%s) is not integral", k, n)
    return value.numerator

def schubert_degree_gr(lam: Partition, k: int, n: int) -> int:
    """Degree of the Schubert variety X_lambda in Gr(k,n): the number of standard tableaux of the complement of lambda.

    For the empty partition the answer is checked against the closed formula for the degree of the Grassmannian.
    """
    box = Box.grassmannian(k, n)
    lam = as_partition(lam)
    if not lam.fits(box):
        raise DimensionError(f"{lam} does not fit in the {box} box")
    _, count = hooks_and_syt_count(complement(lam, box))
    if not lam:
        verify(count == grassmannian_degree(k, n), "Hook length degree %s of Gr(%s,%s) disagrees with the closed formula", count, k, n)
    return count

def special_power_top(k: int, n: int) -> GrClassSum:
    "sigma_1 to the power k(n-k), computed with the Pieri rule; a multiple of the point class"
    box = Box.grassmannian(k, n)
    result = GrClassSum(box, {Partition(): 1})
    for _ in range(box.area):
        result = pieri_multiply(result, 1)
    return result


def plucker_index_pairs(n: int) -> list[tuple[int, int]]:
    "The pairs (i,j), i<j, in lexicographic order; the order of Pluecker coordinates"
    return list(combinations(range(1, n + 1), 2))

@lru_cache(maxsize=None)
def plucker_ring(n: int) -> PolyRing:
    sep = "" if n <= 9 else "_"
    return PolyRing([f"p{i}{sep}{j}" for i, j in plucker_index_pairs(n)], QQ, lex)

def plucker_quadrics_k2(n: int) -> list[MultiPoly]:
    """The three term relations p_ij p_kl - p_ik p_jl + p_il p_jk for all i<j<k<l, as polynomials in the Pluecker coordinates.

    There are binomial(n,4) of them; none for n < 4.
    """
    if n < 2:
        raise DomainError(f"Pluecker coordinates of 2-planes need n >= 2, got {n}")
    ring = plucker_ring(n)
    index = {pair: gen for pair, gen in zip(plucker_index_pairs(n), ring.gens)}
    relations = []
    for i, j, k, l in combinations(range(1, n + 1), 4):
        relations.append(index[(i, j)] * index[(k, l)] - index[(i, k)] * index[(j, l)] + index[(i, l)] * index[(j, k)])
    verify(len(relations) == comb(n, 4), "Expected binomial(%s,4) Pluecker relations", n)
    return relations

def _n_from_coordinates(count: int) -> int:
    n = 2
    while comb(n, 2) < count:
        n += 1
    if comb(n, 2) != count:
        raise DimensionError(f"{count} is not the number of Pluecker coordinates of any Gr(2,n)")
    return n

def is_decomposable(omega: Sequence) -> bool:
    """True if the bivector with the given Pluecker coordinates is decomposable, i.e. all three term relations vanish.

    ``omega`` lists the coefficients of e_i ^ e_j in lexicographic (i,j) order, as exact rationals.
    """
    values = [as_fraction(v) for v in omega]
    n = _n_from_coordinates(len(values))
    return all(evaluate(relation, values) == 0 for relation in plucker_quadrics_k2(n))

def plucker_coordinates(matrix: Sequence[Sequence]) -> tuple[Fraction, ...]:
    "The 2x2 minors of a 2 x n matrix, in lexicographic (i,j) order: the Pluecker coordinates of its row space"
    if len(matrix) != 2 or len(matrix[0]) != len(matrix[1]):
        raise DimensionError("Pluecker coordinates need a 2 x n matrix")
    top = [as_fraction(v) for v in matrix[0]]
    bottom = [as_fraction(v) for v in matrix[1]]
    n = len(top)
    return tuple(top[i-1] * bottom[j-1] - top[j-1] * bottom[i-1] for i, j in plucker_index_pairs(n))
