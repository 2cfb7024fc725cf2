
from fractions import Fraction

import pytest

from schubCalc import DomainError
from schubCalc.helpers import DimensionError
from schubCalc.combinatorics import Partition, Box, partitions_in_box, complement, contains, q_binomial, grassmannian_point_count
from schubCalc.polynomials import evaluate, from_terms
from schubCalc.grassmannian import (
    GrClassSum,
    pieri_multiply,
    gr_product,
    gr_power,
    gr_product_table,
    duality_pairing,
    gr_poincare,
    grassmannian_degree,
    schubert_degree_gr,
    special_power_top,
    plucker_ring,
    plucker_quadrics_k2,
    is_decomposable,
    plucker_coordinates,
)


def P(*parts):
    return Partition(parts)

def sigma(lam, k=2, n=4):
    return GrClassSum.basis(lam, k, n)


def test_class_sum_normalizes():
    x = GrClassSum(Box(2, 2), {P(1): 2, P(2): 0})
    assert dict(x.terms) == {P(1): 2}
    assert str(x) == "2*s[1]"
    assert str(GrClassSum.zero(2, 4)) == "0"
    assert x.k == 2 and x.n == 4

def test_class_sum_rejects_outside_box():
    with pytest.raises(DimensionError):
        sigma(P(3))

def test_class_sums_need_the_same_grassmannian():
    with pytest.raises(DimensionError):
        sigma(P(1)) + sigma(P(1), 2, 5)


def test_pieri_examples():
    s1 = sigma(P(1))
    assert pieri_multiply(s1, 1) == sigma(P(2)) + sigma(P(1, 1))
    assert pieri_multiply(pieri_multiply(s1, 1), 1) == sigma(P(2, 1)).scale(2)
    assert pieri_multiply(s1, 0) == s1
    assert pieri_multiply(sigma(P()), 2, "column") == sigma(P(1, 1))

def test_pieri_degree_bounds():
    with pytest.raises(DomainError):
        pieri_multiply(sigma(P()), 3)
    with pytest.raises(DomainError):
        pieri_multiply(sigma(P()), 3, "column")

def test_four_lines():
    s1 = sigma(P(1))
    assert gr_power(s1, 4) == sigma(P(2, 2)).scale(2)
    assert s1 * s1 * s1 * s1 == sigma(P(2, 2)).scale(2)
    assert str(gr_power(s1, 4)) == "2*s[2,2]"
    assert special_power_top(2, 4) == sigma(P(2, 2)).scale(2)

def test_product_vanishes_outside_complement():
    box = Box(2, 2)
    for lam in partitions_in_box(box):
        for mu in partitions_in_box(box):
            product = gr_product(sigma(lam), sigma(mu))
            if not contains(complement(mu, box), lam):
                assert not product

@pytest.mark.parametrize("k,n", [(2, 5), (3, 6)])
def test_product_is_commutative_and_graded(k, n):
    table = gr_product_table(k, n)
    for (lam, mu), product in table.items():
        assert product == table[(mu, lam)]
        assert all(nu.size == lam.size + mu.size for nu in product.terms)

def test_product_is_associative(rng):
    for k, n in [(2, 5), (3, 6)]:
        basis = partitions_in_box(Box.grassmannian(k, n))
        for _ in range(10):
            a, b, c = (sigma(rng.choice(basis), k, n) for _ in range(3))
            assert (a * b) * c == a * (b * c)

@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_pieri_matches_product(m):
    for lam in partitions_in_box(Box.grassmannian(2, 5)):
        x = sigma(lam, 2, 5)
        assert pieri_multiply(x, m) == gr_product(x, sigma(P(m), 2, 5))


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6)])
def test_duality(k, n):
    box = Box.grassmannian(k, n)
    matrix = duality_pairing(k, n)
    for lam in matrix.rows:
        for mu in matrix.cols:
            assert matrix.entry(lam, mu) == (1 if mu == complement(lam, box) else 0)

def test_duality_stratum_is_a_permutation_matrix():
    matrix = duality_pairing(2, 4).stratum(2, lambda lam: lam.size)
    assert matrix.rows == (P(2), P(1, 1))
    assert matrix.entries == ((1, 0), (0, 1))
    matrix = duality_pairing(2, 5).stratum(3, lambda lam: lam.size)
    assert all(sum(row) == 1 for row in matrix.entries)


def test_poincare():
    assert gr_poincare(2, 4) == q_binomial(4, 2)
    assert gr_poincare(2, 4) == from_terms({(0,): 1, (1,): 1, (2,): 2, (3,): 1, (4,): 1}, 1, "q")
    assert gr_poincare(1, 4) == from_terms({(i,): 1 for i in range(4)}, 1, "q")

@pytest.mark.parametrize("k,n", [(1, 3), (2, 3), (2, 4), (1, 4)])
def test_poincare_counts_points(k, n):
    assert evaluate(gr_poincare(k, n), [2]) == grassmannian_point_count(k, n, 2)


@pytest.mark.parametrize("k,n,degree", [(2, 4, 2), (2, 5, 5), (3, 6, 42)])
def test_degrees(k, n, degree):
    assert schubert_degree_gr(P(), k, n) == degree
    assert grassmannian_degree(k, n) == degree

def test_degree_of_a_point():
    assert schubert_degree_gr(P(2, 2), 2, 4) == 1
    with pytest.raises(DimensionError):
        schubert_degree_gr(P(3), 2, 4)

@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 5)])
def test_degree_from_sigma_one_power(k, n):
    box = Box.grassmannian(k, n)
    assert special_power_top(k, n).coefficient(box.full) == grassmannian_degree(k, n)


def test_plucker_relation_n4():
    relations = plucker_quadrics_k2(4)
    assert len(relations) == 1
    p12, p13, p14, p23, p24, p34 = plucker_ring(4).gens
    assert relations[0] == p12 * p34 - p13 * p24 + p14 * p23

def test_plucker_relation_counts():
    assert plucker_quadrics_k2(3) == []
    assert len(plucker_quadrics_k2(6)) == 15
    with pytest.raises(DomainError):
        plucker_quadrics_k2(1)

def test_decomposable():
    assert is_decomposable([1, 0, 0, 0, 0, 0])
    assert not is_decomposable([1, 0, 0, 0, 0, 1])
    assert is_decomposable([1, 1, 1, 1, 1, 0])
    assert is_decomposable([Fraction(1, 2), Fraction(1, 3), 0, 0, 0, 0])
    assert not is_decomposable([Fraction(1, 2), 0, 0, 0, 0, Fraction(2, 3)])
    assert not is_decomposable([1, 0, 0, 0, 0, 0, 0, 0, 0, 1])
    with pytest.raises(DimensionError):
        is_decomposable([1, 0, 0, 0])

def test_planes_are_decomposable(rng):
    for n in range(2, 7):
        matrix = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(2)]
        assert is_decomposable(plucker_coordinates(matrix))

def test_plucker_coordinates():
    assert plucker_coordinates([[1, 0, 0], [0, 1, 0]]) == (1, 0, 0)
