
import pytest

from schubCalc import DomainError
from schubCalc.helpers import VerificationError
from schubCalc.combinatorics import Partition, Box, partitions_in_box, partitions_of
from schubCalc.polynomials import gens, elementary, complete, coefficient_of
from schubCalc.schur import (
    schur_polynomial,
    schur_bialternant,
    schur_ssyt,
    pieri_partition_set,
    pieri_multiply_schur,
    schur_expand,
    schur_product,
    lr_coefficient,
    lr_coefficient_bruteforce,
    expansion_to_polynomial,
    complete_or_elementary,
)


def P(*parts):
    return Partition(parts)


def test_schur_21_in_three_variables():
    x, y, z = gens(3)
    expected = x**2*y + x**2*z + x*y**2 + 2*x*y*z + x*z**2 + y**2*z + y*z**2
    assert schur_polynomial(P(2, 1), 3) == expected
    assert schur_polynomial(P(2, 1), 3, "bialternant") == expected
    assert coefficient_of(expected, (1, 1, 1)) == 2

@pytest.mark.parametrize("m", range(0, 4))
@pytest.mark.parametrize("k", range(1, 4))
def test_schur_of_row_and_column(m, k):
    assert schur_ssyt(P(m), k) == complete(m, k)
    assert schur_ssyt(Partition((1,) * m), k) == elementary(m, k)

def test_schur_edge_cases():
    assert schur_ssyt(P(1, 1, 1), 2) == 0
    assert schur_ssyt(P(), 3) == 1
    with pytest.raises(DomainError):
        schur_bialternant(P(1, 1, 1), 2)

@pytest.mark.parametrize("k", [3, 4])
def test_bialternant_equals_tableau_sum(k):
    for lam in partitions_in_box(Box(3, 3)):
        assert schur_bialternant(lam, k) == schur_ssyt(lam, k)


def test_pieri_set_of_32():
    assert set(pieri_partition_set(P(3, 2), 2)) == {P(5, 2), P(4, 3), P(3, 3, 1), P(4, 2, 1), P(3, 2, 2)}
    assert len(pieri_partition_set(P(3, 2), 2)) == 5

def test_pieri_set_small():
    assert pieri_partition_set(P(), 1) == [P(1)]
    assert pieri_partition_set(P(), 1, "column") == [P(1)]
    assert pieri_partition_set(P(1), 1) == [P(2), P(1, 1)]
    assert pieri_partition_set(P(1), 2, "column") == [P(2, 1), P(1, 1, 1)]

@pytest.mark.parametrize("lam", [P(), P(1), P(2, 1), P(2, 2), P(3, 1)])
@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("kind", ["row", "column"])
def test_pieri_matches_expansion(lam, m, kind):
    k = lam.size + m
    product = schur_ssyt(lam, k) * complete_or_elementary(m, k, kind)
    assert schur_expand(product) == pieri_multiply_schur(lam, m, kind)


def test_schur_expand_examples():
    assert schur_expand(schur_ssyt(P(1), 4) ** 2) == {P(2): 1, P(1, 1): 1}
    assert schur_expand(complete(3, 3)) == {P(3): 1}
    assert schur_expand(elementary(1, 3) ** 3) == {P(3): 1, P(2, 1): 2, P(1, 1, 1): 1}

def test_schur_expand_rejects_asymmetric():
    x1, x2 = gens(2)
    with pytest.raises(DomainError):
        schur_expand(x1)

def test_schur_expand_positivity_check():
    with pytest.raises(VerificationError):
        schur_expand(-complete(2, 2), expect_positive=True)

def test_expansion_round_trip():
    f = schur_ssyt(P(2, 1), 3) * schur_ssyt(P(1), 3)
    assert expansion_to_polynomial(schur_expand(f), 3) == f


def test_lr_examples():
    assert lr_coefficient(P(1), P(1), P(2)) == 1
    assert lr_coefficient(P(1), P(1), P(1, 1)) == 1
    assert lr_coefficient(P(1), P(1), P(3)) == 0
    assert lr_coefficient(P(1), P(2), P(2, 1)) == 1
    assert lr_coefficient(P(2, 1), P(2, 1), P(3, 2, 1)) == 2

def test_schur_product():
    assert schur_product(P(1), P(1)) == {P(2): 1, P(1, 1): 1}

@pytest.mark.parametrize("total", range(0, 5))
def test_lr_symmetry_and_bruteforce(total):
    for a in range(total + 1):
        for lam in partitions_of(a):
            for mu in partitions_of(total - a):
                for nu in partitions_of(total):
                    value = lr_coefficient(lam, mu, nu)
                    assert value == lr_coefficient(mu, lam, nu)
                    assert value == lr_coefficient_bruteforce(lam, mu, nu)

@pytest.mark.slow
@pytest.mark.parametrize("total", [5, 6])
def test_lr_symmetry_larger(total):
    for a in range(1, total):
        for lam in partitions_of(a):
            for mu in partitions_of(total - a):
                for nu in partitions_of(total):
                    assert lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu)
