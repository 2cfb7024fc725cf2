
import random
from fractions import Fraction

import pytest

from schubCalc import DomainError
from schubCalc.helpers import DimensionError, VerificationError
from schubCalc.polynomials import (
    poly_ring,
    gens,
    from_terms,
    monomial,
    integer_terms,
    sorted_terms,
    embed,
    add,
    multiply,
    evaluate,
    coefficient_of,
    to_coefficient,
    constant_term,
    leading_exponent,
    is_homogeneous,
    swap_variables,
    is_symmetric,
    poly_arith,
    partial_derivative,
    divided_difference,
    apply_word,
    apply_operator,
    check_exact_quotient,
    elementary,
    complete,
    alternant,
    sym_generators,
    vandermonde,
)


def random_poly(rng, nvars, terms=6, degree=4):
    return from_terms(
        {tuple(rng.randint(0, degree) for _ in range(nvars)): rng.randint(-5, 5) for _ in range(terms)},
        nvars,
    )


## arithmetic

def test_basic_arithmetic():
    x1, x2 = gens(2)
    assert (x1 + x2) * (x1 - x2) == x1**2 - x2**2
    assert evaluate(x1 * x2, [2, 3]) == 6

def test_coefficient_of():
    x, y, z = gens(3)
    f = x**2 * y + 2 * x * y * z
    assert coefficient_of(f, (1, 1, 1)) == 2
    assert coefficient_of(f, (0, 0, 0)) == 0
    assert coefficient_of(f, (1, 1, 1, 0)) == 2

def test_rings_are_aligned():
    x1, = gens(1)
    y1, y2 = gens(2)
    assert add(x1, y2) == y1 + y2
    assert multiply(x1, y2) == y1 * y2
    assert embed(y1, 1) == x1
    with pytest.raises(DimensionError):
        embed(y2, 1)

def test_poly_arith_dispatch():
    x1, x2 = gens(2)
    assert poly_arith("add", x1, x2) == x1 + x2
    assert coefficient_of(poly_arith("scalar", x1, Fraction(1, 2)), (1, 0)) == Fraction(1, 2)
    assert poly_arith("evaluate", x1 * x2, [3, 4]) == 12
    with pytest.raises(DomainError):
        poly_arith("divide", x1, x2)

def test_terms_and_leading_exponent():
    f = from_terms({(0, 2): 1, (1, 0): 3}, 2)
    assert leading_exponent(f) == (1, 0)
    assert sorted_terms(f)[0] == ((1, 0), Fraction(3))
    assert integer_terms(f) == {(1, 0): 3, (0, 2): 1}
    assert constant_term(f + 7) == 7
    assert not is_homogeneous(f)
    assert monomial((1, 2)) == from_terms({(1, 2): 1}, 2)

def test_integer_terms_rejects_fractions():
    with pytest.raises(VerificationError):
        integer_terms(from_terms({(1,): Fraction(1, 2)}, 1))

def test_from_terms_checks_exponents():
    with pytest.raises(DomainError):
        from_terms({(1,): 1}, 2)


## operators

def test_partial_derivative_examples():
    x, = gens(1)
    assert partial_derivative(x**2, 0) == 2 * x
    assert partial_derivative(x, 0, 2) == 0
    l1, l2, l3 = poly_ring(3, "l").gens
    volume = ((l2 - l1) * (l3 - l2) * (l3 - l1)).mul_ground(to_coefficient(Fraction(1, 2)))
    assert partial_derivative(partial_derivative(volume, 0, 2), 1) == -1

def test_divided_difference_examples():
    x1, x2 = gens(2)
    assert divided_difference(1, x1) == 1
    assert divided_difference(1, x1**2 * x2) == x1 * x2
    assert divided_difference(1, x1 + x2) == 0
    assert divided_difference(1, x1 * x2) == 0

def test_divided_difference_embeds():
    x1, = gens(1)
    assert divided_difference(2, x1**2) == 0
    assert divided_difference(1, x1**2).ring.ngens == 2

@pytest.mark.parametrize("seed", range(5))
def test_divided_difference_relations(seed):
    rng = random.Random(seed)
    f = random_poly(rng, 5)
    for i in range(1, 5):
        assert divided_difference(i, divided_difference(i, f)) == 0
        assert check_exact_quotient(i, f) == divided_difference(i, embed(f, max(5, i + 1)))
    for i in range(1, 4):
        assert apply_word((i, i + 1, i), f) == apply_word((i + 1, i, i + 1), f)
    for i in range(1, 5):
        for j in range(1, 5):
            if abs(i - j) > 1:
                assert apply_word((i, j), f) == apply_word((j, i), f)

def test_apply_word_order():
    x1, x2, x3 = gens(3)
    f = x1**2 * x2
    assert apply_word((1, 2), f) == divided_difference(1, divided_difference(2, f))

def test_apply_operator_signs():
    x1, x2 = gens(2)
    f = x2 - x1
    assert apply_operator(x1, f) == -1
    assert apply_operator(x1, f, sign=-1) == 1
    assert apply_operator(x1**2, f) == 0


## symmetric polynomials

def test_sym_generators():
    x1, x2, x3 = gens(3)
    assert elementary(1, 3) == x1 + x2 + x3
    assert complete(1, 3) == x1 + x2 + x3
    assert elementary(4, 3) == 0
    assert elementary(0, 3) == 1
    y1, y2 = gens(2)
    assert complete(2, 2) == y1**2 + y1 * y2 + y2**2

@pytest.mark.parametrize("k", range(1, 5))
def test_newton_style_identity(k):
    total = sum(((-1) ** m * elementary(m, k) * complete(k - m, k) for m in range(k + 1)), poly_ring(k).zero)
    assert total == 0

def test_alternant_examples():
    x1, x2 = gens(2)
    assert alternant((), 2) == x1 - x2
    assert alternant((1,), 2) == x1**2 - x2**2
    assert alternant((), 3) == vandermonde(3)
    a = alternant((2, 1), 3)
    assert swap_variables(a, 1) == -a
    with pytest.raises(DomainError):
        alternant((1, 1, 1), 2)

def test_alternants_divide_by_vandermonde():
    from schubCalc.combinatorics import Box, partitions_in_box
    for lam in partitions_in_box(Box(3, 3)):
        quotient = alternant(lam.parts, 3).exquo(vandermonde(3))
        assert is_symmetric(quotient)

def test_sym_generators_dispatch():
    x1, x2, x3 = gens(3)
    assert sym_generators("elementary", 2, 3) == x1*x2 + x1*x3 + x2*x3
    assert sym_generators("complete", 0, 3) == 1
    with pytest.raises(DomainError):
        sym_generators("power", 2, 3)
    with pytest.raises(DomainError):
        sym_generators("elementary", -1, 3)
