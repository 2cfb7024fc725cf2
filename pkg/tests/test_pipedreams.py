
import pytest

from schubCalc import DomainError
from schubCalc.combinatorics import Permutation, all_permutations, identity, perm_length
from schubCalc.polynomials import gens
from schubCalc.flags import schubert_polynomial
from schubCalc.pipedreams import (
    PipeDream,
    trace_permutation,
    is_reduced,
    reading_word,
    enumerate_reduced,
    count_reduced,
    fk_polynomial,
    render,
)


def W(literal):
    return Permutation.parse(literal)


def test_dreams_of_132():
    dreams = enumerate_reduced("132")
    assert [dream.sorted_crosses for dream in dreams] == [((1, 2),), ((2, 1),)]

@pytest.mark.parametrize("w,count", [("1432", 5), ("123", 1), ("321", 1), ("2143", 3), ("1342", 3)])
def test_dream_counts(w, count):
    assert count_reduced(w) == count

def test_identity_has_the_empty_dream():
    dreams = enumerate_reduced(identity(4))
    assert len(dreams) == 1
    assert not dreams[0].crosses

def test_non_reduced_dream():
    dream = PipeDream(4, {(1, 3), (2, 1), (2, 2), (3, 1)})
    assert trace_permutation(dream) == W("1342")
    assert not is_reduced(dream)

def test_trace_examples():
    assert trace_permutation(PipeDream(3)) == identity(3)
    assert trace_permutation(PipeDream(2, {(1, 1)})) == W("21")
    assert is_reduced(PipeDream(2, {(1, 1)}))

def test_crosses_stay_in_the_staircase():
    with pytest.raises(DomainError):
        PipeDream(3, {(2, 2)})
    with pytest.raises(DomainError):
        PipeDream(3, {(0, 1)})

def test_row_counts():
    dream = PipeDream(4, {(1, 1), (1, 2), (3, 1)})
    assert dream.row_counts() == (2, 0, 1)

@pytest.mark.parametrize("w", all_permutations(4))
def test_reduced_dreams_trace_back(w):
    for dream in enumerate_reduced(w):
        assert trace_permutation(dream) == w
        assert is_reduced(dream)
        assert len(dream) == perm_length(w)
        assert reading_word(dream).product() == w


def test_fk_examples():
    x1, x2, x3 = gens(3)
    assert fk_polynomial("1432") == x1**2*x2 + x1**2*x3 + x1*x2**2 + x1*x2*x3 + x2**2*x3
    y1, y2 = gens(2)
    assert fk_polynomial("132") == y1 + y2

@pytest.mark.parametrize("w", all_permutations(4))
def test_fk_equals_schubert(w):
    assert fk_polynomial(w) == schubert_polynomial(w).poly

@pytest.mark.slow
@pytest.mark.parametrize("w", all_permutations(5))
def test_fk_equals_schubert_s5(w):
    assert fk_polynomial(w) == schubert_polynomial(w).poly


def test_render():
    assert render(PipeDream(3, {(1, 2)})) == ". + /\n. /\n/"
    assert render(PipeDream(1)) == "/"
