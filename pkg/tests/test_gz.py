
from fractions import Fraction
from itertools import combinations

import pytest

from schubCalc import DomainError
from schubCalc.helpers import DimensionError, DegreeMismatchError, UsageError
from schubCalc.combinatorics import Permutation, all_permutations, identity, longest, simple, compose, bruhat_covers
from schubCalc.polynomials import poly_ring, evaluate
from schubCalc.pipedreams import count_reduced
from schubCalc.gz import (
    Weight,
    GZPattern,
    weyl_dimension,
    gz_lattice_points,
    projection_pi,
    KoganFace,
    kogan_face_word,
    is_reduced_face,
    face_permutation,
    face_dimension,
    enumerate_reduced_kogan_faces,
    face_lattice_points,
    face_volume,
    lattice_character,
    character_is_symmetric,
    demazure_points,
    demazure_character,
    demazure_dimension,
    ehrhart_series,
    ehrhart_degree,
    gz_volume_polynomial,
    volume_estimate,
    kp_pairing,
    kp_duality_matrix,
    flag_schubert_degree,
)


def W(literal):
    return Permutation.parse(literal)

LAMBDA = Weight((0, 1, 2))

##Every strictly increasing weight with entries in 0..4, for n = 2, 3, 4
SMALL_STRICT_WEIGHTS = [lam for n in (2, 3, 4) for lam in combinations(range(5), n)]


## patterns

@pytest.mark.parametrize("lam,count", [((0, 2), 3), ((0, 1, 2), 8), ((0, 0, 0), 1), ((0, 1, 3), 15)])
def test_lattice_point_counts(lam, count):
    assert len(gz_lattice_points(lam)) == count
    assert weyl_dimension(lam) == count

def test_lattice_points_are_ordered():
    points = gz_lattice_points((0, 2))
    assert [p.rows for p in points] == [((0, 2), (0,)), ((0, 2), (1,)), ((0, 2), (2,))]

def test_weight_parse():
    assert Weight.parse("0,1,2") == LAMBDA
    assert str(LAMBDA) == "(0,1,2)"
    assert LAMBDA.scaled(2) == Weight((0, 2, 4))
    with pytest.raises(UsageError):
        Weight.parse("0,x")

def test_decreasing_weight_rejected():
    with pytest.raises(DomainError):
        gz_lattice_points((2, 1))

def test_pattern_interlacing():
    with pytest.raises(DomainError):
        GZPattern(((0, 2), (3,)))
    with pytest.raises(DimensionError):
        GZPattern(((0, 2), (1, 1)))

def test_projection():
    assert projection_pi(GZPattern(((0, 1, 2), (0, 1), (0,)))) == LAMBDA
    assert projection_pi(GZPattern(((0, 1, 2), (1, 2), (2,)))) == Weight((2, 1, 0))
    assert projection_pi(GZPattern(((0, 2), (1,)))) == Weight((1, 1))

def test_full_character_is_symmetric():
    character = lattice_character(gz_lattice_points(LAMBDA))
    assert character.dimension == 8
    assert character.multiplicity((1, 1, 1)) == 2
    assert character_is_symmetric(character)


## faces

def test_face_word_of_the_figure():
    face = KoganFace(4, {(3, 1), (2, 1), (1, 1), (1, 3)})
    assert kogan_face_word(face).letters == (3, 2, 1, 3)
    assert is_reduced_face(face)
    assert face_permutation(face) == W("4132")

def test_non_reduced_face():
    face = KoganFace(3, {(2, 1), (1, 2)})
    assert kogan_face_word(face).letters == (2, 2)
    assert not is_reduced_face(face)

def test_empty_face():
    face = KoganFace(3)
    assert kogan_face_word(face).letters == ()
    assert face_permutation(face) == identity(3)
    assert face_dimension(face) == 3

def test_face_positions_checked():
    with pytest.raises(DomainError):
        KoganFace(3, {(2, 2)})

@pytest.mark.parametrize("k", [1, 2, 3])
def test_faces_of_simple_reflections(k):
    faces = enumerate_reduced_kogan_faces(simple(k, 4))
    assert len(faces) == k
    assert all(len(face) == 1 for face in faces)

def test_identity_has_one_face():
    assert enumerate_reduced_kogan_faces(identity(4)) == [KoganFace(4)]
    assert len(enumerate_reduced_kogan_faces(longest(3))) == 1

@pytest.mark.parametrize("w", all_permutations(4))
def test_face_counts_match_pipe_dreams(w):
    faces = enumerate_reduced_kogan_faces(w)
    assert len(faces) == count_reduced(w)
    assert all(face_permutation(face) == w for face in faces)

def test_face_lattice_points():
    assert len(face_lattice_points(KoganFace(3, {(1, 1)}), LAMBDA)) == 5
    with pytest.raises(DomainError):
        face_lattice_points(KoganFace(3), (0, 1))


## Demazure characters

@pytest.mark.parametrize("w,dim", [("123", 8), ("213", 5), ("132", 5), ("231", 2), ("312", 2), ("321", 1)])
def test_demazure_dimensions(w, dim):
    assert demazure_dimension(w, LAMBDA) == dim
    assert demazure_character(w, LAMBDA).dimension == dim

def test_demazure_dimension_drops_along_bruhat_order():
    for v, w in bruhat_covers(3):
        assert demazure_dimension(v, LAMBDA) >= demazure_dimension(w, LAMBDA)
        assert set(demazure_points(w, LAMBDA)) <= set(demazure_points(v, LAMBDA))

def test_identity_character_is_symmetric():
    assert character_is_symmetric(demazure_character(identity(3), LAMBDA))
    assert not character_is_symmetric(demazure_character(longest(3), LAMBDA))

@pytest.mark.parametrize("lam", SMALL_STRICT_WEIGHTS, ids=str)
def test_extreme_demazure_modules(lam):
    n = len(lam)
    full = demazure_character(identity(n), lam)
    assert full.dimension == len(gz_lattice_points(lam))
    assert character_is_symmetric(full)
    assert demazure_dimension(longest(n), lam) == 1

def test_identity_dimension_is_the_weyl_dimension(rng):
    for _ in range(5):
        n = rng.randint(2, 4)
        steps = [rng.randint(1, 2) for _ in range(n - 1)]
        lam = Weight(tuple(sum(steps[:i]) for i in range(n)))
        assert demazure_dimension(identity(n), lam) == weyl_dimension(lam)

def test_demazure_needs_strict_weight():
    with pytest.raises(DomainError):
        demazure_dimension("123", (0, 0, 1))
    with pytest.raises(DimensionError):
        demazure_dimension("12", LAMBDA)

def test_ehrhart_series():
    assert ehrhart_series("12", (0, 1), 3) == [1, 2, 3, 4]
    assert ehrhart_series("21", (0, 1), 2) == [1, 1, 1]
    with pytest.raises(DomainError):
        ehrhart_series("12", (0, 1), -1)


## volumes and pairings

def test_volume_polynomials():
    l1, l2 = poly_ring(2, "l").gens
    assert gz_volume_polynomial(2) == l2 - l1
    assert evaluate(gz_volume_polynomial(3), [0, 1, 2]) == 1
    assert gz_volume_polynomial(1) == poly_ring(1, "l").one

def test_volume_estimate():
    assert volume_estimate((0, 1), 2) == Fraction(3, 2)
    with pytest.raises(DomainError):
        volume_estimate((0, 1), 0)

def test_face_volumes():
    assert face_volume(KoganFace(3), LAMBDA) == 1
    assert face_volume(KoganFace(3, {(1, 1), (1, 2), (2, 1)}), LAMBDA) == 1
    assert face_volume(KoganFace(2), (0, 3)) == 3
    assert face_volume(KoganFace(3), (0, 2, 4)) == 8

@pytest.mark.parametrize("lam", [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
def test_full_volume_matches_the_polynomial(lam):
    assert face_volume(KoganFace(3), lam) == evaluate(gz_volume_polynomial(3), lam)

def test_pairing_examples():
    assert kp_pairing("12", "21") == 1
    assert kp_pairing("21", "12") == 1
    assert kp_pairing("213", "312") == 0
    assert kp_pairing("213", compose(longest(3), W("213"))) == 1

def test_pairing_needs_complementary_lengths():
    with pytest.raises(DegreeMismatchError):
        kp_pairing("21", "21", 2)
    with pytest.raises(DimensionError):
        kp_pairing("21", "123")

@pytest.mark.parametrize("n", [2, 3])
def test_pairing_matrix(n):
    matrix = kp_duality_matrix(n)
    w0 = longest(n)
    for w in matrix.rows:
        for v in matrix.cols:
            assert matrix.entry(w, v) == (1 if v == compose(w0, w) else 0)


## degrees

def test_degree_examples():
    assert flag_schubert_degree("321", LAMBDA) == 1
    assert flag_schubert_degree("123", LAMBDA) == 6
    for d in range(1, 4):
        assert flag_schubert_degree("12", (0, d)) == d

@pytest.mark.parametrize("w", all_permutations(3))
def test_degrees_match_lattice_growth(w):
    assert flag_schubert_degree(w, LAMBDA) == ehrhart_degree(w, LAMBDA)

@pytest.mark.slow
@pytest.mark.parametrize("w", all_permutations(3))
def test_degrees_match_lattice_growth_of_a_wider_weight(w):
    assert flag_schubert_degree(w, (0, 2, 5)) == ehrhart_degree(w, (0, 2, 5))

def test_volume_is_the_growth_of_the_dilates():
    assert volume_estimate(LAMBDA, 20) == Fraction(21**3, 20**3)
    assert len(gz_lattice_points(LAMBDA.scaled(20))) == 21**3

@pytest.mark.parametrize("lam", [(0, 1), (0, 2, 5), (1, 2, 4, 6)])
def test_longest_element_has_one_point(lam):
    assert demazure_dimension(longest(len(lam)), lam) == 1
