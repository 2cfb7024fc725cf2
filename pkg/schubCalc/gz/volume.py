"""
The volume polynomial of the Gelfand-Zetlin polytope, the pairing it induces on Schubert polynomials, and degrees of Schubert varieties from face volumes.
"""

from fractions import Fraction
from math import comb, factorial, prod
from typing import Optional, Union

import schubCalc
from schubCalc import DomainError
from schubCalc.helpers import DegreeMismatchError, DimensionError, verify
from schubCalc.configuration import get_config
from schubCalc.combinatorics import Permutation, as_permutation, all_permutations, compose, longest, perm_length
from schubCalc.polynomials import MultiPoly, poly_ring, apply_operator, evaluate, constant_term, to_coefficient, embed
from schubCalc.flags import schubert_poly_in
from schubCalc.grassmannian import DualityMatrix

from .patterns import Weight, as_weight, require_strict, weyl_dimension, gz_lattice_points
from .faces import enumerate_reduced_kogan_faces, face_volume
from .characters import ehrhart_degree

_LOGGER = schubCalc.getLogger(__name__)

EHRHART_CHECK_MAX_DEGREE = 3
"Largest face dimension for which degrees are cross-checked against lattice point counts of dilates"


def gz_volume_polynomial(n: int) -> MultiPoly:
    """The volume of the polytope as a function of lambda: prod over i > j of (l_i - l_j), divided by 1! 2! ... (n-1)!.

    The constant is checked against the growth of lattice point counts of the dilates of (0, 1, ..., n-1).
    """
    if n < 1:
        raise DomainError(f"Volume polynomial needs n >= 1, got {n}")
    ring = poly_ring(n, "l")
    lam = ring.gens
    constant = Fraction(1, prod(factorial(k) for k in range(1, n)))
    poly = ring.one
    for i in range(n):
        for j in range(i):
            poly *= lam[i] - lam[j]
    poly = poly.mul_ground(to_coefficient(constant))

    N = n * (n - 1) // 2
    base = Weight(tuple(range(n)))
    counts = [weyl_dimension(base.scaled(m)) for m in range(N + 1)]
    difference = sum((-1) ** (N - t) * comb(N, t) * counts[t] for t in range(N + 1))
    verify(Fraction(difference, factorial(N)) == evaluate(poly, base.entries),
           "Volume polynomial of size %s disagrees with the lattice point growth of %s", n, base)
    return poly

def volume_estimate(lam: Union[Weight, str], m: int) -> Fraction:
    "Lattice points of the m-th dilate divided by m^(n(n-1)/2); tends to the volume as m grows"
    lam = as_weight(lam)
    if m < 1:
        raise DomainError(f"Dilation factor must be positive, got {m}")
    N = lam.n * (lam.n - 1) // 2
    return Fraction(len(gz_lattice_points(lam.scaled(m))), m ** N)

def kp_pairing(w: Union[Permutation, str], v: Union[Permutation, str], n: Optional[int] = None) -> int:
    """Applies S_w S_v, with x_i acting as -d/dl_i, to the volume polynomial.

    The lengths must add up to n(n-1)/2, and the result is checked to be 1 for v = w0 w and 0 otherwise.
    """
    w, v = as_permutation(w), as_permutation(v)
    n = n or w.n
    if w.n != n or v.n != n:
        raise DimensionError(f"Pairing in size {n} needs permutations of S_{n}, got {w} and {v}")
    N = n * (n - 1) // 2
    if perm_length(w) + perm_length(v) != N:
        raise DegreeMismatchError(f"Lengths of {w} and {v} add up to {perm_length(w) + perm_length(v)}, not {N}")
    operator = schubert_poly_in(w, n) * schubert_poly_in(v, n)
    volume = embed(gz_volume_polynomial(n), n, "x")
    result = apply_operator(operator, volume, sign=-1)
    verify(result.is_ground, "Pairing of %s and %s is not a constant", w, v)
    value = constant_term(result)
    expected = 1 if v == compose(longest(n), w) else 0
    verify(value == expected, "Pairing of %s and %s is %s, expected %s", w, v, value, expected)
    return int(value)

def kp_duality_matrix(n: int) -> DualityMatrix:
    "kp_pairing over all pairs of S_n, 0 off the complementary length strata"
    perms = tuple(all_permutations(n))
    N = n * (n - 1) // 2
    entries = tuple(
        tuple(kp_pairing(w, v, n) if perm_length(w) + perm_length(v) == N else 0 for v in perms)
        for w in perms
    )
    return DualityMatrix(perms, perms, entries)

def flag_schubert_degree(w: Union[Permutation, str], lam: Union[Weight, str]) -> int:
    """Degree of the Schubert variety of w in the embedding given by lambda: d! times the total volume of the reduced Kogan faces of w, d = n(n-1)/2 - l(w).

    With ``engine.cross_check`` on and d small, compared with the d-th forward difference of the Demazure dimensions of the dilates.
    """
    w, lam = as_permutation(w), as_weight(lam)
    require_strict(lam)
    if w.n != lam.n:
        raise DimensionError(f"{w} is not a permutation of the {lam.n} coordinates of {lam}")
    d = lam.n * (lam.n - 1) // 2 - perm_length(w)
    total = sum((face_volume(face, lam) for face in enumerate_reduced_kogan_faces(w)), Fraction(0))
    degree = factorial(d) * total
    verify(degree.denominator == 1, "Degree of the Schubert variety of %s is not an integer: %s", w, degree)
    if get_config().engine.cross_check and d <= EHRHART_CHECK_MAX_DEGREE:
        oracle = ehrhart_degree(w, lam)
        verify(oracle == degree, "Face volume degree %s of %s disagrees with the lattice count degree %s", degree, w, oracle)
        _LOGGER.info(f"Degree {degree} of {w} matches the lattice point count of the dilates of {lam}")
    return degree.numerator
