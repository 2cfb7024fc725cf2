"""
Kogan faces of the Gelfand-Zetlin polytope: the faces cut out by equalities x_ij = x_{i-1,j}.

The equality at (i,j) carries the label s_{i+j-1}. Reading the labels from the bottom row to the top, each row from left to right, gives the word of the face.
A face is reduced when that word is reduced; the reduced faces of w are those whose word multiplies out to w.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from sympy.polys.rings import PolyRing
from sympy.polys.domains import QQ
from sympy.polys.orderings import lex

import schubCalc
from schubCalc import DomainError
from schubCalc.helpers import verify, as_fraction
from schubCalc.combinatorics import Permutation, ReducedWord, as_permutation
from schubCalc.pipedreams import backtrack_reduced
from schubCalc.polynomials import MultiPoly, to_coefficient

from .patterns import Position, Weight, GZPattern, as_weight, require_increasing, gz_lattice_points

_LOGGER = schubCalc.getLogger(__name__)


@dataclass(frozen=True)
class KoganFace:
    "The face of the n-th Gelfand-Zetlin polytope where x_ij = x_{i-1,j} for every (i,j) in ``equalities``"

    n: int
    equalities: frozenset[Position] = frozenset()

    def __post_init__(self):
        equalities = frozenset((int(i), int(j)) for i, j in self.equalities)
        for i, j in equalities:
            if i < 1 or j < 1 or i + j > self.n:
                raise DomainError(f"Equality at ({i},{j}) is not a position of the size {self.n} pattern")
        object.__setattr__(self, "equalities", equalities)

    @property
    def sorted_equalities(self) -> tuple[Position, ...]:
        return tuple(sorted(self.equalities))

    def __len__(self):
        return len(self.equalities)


def _reading_positions(n: int) -> list[Position]:
    return [(i, j) for i in range(n - 1, 0, -1) for j in range(1, n - i + 1)]

def kogan_face_word(face: KoganFace) -> ReducedWord:
    "The labels s_{i+j-1} of the equalities, rows from bottom to top and each row left to right"
    positions = sorted(face.equalities, key=lambda pos: (-pos[0], pos[1]))
    return ReducedWord(tuple(i + j - 1 for i, j in positions), max(face.n, 1))

def is_reduced_face(face: KoganFace) -> bool:
    return kogan_face_word(face).is_reduced()

def face_permutation(face: KoganFace) -> Permutation:
    return kogan_face_word(face).product()

def face_dimension(face: KoganFace) -> int:
    "Number of free coordinates: each equality ties one coordinate to the one above it"
    return face.n * (face.n - 1) // 2 - len(face.equalities)

@lru_cache(maxsize=None)
def _reduced_faces(w: Permutation) -> tuple[KoganFace, ...]:
    n = w.n
    faces = [KoganFace(n, eq) for eq in backtrack_reduced(w, _reading_positions(n), lambda pos: pos[0] + pos[1] - 1)]
    faces.sort(key=lambda face: face.sorted_equalities)
    for face in faces:
        verify(face_permutation(face) == w, "Kogan face %s does not multiply to %s", face.sorted_equalities, w)
    _LOGGER.verbose(f"{len(faces)} reduced Kogan faces for {w}")
    return tuple(faces)

def enumerate_reduced_kogan_faces(w: Union[Permutation, str]) -> list[KoganFace]:
    "Every reduced Kogan face whose word multiplies out to w, ordered lexicographically by the sorted equalities"
    return list(_reduced_faces(as_permutation(w)))

def face_lattice_points(face: KoganFace, lam: Union[Weight, str]) -> list[GZPattern]:
    "The integral patterns of the face"
    lam = as_weight(lam)
    if lam.n != face.n:
        raise DomainError(f"Face of size {face.n} does not match the weight {lam}")
    return gz_lattice_points(lam, face.equalities)


## exact volumes

@lru_cache(maxsize=None)
def _free_ring(free: tuple[Position, ...]) -> PolyRing:
    return PolyRing([f"x{i}_{j}" for i, j in free] or ["t"], QQ, lex)

def _face_constraints(face: KoganFace, lam: Weight) -> tuple[PolyRing, list, list[MultiPoly]]:
    "The free coordinates as ring generators and the interlacing inequalities as linear polynomials g >= 0"
    n = face.n
    free = tuple((i, j) for i in range(1, n) for j in range(1, n - i + 1) if (i, j) not in face.equalities)
    ring = _free_ring(free)
    variables = list(ring.gens[:len(free)])
    value: dict[Position, MultiPoly] = {(0, j): ring(to_coefficient(lam[j-1])) for j in range(1, n + 1)}
    free_index = {pos: k for k, pos in enumerate(free)}
    for i in range(1, n):
        for j in range(1, n - i + 1):
            value[(i, j)] = value[(i - 1, j)] if (i, j) in face.equalities else variables[free_index[(i, j)]]

    constraints = []
    for i in range(1, n):
        for j in range(1, n - i + 1):
            for g in (value[(i, j)] - value[(i-1, j)], value[(i-1, j+1)] - value[(i, j)]):
                if g and g not in constraints:
                    constraints.append(g)
    return ring, variables, constraints

def _antiderivative(f: MultiPoly, index: int) -> MultiPoly:
    ring = f.ring
    terms = {}
    for exp, coeff in f.items():
        new = list(exp)
        new[index] += 1
        terms[tuple(new)] = coeff / new[index]
    return ring.from_dict(terms) if terms else ring.zero

def _integrate(integrand: MultiPoly, constraints: list[MultiPoly], variables: list) -> Fraction:
    """Integrates a polynomial over the polytope {g >= 0 for all constraints} by Fubini, eliminating the last variable first.

    Lower and upper bounds of the eliminated variable are split into cases by which one is the binding one.
    """
    remaining = []
    for g in constraints:
        if g.is_ground:
            if as_fraction(g.LC if g else 0) < 0:
                return Fraction(0)
            continue
        remaining.append(g)

    if not variables:
        return as_fraction(integrand.LC) if integrand else Fraction(0)

    x = variables[-1]
    index = x.ring.gens.index(x)
    lower, upper, others = [], [], []
    for g in remaining:
        a = g.diff(x)
        if not a:
            others.append(g)
            continue
        bound = x - g.quo_ground(a.LC)
        target = lower if a.LC > 0 else upper
        if bound not in target:
            target.append(bound)
    verify(lower and upper, "Coordinate %s is unbounded on a face of the polytope", x)

    primitive = _antiderivative(integrand, index)
    total = Fraction(0)
    for p, low in enumerate(lower):
        for q, high in enumerate(upper):
            case = list(others)
            case += [low - other for k, other in enumerate(lower) if k != p]
            case += [other - high for k, other in enumerate(upper) if k != q]
            case.append(high - low)
            inner = primitive.compose(x, high) - primitive.compose(x, low)
            total += _integrate(inner, case, variables[:-1])
    return total

def face_volume(face: KoganFace, lam: Union[Weight, str]) -> Fraction:
    """The volume of the face, measured in its free coordinates.

    Those coordinates identify the lattice points of the face's span with an integer lattice of covolume 1, so this is the normalized lattice volume.
    A face of dimension 0 has volume 1.
    """
    lam = as_weight(lam)
    require_increasing(lam)
    if lam.n != face.n:
        raise DomainError(f"Face of size {face.n} does not match the weight {lam}")
    ring, variables, constraints = _face_constraints(face, lam)
    volume = _integrate(ring.one, constraints, variables)
    _LOGGER.debug(f"Face {face.sorted_equalities} of {lam} has volume {volume}")
    return volume
