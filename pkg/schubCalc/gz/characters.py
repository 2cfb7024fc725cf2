"""
Lattice characters of unions of faces, and Demazure characters through reduced Kogan faces.
"""

from dataclasses import dataclass, field
from math import comb
from types import MappingProxyType
from typing import Mapping, Union

import schubCalc
from schubCalc import DomainError
from schubCalc.helpers import DimensionError
from schubCalc.combinatorics import Permutation, as_permutation, perm_length

from .patterns import Weight, GZPattern, as_weight, require_increasing, require_strict, projection_pi
from .faces import enumerate_reduced_kogan_faces, face_lattice_points

_LOGGER = schubCalc.getLogger(__name__)


@dataclass(frozen=True)
class FormalCharacter:
    "A sum of e^mu over weights mu, stored as weight to multiplicity"

    multiplicities: Mapping[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for mu, mult in self.multiplicities.items():
            mu = as_weight(mu)
            if mult < 1:
                raise DomainError(f"Multiplicity of e^{mu} must be positive, got {mult}")
            cleaned[mu] = int(mult)
        object.__setattr__(self, "multiplicities", MappingProxyType(dict(sorted(cleaned.items(), key=lambda item: item[0].entries))))

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities.values())

    def multiplicity(self, mu) -> int:
        return self.multiplicities.get(as_weight(mu), 0)

    def __str__(self):
        return " + ".join(f"e{mu}" if m == 1 else f"{m}*e{mu}" for mu, m in self.multiplicities.items()) or "0"

def lattice_character(points) -> FormalCharacter:
    "The sum of e^pi(x) over the given patterns"
    counts: dict[Weight, int] = {}
    for pattern in points:
        mu = projection_pi(pattern)
        counts[mu] = counts.get(mu, 0) + 1
    return FormalCharacter(counts)

def character_is_symmetric(character: FormalCharacter) -> bool:
    "True if every permutation of the coordinates of a weight keeps its multiplicity; adjacent swaps suffice"
    for mu, mult in character.multiplicities.items():
        entries = mu.entries
        for i in range(len(entries) - 1):
            swapped = entries[:i] + (entries[i+1], entries[i]) + entries[i+2:]
            if character.multiplicity(swapped) != mult:
                return False
    return True


def _check_sizes(w: Permutation, lam: Weight):
    if w.n != lam.n:
        raise DimensionError(f"{w} is not a permutation of the {lam.n} coordinates of {lam}")

def demazure_points(w: Union[Permutation, str], lam: Union[Weight, str]) -> list[GZPattern]:
    """The lattice points in the union of the reduced Kogan faces of w, each counted once, sorted by rows.

    Only needs a weakly increasing weight, so dilates by 0 are allowed.
    """
    w, lam = as_permutation(w), as_weight(lam)
    require_increasing(lam)
    _check_sizes(w, lam)
    points = set()
    for face in enumerate_reduced_kogan_faces(w):
        points.update(face_lattice_points(face, lam))
    _LOGGER.verbose(f"Union of the faces of {w} holds {len(points)} points of {lam}")
    return sorted(points, key=lambda pattern: pattern.rows)

def demazure_character(w: Union[Permutation, str], lam: Union[Weight, str]) -> FormalCharacter:
    "The lattice character of the union of the reduced Kogan faces of w; its dimension is the Demazure dimension"
    lam = as_weight(lam)
    require_strict(lam)
    return lattice_character(demazure_points(w, lam))

def demazure_dimension(w: Union[Permutation, str], lam: Union[Weight, str]) -> int:
    lam = as_weight(lam)
    require_strict(lam)
    return len(demazure_points(w, lam))

def ehrhart_series(w: Union[Permutation, str], lam: Union[Weight, str], m_max: int) -> list[int]:
    "Number of points in the union of faces of w for the dilates m * lambda, m = 0..m_max"
    lam = as_weight(lam)
    if m_max < 0:
        raise DomainError(f"m_max must be nonnegative, got {m_max}")
    return [len(demazure_points(w, lam.scaled(m))) for m in range(m_max + 1)]

def ehrhart_degree(w: Union[Permutation, str], lam: Union[Weight, str]) -> int:
    """The d-th forward difference at 0 of m -> dim D_w(m lambda), d = n(n-1)/2 - l(w).

    The count is a polynomial of degree d in m, so this is d! times its leading coefficient.
    """
    w, lam = as_permutation(w), as_weight(lam)
    require_strict(lam)
    _check_sizes(w, lam)
    d = lam.n * (lam.n - 1) // 2 - perm_length(w)
    values = ehrhart_series(w, lam, d)
    return sum((-1) ** (d - t) * comb(d, t) * values[t] for t in range(d + 1))
