"""
Weights and Gelfand-Zetlin patterns.

A pattern for lambda = (l1 <= ... <= ln) is a triangle x_ij, row 0 being lambda and row i holding n-i entries, with x_{i-1,j} <= x_ij <= x_{i-1,j+1}.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence, Union, Collection

import schubCalc
from schubCalc import DomainError
from schubCalc.helpers import DimensionError, verify, parse_int_list

_LOGGER = schubCalc.getLogger(__name__)

Position = tuple[int, int]
"(i, j): row i >= 1, column j >= 1, with i + j <= n"


@dataclass(frozen=True)
class Weight:
    "An integer vector (l1, ..., ln)"

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(v) for v in self.entries))

    @classmethod
    def parse(cls, literal: Union[str, Sequence[int], "Weight"]) -> "Weight":
        if isinstance(literal, Weight):
            return literal
        return cls(parse_int_list(literal, "weight"))

    @property
    def n(self) -> int:
        return len(self.entries)

    def is_increasing(self) -> bool:
        "Weakly increasing"
        return all(a <= b for a, b in zip(self.entries, self.entries[1:]))

    def is_strict(self) -> bool:
        "Strictly increasing, which makes the polytope full dimensional"
        return all(a < b for a, b in zip(self.entries, self.entries[1:]))

    def scaled(self, m: int) -> "Weight":
        return Weight(tuple(m * v for v in self.entries))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __str__(self):
        return "(" + ",".join(str(v) for v in self.entries) + ")"

def as_weight(value) -> Weight:
    return Weight.parse(value)

def require_increasing(lam: Weight):
    if not lam.n:
        raise DomainError("A weight needs at least one entry")
    if not lam.is_increasing():
        raise DomainError(f"Gelfand-Zetlin patterns need a weakly increasing weight, got {lam}")

def require_strict(lam: Weight):
    require_increasing(lam)
    if not lam.is_strict():
        raise DomainError(f"Expected a strictly increasing weight, got {lam}")


@dataclass(frozen=True)
class GZPattern:
    "A Gelfand-Zetlin pattern, stored row by row with rows[0] the weight"

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        n = len(rows[0]) if rows else 0
        if len(rows) != n or any(len(row) != n - i for i, row in enumerate(rows)):
            raise DimensionError("Rows of a pattern must have lengths n, n-1, ..., 1")
        for i in range(1, n):
            for j in range(n - i):
                if not rows[i-1][j] <= rows[i][j] <= rows[i-1][j+1]:
                    raise DomainError(f"Pattern entry x{i},{j+1} = {rows[i][j]} does not interlace its upper neighbours")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def weight(self) -> Weight:
        return Weight(self.rows[0])

    def entry(self, i: int, j: int) -> int:
        "x_ij, with row i from 0 and column j from 1"
        return self.rows[i][j-1]

    def __str__(self):
        return " | ".join(" ".join(str(v) for v in row) for row in self.rows)


def weyl_dimension(lam: Union[Weight, Sequence[int]]) -> int:
    "prod over i < j of (l_j - l_i + j - i) / (j - i), the number of lattice points of the polytope"
    lam = as_weight(lam)
    require_increasing(lam)
    n = lam.n
    value = prod((Fraction(lam[j] - lam[i] + j - i, j - i) for i in range(n) for j in range(i + 1, n)), start=Fraction(1))
    verify(value.denominator == 1, "Weyl dimension of %s is not an integer", lam)
    return value.numerator

def gz_lattice_points(lam: Union[Weight, Sequence[int]], equalities: Collection[Position] = ()) -> list[GZPattern]:
    """Every integral pattern with top row lambda, in row major lexicographic order.

    Parameters
    ----------
    lam : Weight
        A weakly increasing weight
    equalities : Collection[Position]
        Positions (i,j) forced to x_ij = x_{i-1,j}; restricts to the points of a face

    Returns
    -------
    list[GZPattern]
    """
    lam = as_weight(lam)
    require_increasing(lam)
    n = lam.n
    equalities = frozenset(equalities)
    cells = [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]
    grid = [list(lam.entries)] + [[0] * (n - i) for i in range(1, n)]
    found = []

    def fill(index: int):
        if index == len(cells):
            found.append(GZPattern(tuple(tuple(row) for row in grid)))
            return
        i, j = cells[index]
        low, high = grid[i-1][j-1], grid[i-1][j]
        if (i, j) in equalities:
            high = low
        for value in range(low, high + 1):
            grid[i][j-1] = value
            fill(index + 1)

    fill(0)
    if not equalities:
        verify(len(found) == weyl_dimension(lam), "Lattice point count of %s is %s, not its Weyl dimension", lam, len(found))
    _LOGGER.verbose(f"{len(found)} lattice points for {lam} with {len(equalities)} equalities")
    return found

def projection_pi(pattern: GZPattern) -> Weight:
    "The weight of a pattern: coordinate k is the sum of row n-k minus the sum of row n-k+1 (an empty row for k = 1)"
    n = pattern.n
    sums = [sum(row) for row in pattern.rows] + [0]
    return Weight(tuple(sums[n - k] - sums[n - k + 1] for k in range(1, n + 1)))
