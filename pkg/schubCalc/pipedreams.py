"""
Pipe dreams: fillings of the staircase with crosses and elbows.

Cells (i,j) with i+j <= n hold a cross or an elbow; everything from the antidiagonal on down holds elbows and is not stored.
A pipe enters row i from the left and leaves through the top edge at column w(i).
Summing x^(row counts) over the reduced pipe dreams of w gives its Schubert polynomial.
"""

from dataclasses import dataclass
from typing import Union

import schubCalc
from schubCalc import DomainError
from schubCalc.helpers import verify
from schubCalc.configuration import get_config
from schubCalc.combinatorics import (
    Permutation,
    ReducedWord,
    as_permutation,
    compose,
    inverse,
    simple,
    perm_length,
)
from schubCalc.polynomials import MultiPoly, from_terms
from schubCalc.flags import schubert_polynomial

_LOGGER = schubCalc.getLogger(__name__)

Cell = tuple[int, int]

_EAST = (0, 1)
_NORTH = (-1, 0)


@dataclass(frozen=True)
class PipeDream:
    "The crosses of a pipe dream in the n x n staircase, as 1-based (row, column) cells"

    n: int
    crosses: frozenset[Cell] = frozenset()

    def __post_init__(self):
        crosses = frozenset((int(i), int(j)) for i, j in self.crosses)
        for i, j in crosses:
            if i < 1 or j < 1 or i + j > self.n:
                raise DomainError(f"Cross at ({i},{j}) lies outside the staircase of size {self.n}")
        object.__setattr__(self, "crosses", crosses)

    @property
    def sorted_crosses(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.crosses))

    def row_counts(self) -> tuple[int, ...]:
        "Number of crosses in rows 1..n-1"
        return tuple(sum(1 for i, _ in self.crosses if i == row) for row in range(1, max(self.n, 2)))

    def __len__(self):
        return len(self.crosses)


def _trace(dream: PipeDream) -> tuple[Permutation, dict[Cell, tuple[int, int]]]:
    "Follows every pipe; returns the permutation and, per cross, the rows of the two pipes meeting there"
    n = dream.n
    meetings: dict[Cell, list[int]] = {cell: [] for cell in dream.crosses}
    images = []
    for start in range(1, n + 1):
        row, col = start, 1
        direction = _EAST
        while row >= 1:
            if (row, col) in dream.crosses:
                meetings[(row, col)].append(start)
            elif direction == _EAST:
                direction = _NORTH
            else:
                direction = _EAST
            row, col = row + direction[0], col + direction[1]
        images.append(col)
    return Permutation(tuple(images)), {cell: tuple(pair) for cell, pair in meetings.items()}

def trace_permutation(dream: PipeDream) -> Permutation:
    "The permutation w with pipe i leaving through the top at column w(i)"
    return _trace(dream)[0]

def is_reduced(dream: PipeDream) -> bool:
    "True if no two pipes cross twice, which is the case exactly when the number of crosses is the length of the traced permutation"
    perm, meetings = _trace(dream)
    reduced = len(set(meetings.values())) == len(meetings)
    verify(reduced == (len(dream) == perm_length(perm)),
           "Pair count and length criteria for reducedness disagree on %s", dream.sorted_crosses)
    return reduced

def reading_word(dream: PipeDream) -> ReducedWord:
    "Labels s_{i+j-1} of the crosses, rows top to bottom and each row right to left"
    cells = sorted(dream.crosses, key=lambda cell: (cell[0], -cell[1]))
    return ReducedWord(tuple(i + j - 1 for i, j in cells), max(dream.n, 1))


def _reading_cells(n: int) -> list[Cell]:
    return [(i, j) for i in range(1, n) for j in range(n - i, 0, -1)]

def backtrack_reduced(w: Permutation, cells: list[Cell], label) -> list[frozenset[Cell]]:
    """All subsets of ``cells`` whose labels, read in the order of ``cells``, form a reduced word for w.

    A chosen prefix u is kept only when u^-1 w is exactly l(u) shorter than w, so every branch can still reach w.
    """
    target = perm_length(w)
    n = w.n
    found = []

    def extend(index: int, chosen: tuple[Cell, ...], prefix: Permutation, length: int):
        if length == target:
            if prefix == w:
                found.append(frozenset(chosen))
            return
        if len(cells) - index < target - length:
            return
        cell = cells[index]
        letter = label(cell)
        extended = compose(prefix, simple(letter, n))
        if perm_length(extended) == length + 1 and perm_length(compose(inverse(extended), w)) == target - length - 1:
            extend(index + 1, chosen + (cell,), extended, length + 1)
        extend(index + 1, chosen, prefix, length)

    extend(0, (), Permutation(tuple(range(1, n + 1))), 0)
    return found

def enumerate_reduced(w: Union[Permutation, str]) -> list[PipeDream]:
    """Every reduced pipe dream of w, ordered lexicographically by the sorted list of crosses.

    Cells are visited in reading order and each cross extends a reduced word for w.
    """
    w = as_permutation(w)
    n = w.n
    dreams = [PipeDream(n, crosses) for crosses in backtrack_reduced(w, _reading_cells(n), lambda cell: cell[0] + cell[1] - 1)]
    dreams.sort(key=lambda dream: dream.sorted_crosses)
    for dream in dreams:
        verify(trace_permutation(dream) == w, "Pipe dream %s does not trace to %s", dream.sorted_crosses, w)
        verify(len(dream) == perm_length(w), "Pipe dream %s has the wrong number of crosses", dream.sorted_crosses)
        verify(reading_word(dream).product() == w, "Reading word of pipe dream %s does not multiply to %s", dream.sorted_crosses, w)
    _LOGGER.verbose(f"{len(dreams)} reduced pipe dreams for {w}")
    return dreams

def count_reduced(w: Union[Permutation, str]) -> int:
    return len(enumerate_reduced(w))

def fk_polynomial(w: Union[Permutation, str]) -> MultiPoly:
    """Sum of x1^(crosses in row 1) ... x_{n-1}^(crosses in row n-1) over the reduced pipe dreams of w.

    With ``engine.cross_check`` on, the result is compared with the divided difference Schubert polynomial.
    """
    w = as_permutation(w)
    nvars = max(w.n - 1, 1)
    counts: dict[tuple[int, ...], int] = {}
    for dream in enumerate_reduced(w):
        exponent = dream.row_counts()[:nvars]
        exponent = exponent + (0,) * (nvars - len(exponent))
        counts[exponent] = counts.get(exponent, 0) + 1
    poly = from_terms(counts, nvars)
    if get_config().engine.cross_check:
        verify(poly == schubert_polynomial(w).poly, "Pipe dream sum for %s differs from its Schubert polynomial", w)
        _LOGGER.info(f"Pipe dream sum for {w} matches its Schubert polynomial")
    return poly

def render(dream: PipeDream) -> str:
    """The staircase as text: ``+`` for a cross, ``.`` for an elbow, ``/`` on the antidiagonal.

    Row i has n+1-i cells.
    """
    lines = []
    for i in range(1, dream.n + 1):
        cells = []
        for j in range(1, dream.n + 2 - i):
            if i + j == dream.n + 1:
                cells.append("/")
            else:
                cells.append("+" if (i, j) in dream.crosses else ".")
        lines.append(" ".join(cells))
    return "\n".join(lines)
