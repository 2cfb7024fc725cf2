"""
Semistandard and standard Young tableaux.
"""

from dataclasses import dataclass

import schubCalc
from schubCalc import DomainError

from .partitions import Partition, as_partition

_LOGGER = schubCalc.getLogger(__name__)


@dataclass(frozen=True)
class Tableau:
    "A filling of a Young diagram, stored row by row"

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = as_partition(self.shape)
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        if tuple(len(r) for r in rows) != shape.parts:
            raise DomainError(f"Rows {rows} do not match shape {shape}")
        if any(v < 1 for row in rows for v in row):
            raise DomainError("Tableau entries must be positive")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)

    def entry(self, i: int, j: int) -> int:
        "Entry in row i, column j (1-based)"
        return self.rows[i-1][j-1]

    @property
    def reading_word(self) -> tuple[int, ...]:
        "Entries row by row, left to right"
        return tuple(v for row in self.rows for v in row)

    def is_semistandard(self) -> bool:
        rows_ok = all(row[j] <= row[j+1] for row in self.rows for j in range(len(row) - 1))
        cols_ok = all(self.rows[i][j] < self.rows[i+1][j]
                      for i in range(len(self.rows) - 1) for j in range(len(self.rows[i+1])))
        return rows_ok and cols_ok

    def is_standard(self) -> bool:
        word = self.reading_word
        if sorted(word) != list(range(1, len(word) + 1)):
            return False
        rows_strict = all(row[j] < row[j+1] for row in self.rows for j in range(len(row) - 1))
        return rows_strict and self.is_semistandard()

    def weight(self, k: int) -> tuple[int, ...]:
        "Exponent vector of x^T in k variables: how often each of 1..k occurs"
        counts = [0] * k
        for v in self.reading_word:
            if v > k:
                raise DomainError(f"Entry {v} exceeds the number of variables {k}")
            counts[v-1] += 1
        return tuple(counts)

    def __str__(self):
        return "/".join("".join(str(v) if v < 10 else f"({v})" for v in row) for row in self.rows)


def _fill(shape: Partition, max_entry: int, standard: bool) -> list[Tableau]:
    cells = list(shape.cells())
    grid: dict[tuple[int, int], int] = {}
    used = set()
    found = []

    def place(index: int):
        if index == len(cells):
            rows = tuple(tuple(grid[(i, j)] for j in range(1, p + 1)) for i, p in enumerate(shape.parts, start=1))
            found.append(Tableau(shape, rows))
            return
        i, j = cells[index]
        low = 1
        if j > 1:
            low = max(low, grid[(i, j-1)] + (1 if standard else 0))
        if i > 1:
            low = max(low, grid[(i-1, j)] + 1)
        for v in range(low, max_entry + 1):
            if standard and v in used:
                continue
            grid[(i, j)] = v
            used.add(v)
            place(index + 1)
            used.discard(v)
        grid.pop((i, j), None)

    place(0)
    return found

def ssyt_enumerate(lam: Partition, k: int) -> list[Tableau]:
    """All semistandard tableaux of shape lambda with entries in 1..k.

    Ordered lexicographically by reading word. Empty when lambda has more than k rows.
    """
    lam = as_partition(lam)
    if k < 1:
        raise DomainError(f"Need at least one entry value, got k={k}")
    if lam.length > k:
        return []
    result = _fill(lam, k, standard=False)
    _LOGGER.verbose(f"{len(result)} semistandard tableaux of shape {lam} with entries up to {k}")
    return result

def syt_enumerate(lam: Partition) -> list[Tableau]:
    "All standard tableaux of shape lambda, lexicographically by reading word"
    lam = as_partition(lam)
    return _fill(lam, lam.size, standard=True)
