"""
Partitions, Young diagrams and the boxes they live in.
"""

from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Iterator, Sequence, Union

import schubCalc
from schubCalc import DomainError
from schubCalc.helpers import DimensionError, verify, parse_int_list

_LOGGER = schubCalc.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers.

    Trailing zeros are trimmed on construction, so every partition has one stored form.
    Parts beyond the length read as 0 through ``part``.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise DomainError(f"Partition parts must be nonnegative, got {list(parts)}")
        if any(parts[i] < parts[i+1] for i in range(len(parts) - 1)):
            raise DomainError(f"Partition parts must be weakly decreasing, got {list(parts)}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, literal: Union[str, Sequence[int], "Partition"]) -> "Partition":
        "Builds a partition from '[2,1]', '2,1', '2 1', an int sequence or a partition"
        if isinstance(literal, Partition):
            return literal
        return cls(parse_int_list(literal, "partition"))

    @property
    def size(self) -> int:
        "|lambda|, the number of boxes"
        return sum(self.parts)

    @property
    def length(self) -> int:
        "Number of nonzero parts"
        return len(self.parts)

    def part(self, i: int) -> int:
        "The i-th part, 1-based, 0 beyond the length"
        if i < 1:
            raise DomainError(f"Parts are indexed from 1, got {i}")
        return self.parts[i-1] if i <= len(self.parts) else 0

    def padded(self, k: int) -> tuple[int, ...]:
        "The parts padded with zeros to length k"
        if len(self.parts) > k:
            raise DimensionError(f"{self} has more than {k} parts")
        return self.parts + (0,) * (k - len(self.parts))

    def cells(self) -> Iterator[tuple[int, int]]:
        "The boxes (row, column) of the diagram, 1-based, row by row"
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def conjugate(self) -> "Partition":
        "The transposed diagram"
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def fits(self, box: "Box") -> bool:
        return self.length <= box.rows and (not self.parts or self.parts[0] <= box.cols)

    def sort_key(self) -> tuple:
        "Key ordering partitions by size, then by decreasing parts"
        return (self.size, tuple(-p for p in self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"

def as_partition(value) -> Partition:
    return Partition.parse(value)


@dataclass(frozen=True)
class Box:
    "A rectangle with ``rows`` rows and ``cols`` columns; for Gr(k,n) it is k by n-k."

    rows: int
    "k, the number of rows"

    cols: int
    "c, the number of columns"

    def __post_init__(self):
        if self.rows < 1:
            raise DomainError(f"A box needs at least one row, got {self.rows}")
        if self.cols < 0:
            raise DomainError(f"A box cannot have a negative number of columns, got {self.cols}")

    @classmethod
    def grassmannian(cls, k: int, n: int) -> "Box":
        "The k x (n-k) frame of Gr(k,n)"
        if not 1 <= k <= n:
            raise DomainError(f"Gr(k,n) needs 1 <= k <= n, got k={k}, n={n}")
        return cls(k, n - k)

    @property
    def area(self) -> int:
        return self.rows * self.cols

    @property
    def full(self) -> Partition:
        "The partition filling the whole box"
        return Partition((self.cols,) * self.rows)

    def __str__(self):
        return f"{self.rows}x{self.cols}"


def partitions_in_box(box: Box) -> list[Partition]:
    """Every partition with at most ``box.rows`` parts, each at most ``box.cols``.

    Ordered by size, then by decreasing parts: for a 2x2 box this gives [], [1], [2], [1,1], [2,1], [2,2].
    """
    found = []

    def extend(prefix: tuple[int, ...], bound: int):
        found.append(Partition(prefix))
        if len(prefix) == box.rows:
            return
        for p in range(1, bound + 1):
            extend(prefix + (p,), p)

    extend((), box.cols)
    found.sort(key=Partition.sort_key)
    verify(len(found) == comb(box.rows + box.cols, box.rows),
           "Found %s partitions in box %s, expected binomial(%s,%s)", len(found), box, box.rows + box.cols, box.rows)
    return found

def partitions_of(size: int, max_length: int = None) -> list[Partition]:
    "All partitions of ``size``, optionally with at most ``max_length`` parts, in decreasing lexicographic order"
    if size < 0:
        raise DomainError(f"Cannot partition a negative number, got {size}")
    max_length = size if max_length is None else max_length
    found = []

    def extend(prefix: tuple[int, ...], remaining: int, bound: int):
        if remaining == 0:
            found.append(Partition(prefix))
            return
        if len(prefix) == max_length:
            return
        for p in range(min(bound, remaining), 0, -1):
            extend(prefix + (p,), remaining - p, p)

    extend((), size, size)
    return found

def complement(lam: Partition, box: Box) -> Partition:
    "The complement of lambda in the box, read rotated by 180 degrees"
    lam = as_partition(lam)
    if not lam.fits(box):
        raise DimensionError(f"{lam} does not fit in the {box} box")
    return Partition(tuple(box.cols - lam.part(box.rows + 1 - i) for i in range(1, box.rows + 1)))

def contains(mu: Partition, lam: Partition) -> bool:
    "True if the diagram of lambda lies inside the diagram of mu"
    mu, lam = as_partition(mu), as_partition(lam)
    return all(lam.part(i) <= mu.part(i) for i in range(1, lam.length + 1))

def hooks_and_syt_count(lam: Partition) -> tuple[tuple[int, ...], int]:
    """The hook lengths of every box (row by row) and the number of standard Young tableaux.

    The count is |lambda|! divided by the product of the hooks, which is checked to be integral.
    """
    lam = as_partition(lam)
    conj = lam.conjugate()
    hooks = tuple(
        (lam.part(i) - j) + (conj.part(j) - i) + 1
        for i, j in lam.cells()
    )
    count, remainder = divmod(factorial(lam.size), prod(hooks))
    verify(remainder == 0, "Hook length quotient for %s is not integral", lam)
    return hooks, count
