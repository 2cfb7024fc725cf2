"""
Permutations in one-line notation, reduced words and the Bruhat order.

Composition convention, used everywhere a word is multiplied out: (a*b)(i) = a(b(i)).
A word (a1, ..., ak) stands for the product s_{a1} * ... * s_{ak}; right multiplying by s_i swaps the values in positions i and i+1.
"""

from dataclasses import dataclass
from itertools import permutations as _permutations
from typing import Literal, Sequence, Union

import schubCalc
from schubCalc import DomainError
from schubCalc.helpers import DimensionError, UsageError, verify, parse_int_list

_LOGGER = schubCalc.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    "A bijection of {1..n}, stored as its one-line notation (w(1), ..., w(n))"

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"{list(images)} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def parse(cls, literal: Union[str, Sequence[int], "Permutation"]) -> "Permutation":
        """Builds a permutation from one-line notation.

        Accepts a digit string like '1432' (n <= 9), a comma separated list like '1,10,2,...', or a sequence of ints.
        """
        if isinstance(literal, Permutation):
            return literal
        if isinstance(literal, str):
            stripped = literal.strip().strip("()[]")
            if not stripped:
                raise UsageError("Empty permutation literal")
            if stripped.isdigit():
                images = tuple(int(c) for c in stripped)
            else:
                images = parse_int_list(stripped, "permutation")
        else:
            images = parse_int_list(literal, "permutation")
        try:
            return cls(images)
        except DomainError as exce:
            raise UsageError(str(exce)) from exce

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i-1]

    def __len__(self):
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __str__(self):
        if self.n <= 9:
            return "".join(str(v) for v in self.images)
        return ",".join(str(v) for v in self.images)

    @property
    def length(self) -> int:
        return perm_length(self)

    def inverse(self) -> "Permutation":
        return inverse(self)


@dataclass(frozen=True)
class ReducedWord:
    "A word in the simple transpositions s_1..s_{n-1} of S_n"

    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        if any(not 1 <= a < self.n for a in letters):
            raise DomainError(f"Letters of a word in S_{self.n} must lie in 1..{self.n - 1}, got {list(letters)}")
        object.__setattr__(self, "letters", letters)

    def product(self) -> Permutation:
        return word_product(self.letters, self.n)

    def is_reduced(self) -> bool:
        return is_reduced_word(self.letters, self.n)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return "".join(f"s{a}" for a in self.letters) or "e"


def as_permutation(value) -> Permutation:
    return Permutation.parse(value)

def identity(n: int) -> Permutation:
    if n < 1:
        raise DomainError(f"Permutations need n >= 1, got {n}")
    return Permutation(tuple(range(1, n + 1)))

def longest(n: int) -> Permutation:
    "w0 = (n, n-1, ..., 1)"
    if n < 1:
        raise DomainError(f"Permutations need n >= 1, got {n}")
    return Permutation(tuple(range(n, 0, -1)))

def transposition(j: int, k: int, n: int) -> Permutation:
    "t_{jk}, swapping j and k"
    if not (1 <= j <= n and 1 <= k <= n) or j == k:
        raise DomainError(f"t_({j},{k}) is not a transposition in S_{n}")
    images = list(range(1, n + 1))
    images[j-1], images[k-1] = images[k-1], images[j-1]
    return Permutation(tuple(images))

def simple(i: int, n: int) -> Permutation:
    "The simple transposition s_i = t_{i,i+1}"
    return transposition(i, i + 1, n)

def compose(a: Permutation, b: Permutation) -> Permutation:
    "(a*b)(i) = a(b(i))"
    if a.n != b.n:
        raise DimensionError(f"Cannot compose permutations of degrees {a.n} and {b.n}")
    return Permutation(tuple(a.images[v-1] for v in b.images))

def inverse(w: Permutation) -> Permutation:
    images = [0] * w.n
    for i, v in enumerate(w.images, start=1):
        images[v-1] = i
    return Permutation(tuple(images))

def embed(w: Permutation, m: int) -> Permutation:
    "w x 1: the image of w in S_m, fixing n+1..m"
    if m < w.n:
        raise DimensionError(f"Cannot embed S_{w.n} in S_{m}")
    return Permutation(w.images + tuple(range(w.n + 1, m + 1)))

def all_permutations(n: int) -> list[Permutation]:
    "All of S_n in lexicographic order of one-line notation"
    return [Permutation(p) for p in _permutations(range(1, n + 1))]

def perm_length(w: Permutation) -> int:
    "Number of inversions i < j with w(i) > w(j)"
    images = w.images
    return sum(1 for i in range(len(images)) for j in range(i + 1, len(images)) if images[i] > images[j])

def descents(w: Permutation) -> tuple[int, ...]:
    "Positions i with w(i) > w(i+1)"
    return tuple(i for i in range(1, w.n) if w(i) > w(i + 1))

def lehmer_code(w: Permutation) -> tuple[int, ...]:
    "code_i = #{j > i : w(j) < w(i)}"
    images = w.images
    return tuple(sum(1 for j in range(i + 1, len(images)) if images[j] < images[i]) for i in range(len(images)))

def perm_from_code(code: Sequence[int], n: int) -> Permutation:
    "The permutation of S_n with the given Lehmer code; the code may be shorter than n"
    code = tuple(int(c) for c in code)
    if len(code) > n:
        if any(code[n:]):
            raise DomainError(f"Code {list(code)} is too long for S_{n}")
        code = code[:n]
    code = code + (0,) * (n - len(code))
    for i, c in enumerate(code, start=1):
        if not 0 <= c <= n - i:
            raise DomainError(f"Code entry {c} at position {i} exceeds {n - i}")
    available = list(range(1, n + 1))
    return Permutation(tuple(available.pop(c) for c in code))

def rank_function(w: Permutation, p: int, q: int) -> int:
    "r_w(p,q) = #{i <= p : w(i) <= q}"
    if not (1 <= p <= w.n and 1 <= q <= w.n):
        raise DomainError(f"Rank function arguments must lie in 1..{w.n}, got ({p},{q})")
    return sum(1 for i in range(p) if w.images[i] <= q)

def rank_matrix(w: Permutation) -> tuple[tuple[int, ...], ...]:
    "All r_w(p,q), row p, column q"
    n = w.n
    return tuple(
        tuple(sum(1 for i in range(p) if w.images[i] <= q) for q in range(1, n + 1))
        for p in range(1, n + 1)
    )

def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    "v <= w in the Bruhat order: r_v(p,q) >= r_w(p,q) for all p,q"
    if v.n != w.n:
        raise DimensionError(f"Cannot compare permutations of degrees {v.n} and {w.n}")
    rv, rw = rank_matrix(v), rank_matrix(w)
    return all(a >= b for row_v, row_w in zip(rv, rw) for a, b in zip(row_v, row_w))

def bruhat_covers(n: int) -> list[tuple[Permutation, Permutation]]:
    "Edges (v, w) of the Hasse diagram of the Bruhat order on S_n: v < w with l(w) = l(v) + 1"
    perms = all_permutations(n)
    by_length: dict[int, list[Permutation]] = {}
    for w in perms:
        by_length.setdefault(perm_length(w), []).append(w)
    covers = []
    for length, lower in sorted(by_length.items()):
        for v in lower:
            for w in by_length.get(length + 1, []):
                if bruhat_leq(v, w):
                    covers.append((v, w))
    return covers

def lower_interval(w: Permutation) -> list[Permutation]:
    "All v <= w, in lexicographic order"
    return [v for v in all_permutations(w.n) if bruhat_leq(v, w)]

def word_product(word: Sequence[int], n: int) -> Permutation:
    "s_{a1} * ... * s_{ak} in S_n"
    images = list(range(1, n + 1))
    for a in word:
        if not 1 <= a < n:
            raise DomainError(f"s_{a} is not a simple transposition of S_{n}")
        images[a-1], images[a] = images[a], images[a-1]
    return Permutation(tuple(images))

def is_reduced_word(word: Sequence[int], n: int) -> bool:
    "True if the length of the product equals the number of letters"
    return perm_length(word_product(word, n)) == len(tuple(word))

def reduced_word(w: Permutation, strategy: Literal["largest", "smallest"] = "largest") -> ReducedWord:
    """A reduced word for w.

    Repeatedly strips a descent i (w -> w*s_i) until the identity is reached, taking the largest descent first, or the smallest with ``strategy="smallest"``.
    The stripped letters, read in reverse, multiply out to w.
    """
    images = list(w.images)
    stripped = []
    while True:
        found = [i for i in range(1, len(images)) if images[i-1] > images[i]]
        if not found:
            break
        i = found[-1] if strategy == "largest" else found[0]
        images[i-1], images[i] = images[i], images[i-1]
        stripped.append(i)
    word = ReducedWord(tuple(reversed(stripped)), max(w.n, 1))
    verify(len(word) == perm_length(w), "Reduced word %s of %s has the wrong length", word, w)
    return word
