"""
Brute force point counts over the prime field GF(q).

Subspaces are found by row reducing every tuple of vectors, so the counts do not rely on any cell decomposition.
They serve as independent checks of the Poincare polynomials evaluated at q.
"""

from functools import lru_cache
from itertools import product

from sympy import isprime
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

import schubCalc
from schubCalc import DomainError

_LOGGER = schubCalc.getLogger(__name__)

MAX_TUPLES = 2**16
"Largest number of vector tuples row reduced for a single subspace enumeration"

Subspace = tuple[tuple[int, ...], ...]
"A subspace, as the nonzero rows of its reduced row echelon form"


def _rref(rows: list[tuple[int, ...]], q: int) -> Subspace:
    field = GF(q, symmetric=False)
    matrix = DomainMatrix.from_list([list(r) for r in rows], field)
    reduced, pivots = matrix.rref()
    values = reduced.to_list()
    return tuple(tuple(int(field.to_int(v)) for v in values[i]) for i in range(len(pivots)))

@lru_cache(maxsize=None)
def subspaces(k: int, n: int, q: int) -> tuple[Subspace, ...]:
    """All k-dimensional subspaces of GF(q)^n, as reduced row echelon forms, sorted.

    Parameters
    ----------
    k : int
        Dimension of the subspaces
    n : int
        Dimension of the ambient space
    q : int
        A prime, the size of the field
    """
    if not isprime(q):
        raise DomainError(f"Point counts need a prime field size, got {q}")
    if not 0 <= k <= n:
        raise DomainError(f"Subspace dimension must lie in 0..{n}, got {k}")
    if k == 0:
        return ((),)
    if q ** (n * k) > MAX_TUPLES:
        raise DomainError(f"Enumerating {k}-tuples in GF({q})^{n} needs {q ** (n * k)} row reductions, more than {MAX_TUPLES}")

    vectors = list(product(range(q), repeat=n))
    found = set()
    for rows in product(vectors, repeat=k):
        space = _rref(list(rows), q)
        if len(space) == k:
            found.add(space)
    _LOGGER.debug(f"{len(found)} subspaces of dimension {k} in GF({q})^{n}")
    return tuple(sorted(found))

def is_subspace(inner: Subspace, outer: Subspace, q: int) -> bool:
    "True if the row space of ``inner`` lies in the row space of ``outer``"
    if not inner:
        return True
    return len(_rref(list(outer) + list(inner), q)) == len(outer)

def grassmannian_point_count(k: int, n: int, q: int) -> int:
    "Number of points of Gr(k,n) over GF(q), by enumeration"
    return len(subspaces(k, n, q))

def flag_point_count(n: int, q: int) -> int:
    "Number of complete flags V1 < V2 < ... < V_{n-1} in GF(q)^n, by enumeration of chains"
    if n < 1:
        raise DomainError(f"Flags need n >= 1, got {n}")
    chains = {(): 1}
    for d in range(1, n):
        layer = {}
        for space in subspaces(d, n, q):
            layer[space] = sum(count for smaller, count in chains.items() if is_subspace(smaller, space, q))
        chains = layer
    return sum(chains.values())
