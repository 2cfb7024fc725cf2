"""
Exact multivariate polynomials.

A MultiPoly is a sympy ``PolyElement`` over ``QQ`` in lex order, with generators ``x1 > x2 > ... > xk``.
Exponent keys are dense tuples of length ``nvars``, which is what sympy's distributed representation stores.
Polynomials in a different number of variables are brought to a common ring by zero padding the exponents.
"""

from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Callable, Mapping, Sequence, Union, Literal

from sympy.polys.rings import PolyRing, PolyElement
from sympy.polys.domains import QQ
from sympy.polys.orderings import lex

import schubCalc
from schubCalc import DomainError
from schubCalc.helpers import as_fraction, verify, DimensionError

_LOGGER = schubCalc.getLogger(__name__)

MultiPoly = PolyElement
"Exact polynomial with rational coefficients"

DiffOperator = PolyElement
"Polynomial in the formal symbols d1..dk, read as a constant coefficient differential operator"

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def poly_ring(nvars: int, prefix: str = "x") -> PolyRing:
    "The ring QQ[prefix1, ..., prefix<nvars>] in lex order"
    if nvars < 0:
        raise DomainError(f"Number of variables must be nonnegative, got {nvars}")
    symbols = [f"{prefix}{i}" for i in range(1, nvars + 1)]
    return PolyRing(symbols, QQ, lex)

def nvars(f: MultiPoly) -> int:
    return f.ring.ngens

def prefix_of(f: MultiPoly) -> str:
    if not f.ring.ngens:
        return "x"
    return str(f.ring.symbols[0]).rstrip("0123456789")

def to_coefficient(value):
    "Converts an int, Fraction or string into an element of QQ"
    frac = as_fraction(value)
    return QQ(frac.numerator, frac.denominator)

def gens(nvars: int, prefix: str = "x") -> tuple[MultiPoly, ...]:
    return poly_ring(nvars, prefix).gens

def zero(nvars: int, prefix: str = "x") -> MultiPoly:
    return poly_ring(nvars, prefix).zero

def one(nvars: int, prefix: str = "x") -> MultiPoly:
    return poly_ring(nvars, prefix).one

def from_terms(terms: Mapping[Sequence[int], Rational], nvars: int, prefix: str = "x") -> MultiPoly:
    """Builds a polynomial from an exponent to coefficient mapping.

    Zero coefficients are dropped, equal exponents are summed.
    """
    ring = poly_ring(nvars, prefix)
    poly = ring.zero
    for exponent, coeff in terms.items():
        exponent = tuple(int(e) for e in exponent)
        if len(exponent) != nvars or any(e < 0 for e in exponent):
            raise DomainError(f"Exponent {exponent} is not valid in {nvars} variables")
        poly = poly + ring({exponent: to_coefficient(coeff)})
    return poly

def monomial(exponent: Sequence[int], nvars: int = None, coefficient: Rational = 1, prefix: str = "x") -> MultiPoly:
    "The monomial coefficient * x^exponent. nvars defaults to the length of the exponent."
    if nvars is None:
        nvars = len(exponent)
    exponent = tuple(exponent) + (0,) * (nvars - len(exponent))
    return from_terms({exponent: coefficient}, nvars, prefix)

def terms(f: MultiPoly) -> dict[tuple[int, ...], Fraction]:
    "Exponent to Fraction mapping of f"
    return {exp: as_fraction(c) for exp, c in f.items()}

def integer_terms(f: MultiPoly) -> dict[tuple[int, ...], int]:
    "Exponent to int mapping of f. Raises a VerificationError when a coefficient is not integral."
    result = {}
    for exp, c in f.items():
        frac = as_fraction(c)
        verify(frac.denominator == 1, "Coefficient %s of %s is not an integer", frac, exp)
        result[exp] = frac.numerator
    return result

def sorted_terms(f: MultiPoly) -> list[tuple[tuple[int, ...], Fraction]]:
    "Terms of f, lex leading term first"
    return sorted(terms(f).items(), reverse=True)

def embed(f: MultiPoly, nvars: int, prefix: str = None) -> MultiPoly:
    """Moves f into the ring with ``nvars`` variables.

    Exponents are padded with zeros. Dropping variables is only allowed if f does not involve them.
    """
    prefix = prefix or prefix_of(f)
    current = f.ring.ngens
    if current == nvars and prefix == prefix_of(f):
        return f
    ring = poly_ring(nvars, prefix)
    new_terms = {}
    for exp, coeff in f.items():
        if current > nvars and any(exp[nvars:]):
            raise DimensionError(f"Polynomial involves variables beyond x{nvars}")
        new_terms[tuple(exp[:nvars]) + (0,) * max(0, nvars - current)] = coeff
    return ring.from_dict(new_terms) if new_terms else ring.zero

def align(*polys: MultiPoly) -> tuple[MultiPoly, ...]:
    "Embeds all polynomials into the ring with the largest number of variables"
    size = max(p.ring.ngens for p in polys)
    return tuple(embed(p, size) for p in polys)

def add(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    f, g = align(f, g)
    return f + g

def multiply(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    f, g = align(f, g)
    return f * g

def scale(f: MultiPoly, scalar: Rational) -> MultiPoly:
    return f.mul_ground(to_coefficient(scalar))

def evaluate(f: MultiPoly, values: Sequence[Rational]) -> Fraction:
    "Substitutes the rational values for x1, x2, ...; missing values are not allowed"
    if len(values) < f.ring.ngens:
        raise DimensionError(f"Expected {f.ring.ngens} values, got {len(values)}")
    values = [as_fraction(v) for v in values]
    total = Fraction(0)
    for exp, coeff in f.items():
        total += as_fraction(coeff) * prod((v ** e for v, e in zip(values, exp)), start=Fraction(1))
    return total

def coefficient_of(f: MultiPoly, exponent: Sequence[int]) -> Fraction:
    exponent = tuple(exponent)
    size = f.ring.ngens
    if len(exponent) > size:
        if any(exponent[size:]):
            return Fraction(0)
        exponent = exponent[:size]
    exponent = exponent + (0,) * (size - len(exponent))
    return as_fraction(f.get(exponent, QQ.zero))

def constant_term(f: MultiPoly) -> Fraction:
    return as_fraction(f.const())

def leading_exponent(f: MultiPoly) -> tuple[int, ...]:
    "Lex leading exponent, with x1 > x2 > ...; None for the zero polynomial"
    return f.leading_expv()

def total_degree(f: MultiPoly) -> int:
    "Largest total degree of a term, -1 for the zero polynomial"
    return max((sum(exp) for exp in f.keys()), default=-1)

def is_homogeneous(f: MultiPoly, degree: int = None) -> bool:
    degrees = {sum(exp) for exp in f.keys()}
    if not degrees:
        return True
    if degree is not None:
        return degrees == {degree}
    return len(degrees) == 1

def swap_variables(f: MultiPoly, i: int) -> MultiPoly:
    "Swaps x_i and x_{i+1} (1-based i)"
    size = f.ring.ngens
    if not 1 <= i < size:
        raise DimensionError(f"Cannot swap x{i} and x{i+1} in {size} variables")
    swapped = {}
    for exp, coeff in f.items():
        exp = list(exp)
        exp[i-1], exp[i] = exp[i], exp[i-1]
        swapped[tuple(exp)] = coeff
    return f.ring.from_dict(swapped) if swapped else f.ring.zero

def is_symmetric(f: MultiPoly) -> bool:
    "True if f is invariant under every adjacent transposition of its variables"
    return all(swap_variables(f, i) == f for i in range(1, f.ring.ngens))


POLY_OPERATIONS: dict[str, Callable] = {
    "add": add,
    "multiply": multiply,
    "scalar": scale,
    "evaluate": evaluate,
    "coefficient_of": coefficient_of,
}
"The elementary operations on MultiPoly, by name"

def poly_arith(op: Literal["add", "multiply", "scalar", "evaluate", "coefficient_of"], f: MultiPoly, other):
    """Runs one elementary operation.

    Parameters
    ----------
    op : str
        One of ``add``, ``multiply``, ``scalar``, ``evaluate``, ``coefficient_of``
    f : MultiPoly
        The first operand
    other :
        Second polynomial for add/multiply, a rational for scalar, a value sequence for evaluate and an exponent for coefficient_of

    Returns
    -------
    MultiPoly or Fraction
    """
    if op not in POLY_OPERATIONS:
        raise DomainError(f"Unknown polynomial operation {op}, expected one of {tuple(POLY_OPERATIONS)}")
    return POLY_OPERATIONS[op](f, other)
