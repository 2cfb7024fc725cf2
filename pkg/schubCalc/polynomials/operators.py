"""
Differential and difference operators on MultiPoly: partial derivatives, divided differences and constant coefficient differential operators.
"""

from typing import Sequence

import schubCalc
from schubCalc.helpers import DimensionError, verify

from .ring import MultiPoly, DiffOperator, embed, to_coefficient, swap_variables

_LOGGER = schubCalc.getLogger(__name__)


def partial_derivative(f: MultiPoly, i: int, order: int = 1) -> MultiPoly:
    """Iterated partial derivative of f in the variable with zero-based index ``i``.

    Parameters
    ----------
    f : MultiPoly
        The polynomial to differentiate
    i : int
        Zero-based variable index, so 0 differentiates in x1
    order : int
        How many times to differentiate, at least 1
    """
    if not 0 <= i < f.ring.ngens:
        raise DimensionError(f"Variable index {i} out of range for {f.ring.ngens} variables")
    if order < 1:
        raise DimensionError(f"Order of a derivative must be positive, got {order}")
    gen = f.ring.gens[i]
    for _ in range(order):
        if not f:
            break
        f = f.diff(gen)
    return f

def divided_difference(i: int, f: MultiPoly) -> MultiPoly:
    """The divided difference (f - s_i f) / (x_i - x_{i+1}), with 1-based ``i``.

    f is moved into at least i+1 variables first.
    Each monomial x_i^a x_{i+1}^b is mapped directly to its quotient, which is the sum of x_i^(b+t) x_{i+1}^(a-1-t) for t < a-b (negated when a < b), so no polynomial division is needed.
    """
    if i < 1:
        raise DimensionError(f"Divided differences are indexed from 1, got {i}")
    if f.ring.ngens < i + 1:
        f = embed(f, i + 1)
    ring = f.ring
    result = {}
    for exp, coeff in f.items():
        a, b = exp[i-1], exp[i]
        if a == b:
            continue
        sign = 1
        if a < b:
            a, b, sign = b, a, -1
        for t in range(a - b):
            new = list(exp)
            new[i-1] = b + t
            new[i] = a - 1 - t
            new = tuple(new)
            value = result.get(new, ring.domain.zero) + (coeff if sign > 0 else -coeff)
            if value:
                result[new] = value
            else:
                result.pop(new, None)
    return ring.from_dict(result) if result else ring.zero

def apply_word(word: Sequence[int], f: MultiPoly) -> MultiPoly:
    """Applies the divided differences of a word: d_{a1} d_{a2} ... d_{ak} f.

    The last letter acts first. Stops early once the result vanishes.
    """
    for letter in reversed(tuple(word)):
        if not f:
            break
        f = divided_difference(letter, f)
    return f

def apply_operator(op: DiffOperator, f: MultiPoly, sign: int = 1) -> MultiPoly:
    """Applies a constant coefficient differential operator to f.

    Each exponent e of ``op`` acts as the derivative with multi-index e.
    With ``sign=-1`` the i-th symbol acts as minus the i-th partial derivative.
    """
    if op.ring.ngens > f.ring.ngens:
        f = embed(f, op.ring.ngens)
    ring = f.ring
    result = ring.zero
    for exp, coeff in op.items():
        term = f
        for index, power in enumerate(exp):
            if power:
                term = partial_derivative(term, index, power)
            if not term:
                break
        if not term:
            continue
        factor = coeff * to_coefficient((-1) ** sum(exp)) if sign < 0 else coeff
        result += term.mul_ground(factor)
    return result

def check_exact_quotient(i: int, f: MultiPoly) -> MultiPoly:
    """Computes the divided difference through polynomial division and verifies it matches the direct one.

    Used as an independent check of ``divided_difference``.
    """
    if f.ring.ngens < i + 1:
        f = embed(f, i + 1)
    x = f.ring.gens
    quotient = (f - swap_variables(f, i)).exquo(x[i-1] - x[i])
    verify(quotient == divided_difference(i, f), "Divided difference d%s disagrees with exact division", i)
    return quotient
