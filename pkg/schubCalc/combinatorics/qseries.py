"""
q-analogues: q-integers, q-factorials and q-binomial coefficients, as polynomials in the single variable q.
"""

from math import comb

from schubCalc import DomainError
from schubCalc.helpers import verify
from schubCalc.polynomials import MultiPoly, poly_ring, evaluate



def q_ring():
    return poly_ring(1, "q")

def q_integer(m: int) -> MultiPoly:
    "[m]_q = 1 + q + ... + q^(m-1)"
    if m < 0:
        raise DomainError(f"q-integers are defined for m >= 0, got {m}")
    q, = q_ring().gens
    return sum((q**i for i in range(m)), q_ring().zero)

def q_factorial(m: int) -> MultiPoly:
    "[m]_q! = [1]_q [2]_q ... [m]_q"
    result = q_ring().one
    for i in range(1, m + 1):
        result *= q_integer(i)
    return result

def q_binomial(n: int, k: int) -> MultiPoly:
    """The Gaussian binomial coefficient.

    Computed as (q^n - 1)(q^n - q)...(q^n - q^(k-1)) divided by (q^k - 1)(q^k - q)...(q^k - q^(k-1)), with the division checked to be exact.
    Its value at q = 1 is binomial(n, k).
    """
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"q-binomial needs 0 <= k <= n, got n={n}, k={k}")
    ring = q_ring()
    q, = ring.gens
    numerator = ring.one
    denominator = ring.one
    for i in range(k):
        numerator *= q**n - q**i
        denominator *= q**k - q**i
    result = numerator.exquo(denominator)
    verify(evaluate(result, [1]) == comb(n, k), "q-binomial (%s,%s) does not specialize to the binomial coefficient", n, k)
    return result
