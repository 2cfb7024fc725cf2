"""
The cohomology ring of the complete flag variety Fl(n) in the basis of Schubert classes sigma_w, w in S_n.

Schubert polynomials come from divided differences applied to the staircase monomial.
Structure constants are read off with divided differences: if f = sum c_u S_u, then c_u is the constant term of d_u f.
Polynomials for S_n live in max(n-1, 1) variables.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping, Optional, Union

import schubCalc
from schubCalc import DomainError
from schubCalc.helpers import DimensionError, DegreeMismatchError, verify
from schubCalc.configuration import get_config
from schubCalc.combinatorics import (
    Permutation,
    as_permutation,
    longest,
    compose,
    inverse,
    embed as embed_permutation,
    all_permutations,
    perm_length,
    perm_from_code,
    reduced_word,
    simple,
    flag_point_count,
)
from schubCalc.combinatorics.qseries import q_ring, q_factorial
from schubCalc.polynomials import (
    MultiPoly,
    poly_ring,
    monomial,
    embed,
    apply_word,
    divided_difference,
    constant_term,
    integer_terms,
    is_homogeneous,
    to_coefficient,
    evaluate,
    from_terms,
)
from schubCalc.grassmannian import DualityMatrix

_LOGGER = schubCalc.getLogger(__name__)


def flag_nvars(n: int) -> int:
    "Number of variables Schubert polynomials of S_n are written in"
    return max(n - 1, 1)

def staircase(n: int) -> MultiPoly:
    "x1^(n-1) x2^(n-2) ... x_{n-1}"
    return monomial(tuple(range(n - 1, 0, -1)), flag_nvars(n))

def _restrict(u: Permutation, n: int) -> Optional[Permutation]:
    "u as an element of S_n, or None if u moves something above n"
    if any(u(i) != i for i in range(n + 1, u.n + 1)):
        return None
    return Permutation(u.images[:n])


@dataclass(frozen=True)
class FlClassSum:
    """An integer combination of Schubert classes of Fl(n).

    ``terms`` maps permutations of S_n to nonzero coefficients.
    """

    n: int
    terms: Mapping[Permutation, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"Fl(n) needs n >= 1, got {self.n}")
        cleaned: dict[Permutation, int] = {}
        for w, coeff in self.terms.items():
            w = as_permutation(w)
            if w.n != self.n:
                raise DimensionError(f"{w} is not in S_{self.n}")
            cleaned[w] = cleaned.get(w, 0) + int(coeff)
        cleaned = {w: c for w, c in sorted(cleaned.items(), key=lambda item: (perm_length(item[0]), item[0].images)) if c}
        object.__setattr__(self, "terms", MappingProxyType(cleaned))

    @classmethod
    def basis(cls, w: Union[Permutation, str]) -> "FlClassSum":
        w = as_permutation(w)
        return cls(w.n, {w: 1})

    def _check_context(self, other: "FlClassSum"):
        if self.n != other.n:
            raise DegreeMismatchError(f"Classes live in different flag varieties: Fl({self.n}) and Fl({other.n})")

    def __add__(self, other: "FlClassSum") -> "FlClassSum":
        self._check_context(other)
        terms = dict(self.terms)
        for w, coeff in other.terms.items():
            terms[w] = terms.get(w, 0) + coeff
        return FlClassSum(self.n, terms)

    def __mul__(self, other: "FlClassSum") -> "FlClassSum":
        return flag_product(self, other)

    def coefficient(self, w) -> int:
        return self.terms.get(as_permutation(w), 0)

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"S[{w}]" if c == 1 else f"{c}*S[{w}]" for w, c in self.terms.items())


@dataclass(frozen=True)
class SchubertPoly:
    "The Schubert polynomial of ``w``, in x1..x_{n-1}"

    w: Permutation
    poly: MultiPoly

    @property
    def degree(self) -> int:
        return perm_length(self.w)

    def __str__(self):
        return str(self.poly)


def _cross_check() -> bool:
    return get_config().engine.cross_check

@lru_cache(maxsize=None)
def _schubert(w: Permutation) -> MultiPoly:
    n = w.n
    start = embed(staircase(n), max(n, 1))
    target = compose(inverse(w), longest(n))
    word = reduced_word(target, "largest")
    poly = apply_word(word.letters, start)
    if _cross_check():
        other = reduced_word(target, "smallest")
        if other.letters != word.letters:
            verify(apply_word(other.letters, start) == embed(poly, start.ring.ngens),
                   "Schubert polynomial of %s depends on the reduced word: %s and %s disagree", w, word, other)
            _LOGGER.verbose(f"Schubert polynomial of {w} agrees for words {word} and {other}")
    poly = embed(poly, flag_nvars(n))

    ## positivity, homogeneity and staircase dominance
    coefficients = integer_terms(poly)
    verify(all(c > 0 for c in coefficients.values()), "Schubert polynomial of %s has a negative coefficient", w)
    verify(is_homogeneous(poly, perm_length(w)), "Schubert polynomial of %s is not homogeneous of degree %s", w, perm_length(w))
    verify(all(e <= n - 1 - i for exp in coefficients for i, e in enumerate(exp)),
           "Schubert polynomial of %s has a monomial outside the staircase", w)
    _LOGGER.debug(f"Computed the Schubert polynomial of {w} from the word {word}")
    return poly

def schubert_polynomial(w: Union[Permutation, str]) -> SchubertPoly:
    """The Schubert polynomial of w: the divided differences along a reduced word of w^-1 w0, applied to the staircase monomial.

    With ``engine.cross_check`` on, a second reduced word is used whenever one exists and both results must agree.
    """
    w = as_permutation(w)
    return SchubertPoly(w, _schubert(w))

def schubert_poly_in(w: Permutation, nvars: int) -> MultiPoly:
    "The Schubert polynomial of w moved into ``nvars`` variables"
    return embed(_schubert(as_permutation(w)), nvars)


def monk_multiply(x: FlClassSum, i: int) -> FlClassSum:
    """Multiplies by sigma_{s_i} with Monk's rule.

    sigma_w goes to the sum of sigma_{w t_jk} over j <= i < k for which w t_jk is one longer than w.
    That is the case exactly when w(j) < w(k) and no position m between j and k has w(j) < w(m) < w(k).
    """
    n = x.n
    if not 1 <= i <= n - 1:
        raise DomainError(f"Monk's rule in Fl({n}) needs 1 <= i <= {n - 1}, got {i}")
    terms: dict[Permutation, int] = {}
    for w, coeff in x.terms.items():
        for j in range(1, i + 1):
            for k in range(i + 1, n + 1):
                a, b = w(j), w(k)
                if a > b or any(a < w(m) < b for m in range(j + 1, k)):
                    continue
                images = list(w.images)
                images[j-1], images[k-1] = b, a
                new = Permutation(tuple(images))
                verify(perm_length(new) == perm_length(w) + 1, "Monk term %s of %s does not raise the length by one", new, w)
                terms[new] = terms.get(new, 0) + coeff
    return FlClassSum(n, terms)

def extract_coefficients(f: MultiPoly, perms) -> dict[Permutation, Fraction]:
    "The coefficient of S_u in f for every u in ``perms``: the constant term of d_u f"
    result = {}
    for u in perms:
        value = constant_term(apply_word(reduced_word(u).letters, f))
        if value:
            result[u] = value
    return result

@lru_cache(maxsize=None)
def _basis_product(w: Permutation, v: Permutation, ambient: int) -> tuple[tuple[Permutation, int], ...]:
    f = schubert_poly_in(w, flag_nvars(ambient)) * schubert_poly_in(v, flag_nvars(ambient))
    degree = perm_length(w) + perm_length(v)
    candidates = [u for u in all_permutations(ambient) if perm_length(u) == degree]
    coefficients = extract_coefficients(f, candidates)
    result = []
    for u, value in coefficients.items():
        verify(value.denominator == 1 and value > 0, "Structure constant of S[%s] in S[%s]*S[%s] is %s", u, w, v, value)
        result.append((u, value.numerator))
    _LOGGER.debug(f"S[{w}] * S[{v}] in S_{ambient}: {len(result)} terms")
    return tuple(result)

def flag_product(x: FlClassSum, y: FlClassSum) -> FlClassSum:
    """The product in the cohomology ring of Fl(n).

    For basis classes the coefficient of sigma_u in sigma_w * sigma_v is the constant term of d_u (S_w S_v), for u in S_n of length l(w) + l(v).
    With ``engine.cross_check`` on, each basis product is compared against lex peeling of the polynomial product.
    """
    x._check_context(y)
    n = x.n
    terms: dict[Permutation, int] = {}
    for w, a in x.terms.items():
        for v, b in y.terms.items():
            key = (w, v) if w.images <= v.images else (v, w)
            product = _basis_product(*key, n)
            if _cross_check():
                f = schubert_poly_in(w, flag_nvars(n)) * schubert_poly_in(v, flag_nvars(n))
                peeled = restrict_expansion(schubert_expand(f, n), n)
                verify(peeled == {u: Fraction(c) for u, c in product},
                       "Divided difference and peeling expansions of S[%s]*S[%s] disagree", w, v)
            for u, c in product:
                terms[u] = terms.get(u, 0) + a * b * c
    return FlClassSum(n, terms)

def schubert_product_expansion(w: Permutation, v: Permutation) -> FlClassSum:
    """The expansion of the polynomial S_w * S_v in Schubert polynomials of S_2n.

    No quotient is taken: the sum of c_u S_u equals the product polynomial, which is verified.
    """
    w, v = as_permutation(w), as_permutation(v)
    if w.n != v.n:
        raise DegreeMismatchError(f"Permutations of different degrees {w.n} and {v.n}")
    ambient = 2 * w.n
    we, ve = embed_permutation(w, ambient), embed_permutation(v, ambient)
    expansion = FlClassSum(ambient, dict(_basis_product(we, ve, ambient)))
    nvars = flag_nvars(ambient)
    total = sum((schubert_poly_in(u, nvars).mul_ground(to_coefficient(c)) for u, c in expansion.terms.items()),
                poly_ring(nvars).zero)
    verify(total == schubert_poly_in(w, nvars) * schubert_poly_in(v, nvars),
           "Schubert expansion of S[%s]*S[%s] does not sum back to the product", w, v)
    return expansion


def flag_poincare(n: int) -> MultiPoly:
    """The Poincare polynomial of Fl(n): (1-q)(1-q^2)...(1-q^n) / (1-q)^n, by exact division.

    Checked against the length generating function of S_n.
    """
    if n < 1:
        raise DomainError(f"Fl(n) needs n >= 1, got {n}")
    ring = q_ring()
    q, = ring.gens
    numerator = ring.one
    for i in range(1, n + 1):
        numerator *= ring.one - q**i
    result = numerator.exquo((ring.one - q) ** n)
    counts: dict[tuple[int], int] = {}
    for w in all_permutations(n):
        counts[(perm_length(w),)] = counts.get((perm_length(w),), 0) + 1
    verify(result == from_terms(counts, 1, "q"), "Poincare polynomial of Fl(%s) disagrees with the length count", n)
    verify(result == q_factorial(n), "Poincare polynomial of Fl(%s) is not the q-factorial", n)
    return result

def flag_points_over_field(n: int, q: int = 2) -> int:
    "Value of the Poincare polynomial at the prime q, checked against a brute force count of flags over GF(q)"
    value = evaluate(flag_poincare(n), [q])
    counted = flag_point_count(n, q)
    verify(value == counted, "Poincare polynomial of Fl(%s) at q=%s is %s but %s flags were counted", n, q, value, counted)
    return counted

def stability_check(w: Union[Permutation, str], n: Optional[int] = None) -> bool:
    "True if the Schubert polynomial of w x 1 in S_{n+1} equals the one of w in S_n"
    w = as_permutation(w)
    n = n or w.n
    if w.n != n:
        raise DimensionError(f"{w} is not in S_{n}")
    bigger = schubert_poly_in(embed_permutation(w, n + 1), flag_nvars(n + 1))
    return bigger == schubert_poly_in(w, flag_nvars(n + 1))


def schubert_expand(f: MultiPoly, n: int = 1) -> dict[Permutation, Fraction]:
    """Expands any polynomial in Schubert polynomials by peeling.

    The lex smallest monomial of S_u is x^code(u), and no other S_v with a different code has a smaller one.
    So the lex smallest monomial x^e of the remainder identifies u by its code e, and c * S_u is subtracted.
    Permutations are returned in the common symmetric group S_m, m >= n, that holds all of them.
    """
    remainder = f
    found: dict[tuple[int, ...], Fraction] = {}
    steps = 0
    while remainder:
        exponent = min(remainder.keys())
        coeff = Fraction(remainder[exponent].numerator, remainder[exponent].denominator)
        size = max([len(exponent) + 1] + [i + 1 + e for i, e in enumerate(exponent)])
        u = perm_from_code(exponent, size)
        found[exponent] = coeff
        term = embed(schubert_poly_in(u, flag_nvars(size)), max(remainder.ring.ngens, flag_nvars(size)))
        remainder = embed(remainder, term.ring.ngens) - term.mul_ground(to_coefficient(coeff))
        steps += 1
    _LOGGER.verbose(f"Peeled {steps} Schubert polynomials")

    ambient = max([n] + [max(len(e) + 1, max((i + 1 + c for i, c in enumerate(e)), default=1)) for e in found])
    return {perm_from_code(e, ambient): c for e, c in found.items()}

def restrict_expansion(expansion: Mapping[Permutation, Fraction], n: int) -> dict[Permutation, Fraction]:
    "The terms of an expansion whose permutation lies in S_n, as permutations of S_n"
    result = {}
    for u, c in expansion.items():
        small = _restrict(u, n) if u.n >= n else embed_permutation(u, n)
        if small is not None:
            result[small] = c
    return result

def borel_quotient_residue(f: MultiPoly, n: int) -> MultiPoly:
    """A representative of f modulo the ideal generated by symmetric polynomials without constant term.

    f is expanded in Schubert polynomials and only the S_u with u in S_n are kept; all of them lie in the span of monomials under the staircase.

    Parameters
    ----------
    f : MultiPoly
        A polynomial in at most n variables
    n : int
        Degree of the flag variety

    Returns
    -------
    MultiPoly
        The residue, in max(n-1, 1) variables
    """
    if n < 1:
        raise DomainError(f"Fl(n) needs n >= 1, got {n}")
    if f.ring.ngens > n:
        f = embed(f, n)
    f = embed(f, max(n, 1))
    coefficients = extract_coefficients(f, all_permutations(n))
    nvars = flag_nvars(n)
    residue = poly_ring(nvars).zero
    for u, c in coefficients.items():
        residue += schubert_poly_in(u, nvars).mul_ground(to_coefficient(c))
    verify(all(e <= n - 1 - i for exp in residue.keys() for i, e in enumerate(exp)),
           "Residue modulo the Borel ideal has a monomial outside the staircase")
    if _cross_check():
        verify(restrict_expansion(schubert_expand(f, n), n) == coefficients,
               "Divided difference and peeling residues disagree in Fl(%s)", n)
    return residue


def duality_matrix(n: int) -> DualityMatrix:
    """Coefficient of sigma_w0 in sigma_v * sigma_u over all pairs in S_n.

    Verified to be 1 exactly when u = w0 v and 0 otherwise.
    """
    perms = tuple(all_permutations(n))
    w0 = longest(n)
    top = perm_length(w0)
    entries = []
    for v in perms:
        row = []
        for u in perms:
            if perm_length(v) + perm_length(u) != top:
                row.append(0)
                continue
            value = flag_product(FlClassSum.basis(v), FlClassSum.basis(u)).coefficient(w0)
            verify(value == (1 if u == compose(w0, v) else 0), "Pairing of S[%s] and S[%s] in Fl(%s) is %s", v, u, n, value)
            row.append(value)
        entries.append(tuple(row))
    return DualityMatrix(perms, perms, tuple(entries))

def divided_difference_recursion_check(w: Union[Permutation, str], i: int) -> bool:
    "True if d_i S_w is S_{w s_i} when w s_i is shorter than w, and 0 otherwise"
    w = as_permutation(w)
    if not 1 <= i < w.n:
        raise DomainError(f"s_{i} is not a simple transposition of S_{w.n}")
    nvars = flag_nvars(w.n)
    image = divided_difference(i, schubert_poly_in(w, max(nvars, i + 1)))
    shorter = compose(w, simple(i, w.n))
    if perm_length(shorter) == perm_length(w) - 1:
        expected = schubert_poly_in(shorter, image.ring.ngens)
    else:
        expected = image.ring.zero
    return image == expected
