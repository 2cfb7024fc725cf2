"Exact multivariate polynomial arithmetic, built on sympy's sparse polynomial rings."

from .ring import (
    MultiPoly,
    DiffOperator,
    poly_ring,
    gens,
    zero,
    one,
    from_terms,
    monomial,
    terms,
    integer_terms,
    sorted_terms,
    embed,
    align,
    add,
    multiply,
    scale,
    evaluate,
    coefficient_of,
    constant_term,
    leading_exponent,
    total_degree,
    is_homogeneous,
    swap_variables,
    is_symmetric,
    poly_arith,
    to_coefficient,
)
from .operators import partial_derivative, divided_difference, apply_word, apply_operator, check_exact_quotient
from .symmetric import sym_generators, elementary, complete, alternant, vandermonde, permutation_sign
