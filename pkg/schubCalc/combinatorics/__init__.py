"Partitions, tableaux, permutations and the other indexing sets every computation runs over."

from .partitions import (
    Partition,
    Box,
    as_partition,
    partitions_in_box,
    partitions_of,
    complement,
    contains,
    hooks_and_syt_count,
)
from .tableaux import Tableau, ssyt_enumerate, syt_enumerate
from .permutations import (
    Permutation,
    ReducedWord,
    as_permutation,
    identity,
    longest,
    transposition,
    simple,
    compose,
    inverse,
    embed,
    all_permutations,
    perm_length,
    descents,
    lehmer_code,
    perm_from_code,
    rank_function,
    bruhat_leq,
    bruhat_covers,
    lower_interval,
    word_product,
    is_reduced_word,
    reduced_word,
)
from .qseries import q_integer, q_factorial, q_binomial
from .finitefield import subspaces, grassmannian_point_count, flag_point_count
