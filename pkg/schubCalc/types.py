"Types for schubCalc, mainly the shapes of the payloads the command line writes"

from typing import TypedDict

EncodedInteger = str
"An integer written as a decimal string, so its size is not limited by the json reader"

EncodedRational = str
"A rational written as 'p/q', or as 'p' when it is an integer"


class polynomialpayload(TypedDict):
    "A polynomial as written to json"

    variables: list[str]
    "Names of the variables, in the order the exponents use"

    terms: list[tuple[list[EncodedInteger], EncodedRational]]
    "Pairs of exponent vector and coefficient, lex leading term first"

    text: str
    "The polynomial in the same form the text output uses"


class expansionpayload(TypedDict):
    """A linear combination of basis elements.

    Keys are partitions like ``[2,1]`` or permutations in one line notation like ``1432``.
    """

    terms: dict[str, EncodedInteger]
    "Basis element to coefficient; absent elements have coefficient 0"

