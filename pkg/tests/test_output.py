
import json
from fractions import Fraction

import pytest

from schubCalc.helpers import UsageError
from schubCalc.combinatorics import Partition, Permutation, Box, partitions_in_box, all_permutations
from schubCalc.polynomials import from_terms
from schubCalc.output import (
    CommandResult,
    encode_rational,
    encode_polynomial,
    encode_key,
    encode_value,
    format_output,
    decode_rational,
    decode_expansion,
    decode_flag_expansion,
    decode_polynomial,
)


def test_encode_rational():
    assert encode_rational(3) == "3"
    assert encode_rational(Fraction(-1, 2)) == "-1/2"
    assert encode_rational(Fraction(4, 2)) == "2"
    assert decode_rational("-1/2") == Fraction(-1, 2)

def test_encode_keys():
    assert encode_key(Partition((2, 1))) == "[2,1]"
    assert encode_key(Permutation.parse("132")) == "132"
    assert encode_key((1, 2)) == "(1,2)"
    assert encode_key("text") == "text"

def test_encode_value_uses_strings_for_numbers():
    payload = {"count": 3, "items": [Partition((1,)), Fraction(1, 3)], "ok": True, "none": None}
    assert encode_value(payload) == {"count": "3", "items": ["[1]", "1/3"], "ok": True, "none": None}

def test_encode_polynomial():
    f = from_terms({(2, 0): 1, (0, 1): Fraction(-1, 2)}, 2)
    encoded = encode_polynomial(f)
    assert encoded["variables"] == ["x1", "x2"]
    assert encoded["terms"] == [[["2", "0"], "1"], [["0", "1"], "-1/2"]]
    assert encoded["text"] == str(f)


def test_format_output_modes():
    result = CommandResult(("gr", "product"), {"terms": {Partition((2, 2)): 2}}, "2*s[2,2]")
    assert format_output(result, "json") == b'{"terms": {"[2,2]": "2"}}\n'
    assert format_output(result, "text") == b"2*s[2,2]\n"
    assert json.loads(format_output(result, "json", indent=2)) == {"terms": {"[2,2]": "2"}}

def test_format_output_sorts_keys():
    result = CommandResult(("gr", "product"), {"terms": {Partition((2,)): 1, Partition((1, 1)): 1}})
    assert format_output(result, "json") == b'{"terms": {"[1,1]": "1", "[2]": "1"}}\n'

def test_format_output_rejects_unknown_mode():
    with pytest.raises(UsageError):
        format_output(CommandResult(("gr", "product")), "xml")


def test_expansions_read_back(rng):
    basis = partitions_in_box(Box(3, 3))
    for _ in range(5):
        terms = {rng.choice(basis): rng.randint(1, 50) for _ in range(4)}
        document = format_output(CommandResult(("gr", "product"), {"terms": terms}), "json")
        assert decode_expansion(json.loads(document)) == terms

def test_flag_expansions_read_back(rng):
    perms = all_permutations(4)
    terms = {rng.choice(perms): rng.randint(1, 9) for _ in range(4)}
    document = format_output(CommandResult(("flag", "product"), {"terms": terms}), "json")
    assert decode_flag_expansion(json.loads(document)) == terms

def test_polynomials_read_back(rng):
    for nvars in (1, 3):
        f = from_terms(
            {tuple(rng.randint(0, 3) for _ in range(nvars)): Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(5)},
            nvars,
        )
        document = format_output(CommandResult(("sym", "schur"), {"poly": f}), "json")
        assert decode_polynomial(json.loads(document)["poly"]) == f
    q = from_terms({(2,): 1}, 1, "q")
    assert decode_polynomial(encode_polynomial(q)) == q
