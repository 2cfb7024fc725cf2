"""
Writing command results to stdout, and reading the json form back.

json output is a single document with sorted keys. Integers are written as decimal strings and rationals as 'p/q', so nothing is lost to float conversion.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Literal, Mapping, Optional

from sympy.polys.rings import PolyElement

from schubCalc.helpers import as_fraction, UsageError
from schubCalc.combinatorics import Partition, Permutation
from schubCalc.polynomials import MultiPoly, poly_ring, sorted_terms, to_coefficient

from .types import polynomialpayload, expansionpayload


@dataclass
class CommandResult:
    "The outcome of one command: what was asked, the payload, and its human readable form"

    command: tuple[str, ...]
    "The command and action that were run, like ('gr', 'product')"

    payload: dict = field(default_factory=dict)
    "The structured result; encoded for json output"

    text: str = ""
    "The result as text output shows it"

    status: int = 0
    "Exit status"


def encode_rational(value) -> str:
    frac = as_fraction(value)
    return str(frac.numerator) if frac.denominator == 1 else f"{frac.numerator}/{frac.denominator}"

def encode_polynomial(f: MultiPoly) -> polynomialpayload:
    return {
        "variables": [str(s) for s in f.ring.symbols],
        "terms": [[[str(e) for e in exp], encode_rational(c)] for exp, c in sorted_terms(f)],
        "text": str(f),
    }

def encode_key(key) -> str:
    if isinstance(key, str):
        return key
    if isinstance(key, tuple):
        return "(" + ",".join(encode_key(k) for k in key) + ")"
    return str(key)

def encode_value(value) -> Any:
    "Turns a payload into plain json types: integers become decimal strings, polynomials their term lists"
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return encode_rational(value)
    if isinstance(value, PolyElement):
        return encode_polynomial(value)
    if isinstance(value, Mapping):
        return {encode_key(k): encode_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [encode_value(v) for v in items]
    if isinstance(value, (Partition, Permutation)):
        return str(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return encode_rational(value)
    return str(value)

def format_output(result: CommandResult, mode: Literal["json", "text"] = "text", indent: Optional[int] = None) -> bytes:
    "The bytes written to stdout for the result"
    if mode == "json":
        document = json.dumps(encode_value(result.payload), sort_keys=True, indent=indent)
    elif mode == "text":
        document = result.text
    else:
        raise UsageError(f"Output mode must be json or text, got {mode!r}")
    return (document + "\n").encode("utf-8")


def decode_integer(value: str) -> int:
    return int(value)

def decode_rational(value: str) -> Fraction:
    return Fraction(value)

def decode_expansion(payload: expansionpayload) -> dict[Partition, int]:
    "Reads back ``{'terms': {'[2,1]': '1'}}`` as a partition to coefficient dict"
    return {Partition.parse(key): decode_integer(value) for key, value in payload["terms"].items()}

def decode_flag_expansion(payload: expansionpayload) -> dict[Permutation, int]:
    return {Permutation.parse(key): decode_integer(value) for key, value in payload["terms"].items()}

def decode_polynomial(payload: polynomialpayload) -> MultiPoly:
    "Rebuilds a polynomial from its json form; the variable names fix the number of variables and their prefix"
    variables = payload["variables"]
    prefix = variables[0].rstrip("0123456789") if variables else "x"
    ring = poly_ring(len(variables), prefix)
    terms = {tuple(int(e) for e in exp): to_coefficient(decode_rational(c)) for exp, c in payload["terms"]}
    return ring.from_dict(terms) if terms else ring.zero
