"""
Small library with helper functions for schubCalc.
Holds the exception hierarchy, the verification helper and the parsers for the literals used on the command line.
Does not import any of the computational modules, so it can be imported from anywhere.
"""
import logging
from fractions import Fraction
from typing import Union, Sequence

from . import DomainError

_LOGGER = logging.getLogger("schubCalc")

class SchubCalcError(Exception):
    "Base Exception for schubCalc"

class ConfigError(SchubCalcError):
    "Something is wrong with the configuration"

class DimensionError(SchubCalcError, DomainError):
    "A shape does not fit its box, or the dimensions of two entities do not agree"

class DegreeMismatchError(DimensionError):
    "Two classes were combined whose degrees do not allow the requested operation"

class VerificationError(SchubCalcError, AssertionError):
    "Two independent computations disagreed, or a checked invariant failed"

class UsageError(SchubCalcError):
    "A command line literal could not be parsed, or a size cap was exceeded"


def verify(condition: bool, message: str, *args) -> None:
    """Checks an invariant, logs and raises a VerificationError if it does not hold.

    Parameters
    ----------
    condition : bool
        The value to check
    message : str
        Message for the log and the exception, formatted with ``args`` in logging (%) style
    """
    if condition:
        return
    if args:
        message = message % args
    _LOGGER.error(message)
    raise VerificationError(message)


def as_fraction(value) -> Fraction:
    """Converts an integer, Fraction, string like '3/4' or a ground domain element into a Fraction.

    Domain elements (like those of sympy's QQ) are converted through their numerator and denominator.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError as exce:
            raise UsageError(f"{value!r} is not a rational number") from exce
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    raise DomainError(f"Cannot interpret {value!r} as a rational number")


def parse_int_list(literal: Union[str, Sequence[int]], what: str = "list") -> tuple[int, ...]:
    "Parses '1,2,3', '[1,2,3]' or '1 2 3' into a tuple of ints. '[]' and '' give the empty tuple."
    if not isinstance(literal, str):
        try:
            return tuple(int(v) for v in literal)
        except (TypeError, ValueError) as exce:
            raise UsageError(f"Malformed {what}: {literal!r}") from exce

    stripped = literal.strip()
    if stripped.startswith("[") or stripped.startswith("("):
        if not (stripped.endswith("]") or stripped.endswith(")")):
            raise UsageError(f"Malformed {what}: unbalanced brackets in {literal!r}")
        stripped = stripped[1:-1]
    stripped = stripped.replace(",", " ")
    try:
        return tuple(int(v) for v in stripped.split())
    except ValueError as exce:
        raise UsageError(f"Malformed {what}: {literal!r}") from exce


def split_top_level(literal: str, sep: str = ",") -> list[str]:
    "Splits a string on ``sep``, ignoring separators inside brackets"
    items = []
    depth = 0
    current = ""
    for char in literal:
        if char in "[(":
            depth += 1
        elif char in "])":
            depth -= 1
            if depth < 0:
                raise UsageError(f"Unbalanced brackets in {literal!r}")
        if char == sep and depth == 0:
            items.append(current.strip())
            current = ""
        else:
            current += char
    if depth != 0:
        raise UsageError(f"Unbalanced brackets in {literal!r}")
    if current.strip():
        items.append(current.strip())
    return items
